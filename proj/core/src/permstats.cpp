#include "mahonian/permstats.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace mahonian {

// ------------------------------------------------------------ shared words

void add_cleared_product(int base, const std::vector<int>& shifts, MonomialTally& tally) {
  const VarId z = var("z");
  const VarId q = var("q");
  // (z-degree, total shift) -> multiplicity
  std::map<std::pair<int, int>, std::int64_t> terms{{{0, 0}, 1}};
  for (int s : shifts) {
    std::map<std::pair<int, int>, std::int64_t> next = terms;
    for (const auto& [key, count] : terms) {
      next[{key.first + 1, key.second + s}] += count;
    }
    terms = std::move(next);
  }
  for (const auto& [key, count] : terms) {
    const int q_exp = base - key.second;
    if (q_exp < 0) {
      throw std::logic_error("clearing denominators produced q^" + std::to_string(q_exp));
    }
    tally.add(Monomial{{z, static_cast<std::uint32_t>(key.first)},
                       {q, static_cast<std::uint32_t>(q_exp)}},
              count);
  }
}

// ----------------------------------------------------------- LaguerreWord

LaguerreWord::LaguerreWord(int n, std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (n < 0 || static_cast<std::size_t>(n) != letters_.size()) {
    throw std::invalid_argument("Laguerre word on [" + std::to_string(n) + "] needs " +
                                std::to_string(n) + " letters, got " +
                                std::to_string(letters_.size()));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const Letter& l : letters_) {
    if (l.is_hole()) {
      continue;
    }
    const int v = l.value();
    if (v < 1 || v > n) {
      throw std::invalid_argument("numeral " + std::to_string(v) + " outside [1, " +
                                  std::to_string(n) + "]");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("repeated numeral " + std::to_string(v));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

LaguerreWord LaguerreWord::parse(std::string_view text) {
  std::vector<Letter> letters;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "*") {
      letters.push_back(Letter::hole());
      continue;
    }
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad word token '" + token + "'");
    }
    if (used != token.size()) {
      throw std::invalid_argument("bad word token '" + token + "'");
    }
    letters.push_back(Letter::num(v));
  }
  const int n = static_cast<int>(letters.size());
  return LaguerreWord(n, std::move(letters));
}

LaguerreWord LaguerreWord::from_codes(const std::vector<int>& codes) {
  std::vector<Letter> letters;
  letters.reserve(codes.size());
  for (int c : codes) {
    letters.push_back(c == 0 ? Letter::hole() : Letter::num(c));
  }
  return LaguerreWord(static_cast<int>(codes.size()), std::move(letters));
}

int LaguerreWord::holes() const {
  return static_cast<int>(
      std::count_if(letters_.begin(), letters_.end(), [](Letter l) { return l.is_hole(); }));
}

std::vector<int> LaguerreWord::image_set() const {
  std::vector<int> out;
  for (const Letter& l : letters_) {
    if (!l.is_hole()) {
      out.push_back(l.value());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> LaguerreWord::to_codes() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    out.push_back(l.value());
  }
  return out;
}

std::string LaguerreWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += letters_[i].is_hole() ? std::string("*") : std::to_string(letters_[i].value());
  }
  return out;
}

// -------------------------------------------------------------- statistics

int between_inversions(std::span<const int> a, std::span<const int> b) {
  int count = 0;
  for (int x : a) {
    for (int y : b) {
      if (x > y) {
        ++count;
      }
    }
  }
  return count;
}

std::vector<int> rlmin_set(const LaguerreWord& w) {
  const int n = w.n();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 2, false);
  int smallest_missing = 1;
  std::vector<int> out;
  for (const Letter& l : w.letters()) {
    if (l.is_hole()) {
      continue;
    }
    const int v = l.value();
    if (v == smallest_missing) {
      out.push_back(v);
    }
    seen[static_cast<std::size_t>(v)] = true;
    while (smallest_missing <= n && seen[static_cast<std::size_t>(smallest_missing)]) {
      ++smallest_missing;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

StatRecord full_stats(const LaguerreWord& w) {
  const auto letters = w.letters();
  const int n = w.n();
  StatRecord s;
  s.des_set = descent_set(letters);
  s.inv_box = inv_box_vector(letters);
  for (int b : s.inv_box) {
    s.inv0 += b;
  }
  for (int i : s.des_set) {
    s.maj0 += i;
  }
  s.image_set = w.image_set();
  std::vector<int> complement;
  {
    std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
    for (int v : s.image_set) {
      present[static_cast<std::size_t>(v)] = true;
    }
    for (int v = 1; v <= n; ++v) {
      if (!present[static_cast<std::size_t>(v)]) {
        complement.push_back(v);
      }
    }
  }
  s.between = between_inversions(s.image_set, complement);
  s.inv = s.inv0 + s.between;
  s.maj = s.maj0 + s.between;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      if (letters[j] < letters[i]) {
        if (letters[i].is_hole()) {
          ++s.inv_holes;
        } else {
          ++s.inv_filled;
        }
      }
    }
  }
  s.rlmin_set = rlmin_set(w);
  return s;
}

Poly between_set_poly(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("between_set_poly: need 0 <= k <= n");
  }
  MonomialTally tally;
  const VarId q = var("q");
  for (const auto& b : hole_sets(n, k)) {
    std::vector<int> a;
    for (int v = 1, j = 0; v <= n; ++v) {
      if (j < static_cast<int>(b.size()) && b[static_cast<std::size_t>(j)] == v) {
        ++j;
      } else {
        a.push_back(v);
      }
    }
    tally.add(Monomial(q, static_cast<std::uint32_t>(between_inversions(a, b))));
  }
  return tally.to_poly();
}

LaguerreWord relabel_image(const LaguerreWord& w, std::vector<int> target) {
  const auto source = w.image_set();
  std::sort(target.begin(), target.end());
  if (target.size() != source.size()) {
    throw std::invalid_argument("relabel_image: target size differs from the image set");
  }
  std::vector<int> codes = w.to_codes();
  for (int& c : codes) {
    if (c != 0) {
      const auto rank = std::lower_bound(source.begin(), source.end(), c) - source.begin();
      c = target[static_cast<std::size_t>(rank)];
    }
  }
  return LaguerreWord::from_codes(codes);
}

// ------------------------------------------------------------- enumeration

Integer word_count(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("word_count: need 0 <= k <= n");
  }
  Integer out = binomial(n, k) * factorial(n);
  return Integer(out / factorial(k));
}

std::vector<std::vector<int>> hole_sets(int n, int k) {
  if (n < 0 || k < 0 || k > n || n > 30) {
    throw std::invalid_argument("hole_sets: need 0 <= k <= n <= 30");
  }
  std::vector<std::vector<int>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != k) {
      continue;
    }
    std::vector<int> set;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        set.push_back(i + 1);
      }
    }
    out.push_back(std::move(set));
  }
  return out;
}

WordStream::WordStream(WordSpace space) : space_(std::move(space)) {
  const int n = space_.n;
  const int k = space_.k;
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("word space needs 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  if (space_.image) {
    values_ = *space_.image;
    std::sort(values_.begin(), values_.end());
    if (std::adjacent_find(values_.begin(), values_.end()) != values_.end() ||
        static_cast<int>(values_.size()) != n - k ||
        (!values_.empty() && (values_.front() < 1 || values_.back() > n))) {
      throw std::invalid_argument("image set must hold n-k distinct numerals of [n]");
    }
  } else {
    for (int v = 1; v <= n; ++v) {
      values_.push_back(v);
    }
  }
  std::vector<std::vector<int>> holes;
  if (space_.holes) {
    auto h = *space_.holes;
    std::sort(h.begin(), h.end());
    if (std::adjacent_find(h.begin(), h.end()) != h.end() || static_cast<int>(h.size()) != k ||
        (!h.empty() && (h.front() < 1 || h.back() > n))) {
      throw std::invalid_argument("hole set must hold k distinct positions of [n]");
    }
    holes.push_back(std::move(h));
  } else {
    holes = hole_sets(n, k);
  }
  for (auto& h : holes) {
    std::vector<int> zero_based;
    for (int p : h) {
      zero_based.push_back(p - 1);
    }
    if (k == n) {
      chunks_.push_back({std::move(zero_based), 0});
      continue;
    }
    for (int v : values_) {
      chunks_.push_back({zero_based, v});
    }
  }
}

std::vector<LaguerreWord> enumerate_words(const WordSpace& space) {
  std::vector<LaguerreWord> out;
  WordStream(space).visit_all([&](const LaguerreWord& w) { out.push_back(w); });
  return out;
}

std::vector<LaguerreWord> enumerate_words(int n, int k) { return enumerate_words(WordSpace{n, k}); }

// ------------------------------------------------------------ distributions

int statistic_value(const StatRecord& s, QStatistic stat) {
  switch (stat) {
    case QStatistic::none:
      return 0;
    case QStatistic::inv:
      return s.inv;
    case QStatistic::maj:
      return s.maj;
    case QStatistic::inv0:
      return s.inv0;
    case QStatistic::maj0:
      return s.maj0;
    case QStatistic::tilde_inv_filled:
      return s.tilde_inv_filled();
  }
  throw std::invalid_argument("unknown statistic");
}

Poly distribution(const WordSpace& space, WeightSpec weight, unsigned jobs) {
  require_within_ceiling(space.n, "distribution");
  const WordStream stream(space);
  const VarId b = var("b");
  const VarId q = var("q");
  auto tally = parallel_reduce<MonomialTally>(
      stream.chunk_count(),
      [&](std::size_t c, MonomialTally& acc) {
        stream.visit_chunk(c, [&](const LaguerreWord& w) {
          const StatRecord s = full_stats(w);
          const auto e = static_cast<std::uint32_t>(statistic_value(s, weight.q_stat));
          const auto r = weight.rlmin ? static_cast<std::uint32_t>(s.rlmin()) : 0U;
          acc.add(Monomial{{b, r}, {q, e}});
        });
      },
      [](MonomialTally& into, MonomialTally&& from) { into.merge(std::move(from)); }, jobs);
  return tally.to_poly();
}

Poly distribution(int n, int k, WeightSpec weight, unsigned jobs) {
  return distribution(WordSpace{n, k}, weight, jobs);
}

Poly mahonian_stirling_product(int n, int k) { return q_binomial(n, k) * bq_product(k + 1, n); }

std::pair<Poly, Poly> hrw_sides(int n, int k, unsigned jobs) {
  require_within_ceiling(n, "hrw_sides");
  const WordStream stream(WordSpace{n, k});
  using Pair = std::pair<MonomialTally, MonomialTally>;
  auto sides = parallel_reduce<Pair>(
      stream.chunk_count(),
      [&](std::size_t c, Pair& acc) {
        stream.visit_chunk(c, [&](const LaguerreWord& w) {
          const StatRecord s = full_stats(w);
          add_hrw_inv_term(w.letters(), s.inv, acc.first);
          add_hrw_maj_term(s.maj, s.des(), acc.second);
        });
      },
      [](Pair& into, Pair&& from) {
        into.first.merge(std::move(from.first));
        into.second.merge(std::move(from.second));
      },
      jobs);
  return {sides.first.to_poly(), sides.second.to_poly()};
}

}  // namespace mahonian
