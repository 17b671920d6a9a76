#include "mahonian/carlitz.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mahonian/parallel.hpp"

namespace mahonian {

// ------------------------------------------------------------ MultisetWord

MultisetWord::MultisetWord(std::vector<int> multiplicities, std::vector<int> letters)
    : mult_(std::move(multiplicities)), letters_(std::move(letters)) {
  std::vector<int> seen(mult_.size(), 0);
  for (int m : mult_) {
    if (m < 0) {
      throw std::invalid_argument("negative multiplicity");
    }
  }
  for (int v : letters_) {
    if (v < 1 || v > static_cast<int>(mult_.size())) {
      throw std::invalid_argument("letter " + std::to_string(v) + " outside the alphabet [1, " +
                                  std::to_string(mult_.size()) + "]");
    }
    ++seen[static_cast<std::size_t>(v) - 1];
  }
  if (seen != mult_) {
    throw std::invalid_argument("letter counts do not match the multiplicities");
  }
}

MultisetWord MultisetWord::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad letter '" + token + "'");
    }
    if (used != token.size() || v < 1) {
      throw std::invalid_argument("bad letter '" + token + "'");
    }
    letters.push_back(v);
  }
  const int r = letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
  std::vector<int> mult(static_cast<std::size_t>(r), 0);
  for (int v : letters) {
    ++mult[static_cast<std::size_t>(v) - 1];
  }
  return MultisetWord(std::move(mult), std::move(letters));
}

std::vector<int> MultisetWord::sorted() const {
  std::vector<int> out = letters_;
  std::sort(out.begin(), out.end());
  return out;
}

std::string MultisetWord::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i != 0) {
      out += ' ';
    }
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::vector<int> parse_alphabet(std::string_view text) {
  std::vector<int> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int m = -1;
    try {
      m = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad multiplicity '" + item + "'");
    }
    if (used != item.size() || m < 0) {
      throw std::invalid_argument("bad multiplicity '" + item + "'");
    }
    out.push_back(m);
  }
  return out;
}

Integer multiset_count(const std::vector<int>& multiplicities) {
  int n = 0;
  Integer denom = 1;
  for (int m : multiplicities) {
    n += m;
    denom *= factorial(m);
  }
  return Integer(factorial(n) / denom);
}

std::vector<MultisetWord> enumerate_multiset(const std::vector<int>& multiplicities) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    if (multiplicities[i] < 0) {
      throw std::invalid_argument("negative multiplicity");
    }
    letters.insert(letters.end(), static_cast<std::size_t>(multiplicities[i]),
                   static_cast<int>(i) + 1);
  }
  std::vector<MultisetWord> out;
  do {
    out.emplace_back(multiplicities, letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<std::vector<int>> compositions(int n, int max_parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (max_parts >= 0 && static_cast<int>(current.size()) == max_parts) {
      return;
    }
    for (int part = 1; part <= remaining; ++part) {
      current.push_back(part);
      self(self, remaining - part);
      current.pop_back();
    }
  };
  if (n >= 0) {
    recurse(recurse, n);
  }
  return out;
}

// ------------------------------------------------------------------ b-code

std::vector<int> b_code(const MultisetWord& w) {
  const auto& letters = w.letters();
  // positions of each value, left to right, visited in sorted-word order
  std::vector<std::size_t> order(letters.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return letters[a] < letters[b]; });
  std::vector<int> code;
  code.reserve(letters.size());
  for (std::size_t p : order) {
    int count = 0;
    for (std::size_t j = p + 1; j < letters.size(); ++j) {
      if (letters[j] < letters[p]) {
        ++count;
      }
    }
    code.push_back(count);
  }
  return code;
}

MultisetWord word_from_b_code(const std::vector<int>& multiplicities, const std::vector<int>& code) {
  std::vector<int> sorted;
  for (std::size_t i = 0; i < multiplicities.size(); ++i) {
    sorted.insert(sorted.end(), static_cast<std::size_t>(multiplicities[i]),
                  static_cast<int>(i) + 1);
  }
  if (code.size() != sorted.size()) {
    throw std::invalid_argument("b-code length differs from the alphabet size");
  }
  // Insert letters in sorted order; the i-th goes to the rightmost slot with
  // exactly code[i] strictly smaller letters on its right.
  std::vector<int> word;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const int v = sorted[i];
    const int want = code[i];
    int smaller_right = 0;
    std::size_t slot = word.size();
    bool placed = false;
    // scan slots right to left
    for (std::size_t s = word.size() + 1; s-- > 0;) {
      if (s < word.size() && word[s] < v) {
        ++smaller_right;
      }
      if (smaller_right == want) {
        slot = s;
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw std::invalid_argument("invalid b-code entry " + std::to_string(want));
    }
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(slot), v);
  }
  MultisetWord out(multiplicities, word);
  if (b_code(out) != code) {
    throw std::invalid_argument("sequence is not a b-code of this alphabet");
  }
  return out;
}

// --------------------------------------------------------------- insertion

std::vector<int> insertion_slot_labels(const std::vector<int>& alpha) {
  const std::size_t len = alpha.size();
  std::vector<int> label(len + 1, -1);
  label[len] = 0;
  int next = 1;
  for (std::size_t s = len; s-- > 1;) {
    if (alpha[s - 1] > alpha[s]) {
      label[s] = next++;
    }
  }
  if (len > 0) {
    label[0] = next++;
  }
  for (std::size_t s = 1; s < len; ++s) {
    if (label[s] < 0) {
      label[s] = next++;
    }
  }
  return label;
}

std::vector<std::vector<int>> carlitz_trace(const MultisetWord& w) {
  const auto sorted = w.sorted();
  const auto code = b_code(w);
  std::vector<std::vector<int>> trace;
  std::vector<int> alpha;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const auto labels = insertion_slot_labels(alpha);
    const auto slot = static_cast<std::size_t>(
        std::find(labels.begin(), labels.end(), code[i]) - labels.begin());
    if (slot == labels.size()) {
      throw std::logic_error("b-code entry exceeds the slot labels");
    }
    alpha.insert(alpha.begin() + static_cast<std::ptrdiff_t>(slot), sorted[i]);
    trace.push_back(alpha);
  }
  return trace;
}

MultisetWord carlitz_psi(const MultisetWord& w) {
  if (w.size() == 0) {
    return w;
  }
  return MultisetWord(w.multiplicities(), carlitz_trace(w).back());
}

MultisetWord carlitz_psi_inverse(const MultisetWord& w) {
  // Peel off the last inserted letter: among the copies of the largest
  // value, the one whose slot carries the smallest label.
  std::vector<int> alpha = w.letters();
  std::vector<int> code(alpha.size(), 0);
  for (std::size_t i = alpha.size(); i-- > 1;) {
    const int top = *std::max_element(alpha.begin(), alpha.end());
    int best_label = -1;
    std::size_t best_pos = 0;
    for (std::size_t p = 0; p < alpha.size(); ++p) {
      if (alpha[p] != top) {
        continue;
      }
      std::vector<int> rest = alpha;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
      const int label = insertion_slot_labels(rest)[p];
      if (best_label < 0 || label < best_label) {
        best_label = label;
        best_pos = p;
      }
    }
    code[i] = best_label;
    alpha.erase(alpha.begin() + static_cast<std::ptrdiff_t>(best_pos));
  }
  return word_from_b_code(w.multiplicities(), code);
}

// -------------------------------------------------------------- statistics

std::vector<int> rlmin_multiset(const MultisetWord& w) {
  const auto& letters = w.letters();
  std::vector<int> out;
  std::vector<bool> seen(w.multiplicities().size() + 1, false);
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const int v = letters[i];
    if (seen[static_cast<std::size_t>(v)]) {
      continue;
    }
    seen[static_cast<std::size_t>(v)] = true;
    bool minimal = true;
    for (std::size_t j = i + 1; j < letters.size() && minimal; ++j) {
      minimal = v <= letters[j];
    }
    if (minimal) {
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Poly, Poly> wilson_sides(const std::vector<int>& multiplicities) {
  MonomialTally inv_side;
  MonomialTally maj_side;
  for (const auto& w : enumerate_multiset(multiplicities)) {
    const auto& letters = w.letters();
    add_hrw_inv_term(letters, inversions(letters), inv_side);
    add_hrw_maj_term(major_index(letters), static_cast<int>(descent_set(letters).size()),
                     maj_side);
  }
  return {inv_side.to_poly(), maj_side.to_poly()};
}

std::pair<Poly, Poly> macmahon_sides(const std::vector<int>& multiplicities) {
  const VarId q = var("q");
  MonomialTally inv_side;
  MonomialTally maj_side;
  for (const auto& w : enumerate_multiset(multiplicities)) {
    inv_side.add(Monomial(q, static_cast<std::uint32_t>(inversions(w.letters()))));
    maj_side.add(Monomial(q, static_cast<std::uint32_t>(major_index(w.letters()))));
  }
  return {inv_side.to_poly(), maj_side.to_poly()};
}

}  // namespace mahonian
