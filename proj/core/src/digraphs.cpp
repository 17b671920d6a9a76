#include "mahonian/digraphs.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include <nlohmann/json.hpp>

#include "mahonian/jacobi_rogers.hpp"
#include "mahonian/limits.hpp"

namespace mahonian {

// --------------------------------------------------------- LaguerreDigraph

LaguerreDigraph::LaguerreDigraph(int n, std::vector<int> succ)
    : succ_(std::move(succ)), pred_(succ_.size(), 0) {
  if (n < 0 || static_cast<std::size_t>(n) != succ_.size()) {
    throw std::invalid_argument("successor map must have n entries");
  }
  for (int i = 1; i <= n; ++i) {
    const int j = succ_[static_cast<std::size_t>(i) - 1];
    if (j == 0) {
      continue;
    }
    if (j < 1 || j > n) {
      throw std::invalid_argument("arrow " + std::to_string(i) + "->" + std::to_string(j) +
                                  " leaves [1, " + std::to_string(n) + "]");
    }
    int& p = pred_[static_cast<std::size_t>(j) - 1];
    if (p != 0) {
      throw std::invalid_argument("vertex " + std::to_string(j) + " has two incoming arrows");
    }
    p = i;
  }
}

LaguerreDigraph LaguerreDigraph::from_json(std::string_view text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    const int n = doc.at("n").get<int>();
    if (n < 0) {
      throw std::invalid_argument("negative vertex count");
    }
    std::vector<int> succ(static_cast<std::size_t>(n), 0);
    for (const auto& [key, value] : doc.at("succ").items()) {
      std::size_t used = 0;
      const int from = std::stoi(key, &used);
      if (used != key.size() || from < 1 || from > n) {
        throw std::invalid_argument("bad vertex '" + key + "'");
      }
      succ[static_cast<std::size_t>(from) - 1] = value.get<int>();
      if (succ[static_cast<std::size_t>(from) - 1] == 0) {
        throw std::invalid_argument("arrow target 0 for vertex " + key);
      }
    }
    return LaguerreDigraph(n, std::move(succ));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad digraph JSON: ") + e.what());
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("bad vertex label in digraph JSON");
  }
}

std::vector<std::pair<int, int>> LaguerreDigraph::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n(); ++i) {
    if (succ(i) != 0) {
      out.emplace_back(i, succ(i));
    }
  }
  return out;
}

std::string LaguerreDigraph::to_json() const {
  nlohmann::ordered_json doc;
  doc["n"] = n();
  doc["succ"] = nlohmann::ordered_json::object();
  for (const auto& [i, j] : arrows()) {
    doc["succ"][std::to_string(i)] = j;
  }
  return doc.dump();
}

LaguerreDigraph word_digraph(const LaguerreWord& w) {
  return LaguerreDigraph(w.n(), w.to_codes());
}

LaguerreWord digraph_word(const LaguerreDigraph& g) {
  std::vector<int> codes(static_cast<std::size_t>(g.n()));
  for (int i = 1; i <= g.n(); ++i) {
    codes[static_cast<std::size_t>(i) - 1] = g.succ(i);
  }
  return LaguerreWord::from_codes(codes);
}

// ---------------------------------------------------------- classification

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::pk:
      return "pk";
    case VertexClass::val:
      return "val";
    case VertexClass::da:
      return "da";
    case VertexClass::dd:
      return "dd";
    case VertexClass::fp:
      return "fp";
  }
  return "?";
}

namespace {

VertexClass classify_vertex(int p, int i, int s) {
  if (p == i && s == i) {
    return VertexClass::fp;
  }
  if (p < i && s < i) {
    return VertexClass::pk;
  }
  if (p > i && s > i) {
    return VertexClass::val;
  }
  if (p < i) {
    return VertexClass::da;
  }
  return VertexClass::dd;
}

void count_class(VertexClass c, DigraphStats& s) {
  switch (c) {
    case VertexClass::pk:
      ++s.pk;
      break;
    case VertexClass::val:
      ++s.val;
      break;
    case VertexClass::da:
      ++s.da;
      break;
    case VertexClass::dd:
      ++s.dd;
      break;
    case VertexClass::fp:
      ++s.fp;
      break;
  }
}

}  // namespace

Classification classify(const LaguerreDigraph& g) {
  const int n = g.n();
  Classification out;
  out.vertex.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const VertexClass c = classify_vertex(g.pred(i), i, g.succ(i));
    out.vertex.push_back(c);
    count_class(c, out.stats);
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    if (g.pred(i) != 0) {
      continue;
    }
    ++out.stats.paths;
    for (int v = i; v != 0; v = g.succ(v)) {
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) {
      continue;
    }
    ++out.stats.cyc;
    for (int v = i; !seen[static_cast<std::size_t>(v)]; v = g.succ(v)) {
      seen[static_cast<std::size_t>(v)] = true;
    }
  }
  return out;
}

std::string to_dot(const LaguerreDigraph& g) {
  const auto cls = classify(g);
  std::string out = "digraph laguerre {\n";
  for (int i = 1; i <= g.n(); ++i) {
    out += "  " + std::to_string(i) + " [label=\"" + std::to_string(i) + " (" +
           std::string(to_string(cls.vertex[static_cast<std::size_t>(i) - 1])) + ")\"];\n";
  }
  for (const auto& [i, j] : g.arrows()) {
    out += "  " + std::to_string(i) + " -> " + std::to_string(j) + ";\n";
  }
  out += "}\n";
  return out;
}

// ------------------------------------------------------------- enumerators

namespace {

Monomial digraph_weight(const DigraphStats& s, int peak_shift) {
  return Monomial{{var("u1"), static_cast<std::uint32_t>(s.pk - peak_shift)},
                  {var("u2"), static_cast<std::uint32_t>(s.val)},
                  {var("u3"), static_cast<std::uint32_t>(s.da)},
                  {var("u4"), static_cast<std::uint32_t>(s.dd)},
                  {var("a"), static_cast<std::uint32_t>(s.fp)},
                  {var("b"), static_cast<std::uint32_t>(s.cyc)}};
}

template <class Visit>
MonomialTally tally_words(const WordStream& stream, unsigned jobs, Visit visit) {
  return parallel_reduce<MonomialTally>(
      stream.chunk_count(),
      [&](std::size_t c, MonomialTally& acc) {
        stream.visit_chunk(c, [&](const LaguerreWord& w) { visit(w, acc); });
      },
      [](MonomialTally& into, MonomialTally&& from) { into.merge(std::move(from)); }, jobs);
}

}  // namespace

Poly ld_enumerator(int n, int k, bool shift_peaks, unsigned jobs) {
  require_within_ceiling(n, "ld_enumerator");
  const WordStream stream(WordSpace{n, k});
  const int shift = shift_peaks ? k : 0;
  return tally_words(stream, jobs,
                     [&](const LaguerreWord& w, MonomialTally& acc) {
                       const auto s = classify(word_digraph(w)).stats;
                       if (s.pk < s.paths) {
                         throw std::logic_error("digraph with fewer peaks than paths");
                       }
                       acc.add(digraph_weight(s, shift));
                     })
      .to_poly();
}

Poly perm_cycle_poly(int n, unsigned jobs) {
  return ld_enumerator(n, 0, true, jobs);
}

Poly perm_linear_poly(int n, unsigned jobs) {
  require_within_ceiling(n, "perm_linear_poly");
  if (n == 0) {
    return Poly();
  }
  const WordStream stream(WordSpace{n, 0});
  const VarId u1 = var("u1");
  const VarId u2 = var("u2");
  const VarId u3 = var("u3");
  const VarId u4 = var("u4");
  return tally_words(stream, jobs,
                     [&](const LaguerreWord& w, MonomialTally& acc) {
                       std::uint32_t counts[4] = {0, 0, 0, 0};
                       for (std::size_t i = 0; i < w.size(); ++i) {
                         const int prev = i == 0 ? 0 : w[i - 1].value();
                         const int next = i + 1 == w.size() ? 0 : w[i + 1].value();
                         const int cur = w[i].value();
                         if (prev < cur && cur > next) {
                           ++counts[0];
                         } else if (prev > cur && cur < next) {
                           ++counts[1];
                         } else if (prev < cur) {
                           ++counts[2];
                         } else {
                           ++counts[3];
                         }
                       }
                       acc.add(Monomial{{u1, counts[0]}, {u2, counts[1]}, {u3, counts[2]},
                                        {u4, counts[3]}});
                     })
      .to_poly();
}

CycleCounts cycle_counts(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  CycleCounts out;
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    const int image = perm[static_cast<std::size_t>(i) - 1];
    if (image < 1 || image > n) {
      throw std::invalid_argument("not a permutation");
    }
    if (i < image) {
      ++out.crise;
    } else if (i > image) {
      ++out.cfall;
    } else {
      ++out.fix;
    }
    if (!seen[static_cast<std::size_t>(i)]) {
      ++cycles;
      for (int v = i; !seen[static_cast<std::size_t>(v)]; v = perm[static_cast<std::size_t>(v) - 1]) {
        seen[static_cast<std::size_t>(v)] = true;
      }
    }
  }
  out.cyc2 = cycles - out.fix;
  return out;
}

std::pair<Poly, Poly> zhu_sides(int n) {
  require_within_ceiling(n, "zhu_sides");
  Poly lhs = mu_table(preset("zhu"), n).at(n, 0);

  std::map<std::tuple<int, int, int, int>, std::int64_t> classes;
  WordStream(WordSpace{n, 0}).visit_all([&](const LaguerreWord& w) {
    const auto c = cycle_counts(w.to_codes());
    ++classes[{c.crise, c.cfall, c.fix, c.cyc2}];
  });

  const Poly a1 = Poly::variable("a1");
  const Poly a2 = Poly::variable("a2");
  const Poly b1 = Poly::variable("b1");
  const Poly b2 = Poly::variable("b2");
  const Poly x = Poly::variable("x");
  const Poly shifted = Poly::variable("la") + Poly::variable("d") * x;  // la + d x
  const Poly fixed_weight = a2 * shifted + b2 * x;
  const Poly cycle_weight = a2 * b1 + a1 * b2;

  Poly rhs;
  for (const auto& [key, count] : classes) {
    const auto [crise, cfall, fix, cyc2] = key;
    if (crise < cyc2 || cfall < cyc2) {
      throw std::logic_error("cycle without both a rise and a fall");
    }
    Poly term = pow(a1, static_cast<unsigned>(crise - cyc2)) *
                pow(b1, static_cast<unsigned>(cfall - cyc2)) * pow(x, static_cast<unsigned>(cfall)) *
                pow(shifted, static_cast<unsigned>(crise)) *
                pow(fixed_weight, static_cast<unsigned>(fix)) *
                pow(cycle_weight, static_cast<unsigned>(cyc2));
    term *= Integer(static_cast<long>(count));
    rhs += term;
  }
  return {std::move(lhs), std::move(rhs)};
}

int riccati_first_failure(int n_max) {
  std::vector<Poly> lin;
  for (int n = 0; n <= n_max; ++n) {
    lin.push_back(perm_linear_poly(n));
  }
  const Poly u1 = Poly::variable("u1");
  const Poly u2 = Poly::variable("u2");
  const Poly s = Poly::variable("u3") + Poly::variable("u4");
  for (int n = 0; n + 1 <= n_max; ++n) {
    Poly rhs = s * lin[static_cast<std::size_t>(n)];
    if (n == 0) {
      rhs += u1;
    }
    Poly square;
    for (int j = 0; j <= n; ++j) {
      Poly t = lin[static_cast<std::size_t>(j)] * lin[static_cast<std::size_t>(n - j)];
      t *= binomial(n, j);
      square += t;
    }
    rhs += u2 * square;
    if (!(rhs == lin[static_cast<std::size_t>(n) + 1])) {
      return n;
    }
  }
  return -1;
}

}  // namespace mahonian
