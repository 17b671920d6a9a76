#pragma once

// Brute-force reference implementations used only by the tests. Everything
// here is written from the definitions, shares no code with the library and
// favours obviousness over speed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "mahonian/polyring.hpp"

namespace oracle {

// Laguerre words as integer codes, 0 = hole.
using Codes = std::vector<int>;

/// Every word on [n] with k holes, by filtering all maps [n] -> {0..n}.
inline std::vector<Codes> words(int n, int k) {
  std::vector<Codes> out;
  Codes w(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    int holes = 0;
    bool injective = true;
    for (int v : w) {
      if (v == 0) {
        ++holes;
      } else if (seen[static_cast<std::size_t>(v)]++) {
        injective = false;
      }
    }
    if (injective && holes == k) {
      out.push_back(w);
    }
    std::size_t i = 0;
    while (i < w.size() && w[i] == n) {
      w[i++] = 0;
    }
    if (i == w.size()) {
      break;
    }
    ++w[i];
  }
  return out;
}

/// Holes compare above every numeral.
inline int rank(int code, int n) { return code == 0 ? n + 1 : code; }

struct Stats {
  int des = 0;
  int maj0 = 0;
  int inv0 = 0;
  int between = 0;
  int inv_holes = 0;
  int rlmin = 0;
  int inv() const { return inv0 + between; }
  int maj() const { return maj0 + between; }
};

inline Stats stats(const Codes& w) {
  const int n = static_cast<int>(w.size());
  Stats s;
  for (int i = 0; i + 1 < n; ++i) {
    if (rank(w[i], n) > rank(w[i + 1], n)) {
      ++s.des;
      s.maj0 += i + 1;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (rank(w[i], n) > rank(w[j], n)) {
        ++s.inv0;
        if (w[i] == 0) {
          ++s.inv_holes;
        }
      }
    }
  }
  std::vector<bool> present(static_cast<std::size_t>(n) + 1, false);
  for (int v : w) {
    present[static_cast<std::size_t>(v)] = true;
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b < a; ++b) {
      if (present[static_cast<std::size_t>(a)] && !present[static_cast<std::size_t>(b)]) {
        ++s.between;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (w[i] == 0) {
      continue;
    }
    bool all_before = true;
    for (int smaller = 1; smaller < w[i]; ++smaller) {
      all_before = all_before && std::find(w.begin(), w.begin() + i, smaller) != w.begin() + i;
    }
    s.rlmin += all_before ? 1 : 0;
  }
  return s;
}

/// Integer polynomial in q as a coefficient vector.
using QPoly = std::vector<long long>;

inline QPoly qmul(const QPoly& a, const QPoly& b) {
  QPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

/// Gaussian binomial by counting inversions of 0/1 words with k ones.
inline QPoly gaussian(int n, int k) {
  QPoly out(static_cast<std::size_t>(k * (n - k)) + 1, 0);
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != k) {
      continue;
    }
    int inv = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        inv += ((mask >> i) & 1U) && !((mask >> j) & 1U) ? 1 : 0;
      }
    }
    ++out[static_cast<std::size_t>(inv)];
  }
  return out;
}

inline QPoly qint(int m) { return QPoly(static_cast<std::size_t>(m), 1); }

/// Two-variable tally keyed by (exponent of b, exponent of q).
using BQTally = std::map<std::pair<int, int>, long long>;

inline mahonian::Poly to_poly(const BQTally& t) {
  mahonian::Poly out;
  for (const auto& [e, c] : t) {
    out += mahonian::Poly(
        mahonian::Monomial{{mahonian::var("b"), static_cast<std::uint32_t>(e.first)},
                           {mahonian::var("q"), static_cast<std::uint32_t>(e.second)}},
        mahonian::Integer(static_cast<long>(c)));
  }
  return out;
}

inline mahonian::Poly to_poly(const QPoly& p) {
  BQTally t;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != 0) {
      t[{0, static_cast<int>(i)}] = p[i];
    }
  }
  return to_poly(t);
}

/// Product of (b + q + ... + q^{m-1}) for m = from..to, as a tally.
inline BQTally bq_product(int from, int to) {
  BQTally acc{{{0, 0}, 1}};
  for (int m = from; m <= to; ++m) {
    BQTally next;
    for (const auto& [e, c] : acc) {
      next[{e.first + 1, e.second}] += c;
      for (int j = 1; j < m; ++j) {
        next[{e.first, e.second + j}] += c;
      }
    }
    acc = next;
  }
  return acc;
}

// ------------------------------------------------------------ generators

/// Random polynomial over the given variables with small coefficients.
inline mahonian::Poly random_poly(std::mt19937& rng, const std::vector<std::string>& vars,
                                  int max_terms = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> terms(0, max_terms);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<long> coef(-5, 5);
  mahonian::Poly out;
  const int t = terms(rng);
  for (int i = 0; i < t; ++i) {
    mahonian::Poly term(coef(rng));
    for (const auto& v : vars) {
      term *= mahonian::Poly::variable(v, static_cast<std::uint32_t>(exp(rng)));
    }
    out += term;
  }
  return out;
}

/// Random Laguerre word on [n] with k holes.
inline Codes random_word(std::mt19937& rng, int n, int k) {
  std::vector<int> values(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    values[static_cast<std::size_t>(i)] = i + 1;
  }
  std::shuffle(values.begin(), values.end(), rng);
  values.resize(static_cast<std::size_t>(n - k));
  values.insert(values.end(), static_cast<std::size_t>(k), 0);
  std::shuffle(values.begin(), values.end(), rng);
  return values;
}

/// Every permutation of [n] in one-line notation.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    p[static_cast<std::size_t>(i)] = i + 1;
  }
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace oracle
