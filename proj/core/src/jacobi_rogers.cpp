#include "mahonian/jacobi_rogers.hpp"

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mahonian/digraphs.hpp"

namespace mahonian {

namespace {

const Poly& zero_poly() {
  static const Poly zero;
  return zero;
}

std::vector<Poly> gammas(const JRParams& params, int count) {
  std::vector<Poly> out;
  for (int k = 0; k < count; ++k) {
    out.push_back(params.gamma(k));
  }
  return out;
}

// index k holds beta_k; index 0 is unused
std::vector<Poly> betas(const JRParams& params, int count) {
  std::vector<Poly> out(1);
  for (int k = 1; k < count; ++k) {
    Poly b = params.beta(k);
    if (b.is_zero()) {
      throw std::invalid_argument("beta_" + std::to_string(k) + " of '" + params.name +
                                  "' is zero");
    }
    out.push_back(std::move(b));
  }
  return out;
}

std::string at_nk(int n, int k) {
  return "(n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

}  // namespace

// ----------------------------------------------------------------- MuTable

const Poly& MuTable::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n || n > order()) {
    return zero_poly();
  }
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

std::string MuTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["N"] = order();
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& row : rows_) {
    auto cells = nlohmann::ordered_json::array();
    for (const auto& p : row) {
      cells.push_back(p.to_string());
    }
    doc["entries"].push_back(std::move(cells));
  }
  return doc.dump();
}

MuTable mu_table(const JRParams& params, int order) {
  if (order < 0) {
    throw std::invalid_argument("negative table order");
  }
  const auto g = gammas(params, order + 1);
  const auto b = betas(params, order + 2);
  LowerTriangular rows;
  rows.push_back({Poly(1)});
  for (int n = 1; n <= order; ++n) {
    const auto& prev = rows.back();
    const auto prev_at = [&](int k) -> const Poly& {
      return k >= 0 && k < n ? prev[static_cast<std::size_t>(k)] : zero_poly();
    };
    std::vector<Poly> row;
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      Poly entry = prev_at(k - 1);
      if (k < n) {
        entry += g[static_cast<std::size_t>(k)] * prev_at(k);
      }
      if (k + 1 < n) {
        entry += b[static_cast<std::size_t>(k) + 1] * prev_at(k + 1);
      }
      row.push_back(std::move(entry));
    }
    rows.push_back(std::move(row));
  }
  return MuTable(std::move(rows));
}

// ---------------------------------------------------------- Motzkin paths

std::vector<MotzkinPath> motzkin_paths(int n, int k) {
  std::vector<MotzkinPath> out;
  if (n < 0 || k < 0 || k > n) {
    return out;
  }
  MotzkinPath path;
  auto extend = [&](auto& self, int height) -> void {
    const int left = n - static_cast<int>(path.size());
    if (left == 0) {
      if (height == k) {
        out.push_back(path);
      }
      return;
    }
    // the endpoint must stay reachable
    const auto step = [&](MotzkinStep s, int next) {
      if (next < 0 || next - (left - 1) > k || next + (left - 1) < k) {
        return;
      }
      path.push_back(s);
      self(self, next);
      path.pop_back();
    };
    step(MotzkinStep::rise, height + 1);
    step(MotzkinStep::level, height);
    step(MotzkinStep::fall, height - 1);
  };
  extend(extend, 0);
  return out;
}

Poly motzkin_weight(const JRParams& params, const MotzkinPath& path) {
  Poly w(1);
  int height = 0;
  for (MotzkinStep s : path) {
    switch (s) {
      case MotzkinStep::rise:
        ++height;
        break;
      case MotzkinStep::level:
        w *= params.gamma(height);
        break;
      case MotzkinStep::fall:
        w *= params.beta(height);
        --height;
        break;
    }
  }
  return w;
}

Poly motzkin_mu(const JRParams& params, int n, int k) {
  Poly sum;
  for (const auto& path : motzkin_paths(n, k)) {
    sum += motzkin_weight(params, path);
  }
  return sum;
}

// ------------------------------------------------------------ J-fraction

Series cf_taylor(const JRParams& params, int order, int depth) {
  if (order < 0) {
    throw std::invalid_argument("negative series order");
  }
  if (depth < 0) {
    depth = (order + 1) / 2 + 1;
  }
  const auto n = static_cast<std::size_t>(order);
  Series tail(n);
  tail[0] = Poly(1);
  // R_j = 1 / (1 - gamma_j t - beta_{j+1} t^2 R_{j+1}), R_depth = 1
  for (int j = depth - 1; j >= 0; --j) {
    Series denom(n);
    denom[0] = Poly(1);
    if (n >= 1) {
      denom[1] -= params.gamma(j);
    }
    const Poly b = params.beta(j + 1);
    for (std::size_t i = 2; i <= n; ++i) {
      denom[i] -= b * tail[i - 2];
    }
    tail = reciprocal(denom);
  }
  return tail;
}

// ------------------------------------------------- orthogonal polynomials

Poly OrthoSeq::as_poly(int n, VarId x) const {
  Poly out;
  const auto& row = coefficients(n);
  for (std::size_t j = 0; j < row.size(); ++j) {
    out += row[j] * Poly::variable(x, static_cast<std::uint32_t>(j));
  }
  return out;
}

OrthoSeq ortho_seq(const JRParams& params, int order) {
  if (order < 0) {
    throw std::invalid_argument("negative sequence order");
  }
  LowerTriangular rows;
  rows.push_back({Poly(1)});
  for (int n = 0; n < order; ++n) {
    const Poly g = params.gamma(n);
    const auto& cur = rows[static_cast<std::size_t>(n)];
    std::vector<Poly> next(static_cast<std::size_t>(n) + 2);
    for (std::size_t j = 0; j < cur.size(); ++j) {
      next[j + 1] += cur[j];
      next[j] -= g * cur[j];
    }
    if (n >= 1) {
      const Poly b = params.beta(n);
      const auto& before = rows[static_cast<std::size_t>(n) - 1];
      for (std::size_t j = 0; j < before.size(); ++j) {
        next[j] -= b * before[j];
      }
    }
    rows.push_back(std::move(next));
  }
  return OrthoSeq(std::move(rows));
}

LowerTriangular unitriangular_inverse(const LowerTriangular& t) {
  const std::size_t size = t.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (t[i].size() != i + 1) {
      throw std::invalid_argument("row " + std::to_string(i) + " is not lower triangular");
    }
    if (!t[i][i].is_one()) {
      throw std::invalid_argument("diagonal entry " + std::to_string(i) + " is not 1");
    }
  }
  LowerTriangular inv(size);
  for (std::size_t i = 0; i < size; ++i) {
    inv[i].resize(i + 1);
    inv[i][i] = Poly(1);
    for (std::size_t j = i; j-- > 0;) {
      Poly acc;
      for (std::size_t m = j; m < i; ++m) {
        acc += t[i][m] * inv[m][j];
      }
      inv[i][j] = -acc;
    }
  }
  return inv;
}

// ------------------------------------------------------------------ checks

CheckReport duality_check(const JRParams& params, int order) {
  const MuTable mu = mu_table(params, order);
  const OrthoSeq p = ortho_seq(params, order);
  for (int n = 0; n <= order; ++n) {
    // coefficient of x^j in sum_k mu_{n,k} p_k(x)
    for (int j = 0; j <= n; ++j) {
      Poly coef;
      for (int k = j; k <= n; ++k) {
        coef += mu.at(n, k) * p.coefficients(k)[static_cast<std::size_t>(j)];
      }
      if (!(coef == Poly(j == n ? 1 : 0))) {
        return {false, "x^n expansion fails at " + at_nk(n, j) + ": coefficient " +
                           coef.to_string()};
      }
    }
  }
  const LowerTriangular inv = unitriangular_inverse(mu.rows());
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Poly& a = p.coefficients(n)[static_cast<std::size_t>(k)];
      const Poly& b = inv[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      if (!(a == b)) {
        return {false, "inverse mismatch at " + at_nk(n, k) + ": " + a.to_string() + " vs " +
                           b.to_string()};
      }
    }
  }
  return {};
}

CheckReport little_q_laguerre_check(int order) {
  const JRParams params = preset("beta_q");
  const OrthoSeq p = ortho_seq(params, order);
  const MuTable mu = mu_table(params, order);
  for (int n = 0; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Poly product = q_binomial(n, k) * bq_product(k + 1, n);
      const int d = n - k;
      Poly expected = Poly::variable("q", static_cast<std::uint32_t>(d * (d - 1) / 2)) * product;
      if (d % 2 == 1) {
        expected = -expected;
      }
      if (!(p.coefficients(n)[static_cast<std::size_t>(k)] == expected)) {
        return {false, "orthogonal coefficient mismatch at " + at_nk(n, k)};
      }
      if (!(mu.at(n, k) == product)) {
        return {false, "moment table mismatch at " + at_nk(n, k)};
      }
    }
    if (!(mu.at(n, 0) == bq_factorial(n))) {
      return {false, "moment mismatch at n=" + std::to_string(n)};
    }
  }
  return {};
}

CheckReport egf_consistency(int order) {
  if (order < 0) {
    throw std::invalid_argument("negative order");
  }
  const auto size = static_cast<std::size_t>(order);
  const Monomial u1m(var("u1"), 1);
  const Poly u1 = Poly::variable("u1");
  const Poly u1u2 = u1 * Poly::variable("u2");
  const Poly s = Poly::variable("u3") + Poly::variable("u4");
  const Poly b = Poly::variable("b");
  const Poly ab = Poly::variable("a") * b;

  Series lin(size);
  Series f(size);
  Series j0(size);
  for (int n = 0; n <= order; ++n) {
    const auto i = static_cast<std::size_t>(n);
    lin[i] = perm_linear_poly(n);
    f[i] = lin[i].divide_exact(u1m);
    j0[i] = perm_cycle_poly(n);
  }

  const Series ff = egf_product(f, f);
  const Series j0f = egf_product(j0, f);
  for (std::size_t n = 0; n < size; ++n) {
    Poly rhs = s * f[n] + u1u2 * ff[n];
    if (n == 0) {
      rhs += Poly(1);
    }
    if (!(f[n + 1] == rhs)) {
      return {false, "F' = 1 + sF + uF^2 fails at n=" + std::to_string(n)};
    }
    if (!(j0[n + 1] == ab * j0[n] + b * u1u2 * j0f[n])) {
      return {false, "J0' = ab J0 + b u J0 F fails at n=" + std::to_string(n)};
    }
  }

  const MuTable mu = mu_table(preset("cyc"), order);
  Series column = j0;      // J0 F^k
  Series lin_column = j0;  // J0 (G^lin)^k
  for (int k = 0; k <= order; ++k) {
    if (k > 0) {
      column = egf_product(column, f);
      lin_column = egf_product(lin_column, lin);
    }
    const Integer kfact = factorial(k);
    for (int n = k; n <= order; ++n) {
      const auto i = static_cast<std::size_t>(n);
      Poly scaled = mu.at(n, k);
      scaled *= kfact;
      if (!(column[i] == scaled)) {
        return {false, "J_k = J0 F^k / k! fails at " + at_nk(n, k)};
      }
      Poly ld = ld_enumerator(n, k, false);
      if (!(ld == pow(u1, static_cast<unsigned>(k)) * mu.at(n, k))) {
        return {false, "digraph enumerator vs u1^k mu fails at " + at_nk(n, k)};
      }
      ld *= kfact;
      if (!(lin_column[i] == ld)) {
        return {false, "G^cyc (G^lin)^k / k! fails at " + at_nk(n, k)};
      }
    }
  }
  return {};
}

}  // namespace mahonian
