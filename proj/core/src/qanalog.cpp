#include <stdexcept>
#include <string>
#include <vector>

#include "mahonian/polyring.hpp"

namespace mahonian {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) {
    throw std::invalid_argument(std::string(what) + ": negative argument " + std::to_string(n));
  }
}

}  // namespace

Poly q_int(int n) {
  require_nonnegative(n, "q_int");
  const VarId q = var("q");
  Poly out;
  for (int e = 0; e < n; ++e) {
    out.add_term(Monomial(q, static_cast<std::uint32_t>(e)), 1);
  }
  return out;
}

Poly bq_int(int n) {
  require_nonnegative(n, "bq_int");
  if (n == 0) {
    return Poly();
  }
  Poly out = q_int(n);
  out += Poly::variable("b");
  out -= Poly(1);
  return out;
}

Poly q_factorial(int n) {
  require_nonnegative(n, "q_factorial");
  Poly out(1);
  for (int j = 1; j <= n; ++j) {
    out *= q_int(j);
  }
  return out;
}

Poly bq_product(int from, int to) {
  require_nonnegative(from, "bq_product");
  Poly out(1);
  for (int j = from; j <= to; ++j) {
    out *= bq_int(j);
  }
  return out;
}

Poly bq_factorial(int n) {
  require_nonnegative(n, "bq_factorial");
  return bq_product(1, n);
}

Poly q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("q_binomial: need 0 <= k <= n, got n=" + std::to_string(n) +
                                " k=" + std::to_string(k));
  }
  // Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k], row by row.
  const VarId q = var("q");
  std::vector<Poly> row{Poly(1)};
  for (int m = 1; m <= n; ++m) {
    std::vector<Poly> next(static_cast<std::size_t>(m) + 1);
    next[0] = Poly(1);
    next[static_cast<std::size_t>(m)] = Poly(1);
    for (int j = 1; j < m; ++j) {
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j) - 1] +
          Poly(Monomial(q, static_cast<std::uint32_t>(j))) * row[static_cast<std::size_t>(j)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

Poly q_multinomial(const std::vector<int>& parts) {
  Poly out(1);
  int total = 0;
  for (int m : parts) {
    require_nonnegative(m, "q_multinomial");
    total += m;
    out *= q_binomial(total, m);
  }
  return out;
}

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    return 0;
  }
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(int n) {
  require_nonnegative(n, "factorial");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace mahonian
