#include "mahonian/series.hpp"

#include <stdexcept>
#include <utility>

namespace mahonian {

namespace {

void require_same_order(const Series& a, const Series& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series truncation orders differ");
  }
}

}  // namespace

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Poly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least one coefficient");
  }
}

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out = a;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    out[n] += b[n];
  }
  return out;
}

Series operator-(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out = a;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    out[n] -= b[n];
  }
  return out;
}

Series operator*(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; i + j <= a.order(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series reciprocal(const Series& a) {
  if (!a[0].is_one()) {
    throw std::domain_error("reciprocal needs constant coefficient 1, got " + a[0].to_string());
  }
  // r[0] = 1, r[n] = -sum_{j=1..n} a[j] r[n-j]
  Series r(a.order());
  r[0] = Poly(1);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    Poly acc;
    for (std::size_t j = 1; j <= n; ++j) {
      if (!a[j].is_zero()) {
        acc += a[j] * r[n - j];
      }
    }
    r[n] = -acc;
  }
  return r;
}

Series egf_product(const Series& a, const Series& b) {
  require_same_order(a, b);
  Series out(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) {
    Poly acc;
    for (std::size_t j = 0; j <= n; ++j) {
      if (a[j].is_zero() || b[n - j].is_zero()) {
        continue;
      }
      Poly term = a[j] * b[n - j];
      term *= binomial(static_cast<int>(n), static_cast<int>(j));
      acc += term;
    }
    out[n] = std::move(acc);
  }
  return out;
}

}  // namespace mahonian
