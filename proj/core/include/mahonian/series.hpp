#pragma once

// Truncated power series in one formal variable with Poly coefficients.

#include <cstddef>
#include <vector>

#include "mahonian/polyring.hpp"

namespace mahonian {

class Series {
 public:
  /// Zero series of truncation order `order` (order + 1 coefficients).
  explicit Series(std::size_t order);
  /// Coefficient list; order = coeffs.size() - 1. Throws on an empty list.
  explicit Series(std::vector<Poly> coeffs);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Poly& operator[](std::size_t n) const { return coeffs_.at(n); }
  Poly& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Poly>& coefficients() const { return coeffs_; }

  bool operator==(const Series& o) const = default;

 private:
  std::vector<Poly> coeffs_;
};

// Binary operations require equal truncation orders (std::invalid_argument).
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator*(const Series& a, const Series& b);

/// Multiplicative inverse. The constant coefficient must be exactly 1.
Series reciprocal(const Series& a);

/// Product of exponential generating functions given by their EGF
/// coefficient lists: out[n] = sum_j C(n,j) a[j] b[n-j], n <= order.
Series egf_product(const Series& a, const Series& b);

}  // namespace mahonian
