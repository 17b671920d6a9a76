#pragma once

// Exact sparse multivariate polynomials with arbitrary-precision integer
// coefficients over a process-wide variable registry.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mahonian {

using Integer = mpz_class;

/// Interned handle for a polynomial indeterminate.
class VarId {
 public:
  constexpr VarId() = default;
  constexpr explicit VarId(std::uint32_t index) : index_(index) {}

  constexpr std::uint32_t index() const { return index_; }
  std::string_view name() const;

  constexpr auto operator<=>(const VarId&) const = default;

 private:
  std::uint32_t index_ = 0;
};

/// Registry of variable names. Registration order is the significance order
/// used by the monomial ordering. The default names are registered on first
/// use, in a fixed order, so printing is stable across runs.
class VarRegistry {
 public:
  static VarRegistry& instance();

  /// Returns the id of `name`, registering it if needed.
  VarId intern(std::string_view name);
  /// Returns the id of an already registered name; throws otherwise.
  VarId lookup(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::string_view name(VarId id) const;
  std::size_t size() const;

 private:
  VarRegistry();
  struct Impl;
  Impl* impl_;
};

/// Shorthand for VarRegistry::instance().intern(name).
VarId var(std::string_view name);

/// A power product of variables. Exponents are stored densely by variable
/// index with trailing zeros trimmed, so equal monomials compare equal.
class Monomial {
 public:
  Monomial() = default;
  Monomial(VarId v, std::uint32_t exponent);
  Monomial(std::initializer_list<std::pair<VarId, std::uint32_t>> factors);

  std::uint32_t exponent(VarId v) const {
    return v.index() < exps_.size() ? exps_[v.index()] : 0;
  }
  std::uint32_t degree() const { return degree_; }
  bool is_constant() const { return exps_.empty(); }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }

  /// Nonzero (variable, exponent) pairs in registry order.
  std::vector<std::pair<VarId, std::uint32_t>> factors() const;

  Monomial with_exponent(VarId v, std::uint32_t exponent) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divisible_by(const Monomial& d) const;
  /// Requires divisible_by(d).
  Monomial divided_by(const Monomial& d) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  /// Graded order: total degree first; within a degree the lexicographically
  /// larger exponent vector (first registered variable most significant)
  /// sorts first. Iterating a term map therefore prints 1 + q + q^2 and
  /// b^2 + 2bq + q^2.
  std::strong_ordering operator<=>(const Monomial& o) const;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

class Poly {
 public:
  using TermMap = std::map<Monomial, Integer>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Integer& c);  // NOLINT(google-explicit-constructor)
  Poly(const Monomial& m, const Integer& c = 1);

  static Poly variable(VarId v, std::uint32_t exponent = 1);
  static Poly variable(std::string_view name, std::uint32_t exponent = 1);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Coefficient of `m` (zero when absent).
  Integer coefficient(const Monomial& m) const;
  std::uint32_t degree_in(VarId v) const;
  std::uint32_t total_degree() const;

  void add_term(const Monomial& m, const Integer& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Integer& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  /// Exact division by a monomial; throws std::domain_error if some term
  /// is not divisible.
  Poly divide_exact(const Monomial& m) const;

  /// Replaces every occurrence of `v` by `value`.
  Poly substitute(VarId v, const Poly& value) const;
  Poly substitute(const std::vector<std::pair<VarId, Poly>>& values) const;

  /// Text form: terms in ascending degree (within a degree, lexicographically
  /// larger first), `^` for powers, juxtaposition for products.
  std::string to_string() const;
  /// {"terms":[{"coef":"1","mono":{"b":2}},...]} with decimal string
  /// coefficients.
  std::string to_json() const;

 private:
  TermMap terms_;
};

Poly pow(const Poly& p, unsigned exponent);

// q- and (beta,q)-analogues. The statistic variable beta is "b".

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Poly q_int(int n);
/// [n]_{b,q} = b - 1 + [n]_q for n >= 1; [0]_{b,q} = 0.
Poly bq_int(int n);
/// [n]_q!
Poly q_factorial(int n);
/// [1]_{b,q} [2]_{b,q} ... [n]_{b,q}; empty product is 1.
Poly bq_factorial(int n);
/// Product [from]_{b,q} ... [to]_{b,q}; 1 when from > to.
Poly bq_product(int from, int to);
/// Gaussian binomial by the Pascal recurrence. Throws std::invalid_argument
/// unless 0 <= k <= n.
Poly q_binomial(int n, int k);
/// q-multinomial [n]_q! / prod [m_i]_q! as a product of q-binomials.
Poly q_multinomial(const std::vector<int>& parts);

/// Ordinary binomial coefficient as an exact integer.
Integer binomial(int n, int k);
Integer factorial(int n);

}  // namespace mahonian
