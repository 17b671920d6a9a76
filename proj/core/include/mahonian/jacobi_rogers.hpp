#pragma once

// Jacobi-Rogers machinery: the generalized moment table mu_{n,k}, its
// weighted Motzkin path interpretation, truncated J-fraction expansion,
// the monic orthogonal polynomials of the three-term recurrence, and the
// unitriangular duality between the two.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mahonian/polyring.hpp"
#include "mahonian/series.hpp"

namespace mahonian {

/// Coefficient sequences of a J-fraction. gamma is used for k >= 0, beta for
/// k >= 1; beta(k) must be a nonzero polynomial.
struct JRParams {
  std::string name;
  std::function<Poly(int)> gamma;
  std::function<Poly(int)> beta;
};

/// Named parameter packs: "euler", "beta_q", "digraph", "cyc", "alternating",
/// "zhu". Throws std::invalid_argument for any other name.
JRParams preset(std::string_view name);
std::vector<std::string> preset_names();

/// Symbolic pack with gamma_k = g<k> and beta_k = B<k> as fresh registry
/// variables.
JRParams generic_params();

/// Lower-triangular matrix of polynomials; row n holds entries 0..n.
using LowerTriangular = std::vector<std::vector<Poly>>;

class MuTable {
 public:
  explicit MuTable(LowerTriangular rows) : rows_(std::move(rows)) {}

  int order() const { return static_cast<int>(rows_.size()) - 1; }
  /// mu_{n,k}; zero outside 0 <= k <= n.
  const Poly& at(int n, int k) const;
  const LowerTriangular& rows() const { return rows_; }

  /// {"N":5,"entries":[["1"],["g0","1"],...]}
  std::string to_json() const;

 private:
  LowerTriangular rows_;
};

/// mu_{n,k} = mu_{n-1,k-1} + gamma_k mu_{n-1,k} + beta_{k+1} mu_{n-1,k+1}.
MuTable mu_table(const JRParams& params, int order);

enum class MotzkinStep { rise, fall, level };
using MotzkinPath = std::vector<MotzkinStep>;

/// Every Motzkin path of length n from height 0 to height k that never goes
/// below 0.
std::vector<MotzkinPath> motzkin_paths(int n, int k);

/// Product of step weights: rise 1, fall from height h beta_h, level at
/// height h gamma_h.
Poly motzkin_weight(const JRParams& params, const MotzkinPath& path);

/// Sum of motzkin_weight over motzkin_paths(n, k).
Poly motzkin_mu(const JRParams& params, int n, int k);

/// Taylor coefficients t^0..t^order of the J-fraction, evaluated bottom-up
/// from a finite depth. depth < 0 selects ceil(order/2) + 1.
Series cf_taylor(const JRParams& params, int order, int depth = -1);

/// Monic polynomials p_0..p_order of the three-term recurrence, stored as
/// coefficient rows: row n holds the coefficients of x^0..x^n.
class OrthoSeq {
 public:
  explicit OrthoSeq(LowerTriangular rows) : rows_(std::move(rows)) {}

  int order() const { return static_cast<int>(rows_.size()) - 1; }
  const std::vector<Poly>& coefficients(int n) const { return rows_.at(static_cast<std::size_t>(n)); }
  const LowerTriangular& rows() const { return rows_; }
  /// p_n as a polynomial in the given variable.
  Poly as_poly(int n, VarId x) const;

 private:
  LowerTriangular rows_;
};

/// p_{n+1}(x) = (x - gamma_n) p_n(x) - beta_n p_{n-1}(x), p_0 = 1.
OrthoSeq ortho_seq(const JRParams& params, int order);

/// Inverse by forward substitution. Throws std::invalid_argument unless the
/// matrix is lower triangular with every diagonal entry equal to 1.
LowerTriangular unitriangular_inverse(const LowerTriangular& t);

/// Outcome of a structured check; `detail` names the first failure.
struct CheckReport {
  bool pass = true;
  std::string detail;
};

/// x^n = sum_k mu_{n,k} p_k(x) for n <= order, and the coefficient matrix
/// of the orthogonal polynomials is the inverse of the moment table.
CheckReport duality_check(const JRParams& params, int order);

/// With the beta_q pack: closed forms of the orthogonal polynomial
/// coefficients, of mu_{n,k}, and of the moments mu_{n,0}.
CheckReport little_q_laguerre_check(int order);

/// Coefficientwise checks of the exponential generating function system
/// tying the cycle and linear permutation enumerators to the "cyc" moment
/// table and to Laguerre digraphs, for n <= order.
CheckReport egf_consistency(int order);

}  // namespace mahonian
