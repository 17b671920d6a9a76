#pragma once

// Laguerre digraphs: vertex classification against the 0-boundary, cycle and
// linear permutation statistics, and the enumerators built on them.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahonian/parallel.hpp"
#include "mahonian/permstats.hpp"
#include "mahonian/polyring.hpp"

namespace mahonian {

/// Digraph on [n] in which every vertex has in- and out-degree at most 1,
/// stored as a successor map (0 = no outgoing arrow).
class LaguerreDigraph {
 public:
  LaguerreDigraph() = default;
  /// succ has n entries, succ[i-1] is the head of the arrow out of i or 0.
  /// Throws std::invalid_argument on an out-of-range head or a vertex with
  /// two incoming arrows.
  LaguerreDigraph(int n, std::vector<int> succ);

  /// {"n":8,"succ":{"1":3,"2":2}}
  static LaguerreDigraph from_json(std::string_view text);

  int n() const { return static_cast<int>(succ_.size()); }
  /// Successor of vertex i in [n], 0 when i is a path end.
  int succ(int i) const { return succ_[static_cast<std::size_t>(i) - 1]; }
  /// Predecessor of vertex i in [n], 0 when i is a path start.
  int pred(int i) const { return pred_[static_cast<std::size_t>(i) - 1]; }
  std::vector<std::pair<int, int>> arrows() const;

  std::string to_json() const;

  bool operator==(const LaguerreDigraph& o) const { return succ_ == o.succ_; }

 private:
  std::vector<int> succ_;
  std::vector<int> pred_;
};

LaguerreDigraph word_digraph(const LaguerreWord& w);
LaguerreWord digraph_word(const LaguerreDigraph& g);

enum class VertexClass { pk, val, da, dd, fp };

std::string_view to_string(VertexClass c);

struct DigraphStats {
  int pk = 0;
  int val = 0;
  int da = 0;
  int dd = 0;
  int fp = 0;
  int cyc = 0;
  int paths = 0;
};

struct Classification {
  std::vector<VertexClass> vertex;  // entry i-1 belongs to vertex i
  DigraphStats stats;
};

/// Classifies each vertex by comparing it with its predecessor and successor
/// in the digraph extended by a vertex 0 that feeds every path start and
/// absorbs every path end.
Classification classify(const LaguerreDigraph& g);

/// DOT rendering with vertices labelled by their class.
std::string to_dot(const LaguerreDigraph& g);

/// Sum over digraphs on [n] with k paths of
/// u1^{pk-k} u2^{val} u3^{da} u4^{dd} a^{fp} b^{cyc}. With shift_peaks set
/// to false the exponent of u1 is pk itself.
Poly ld_enumerator(int n, int k, bool shift_peaks = true, unsigned jobs = default_jobs());

/// Sum over permutations of [n] of the cycle-classification weight
/// u1^{cpk} u2^{cval} u3^{cdrise} u4^{cdfall} a^{fix} b^{cyc}.
Poly perm_cycle_poly(int n, unsigned jobs = default_jobs());

/// Sum over permutations of [n], read as words with 0 at both ends, of
/// u1^{peaks} u2^{valleys} u3^{double ascents} u4^{double descents}.
Poly perm_linear_poly(int n, unsigned jobs = default_jobs());

/// Counts cycle rises, cycle falls, fixed points and non-loop cycles of a
/// permutation given in one-line notation (values 1..n).
struct CycleCounts {
  int crise = 0;
  int cfall = 0;
  int fix = 0;
  int cyc2 = 0;
};
CycleCounts cycle_counts(const std::vector<int>& perm);

/// Both sides of the cycle-statistic interpretation of Zhu's polynomials
/// T_n(x): the continued-fraction moment and the sum over permutations.
std::pair<Poly, Poly> zhu_sides(int n);

/// Checks P^lin_{n+1} = [n=0] u1 + (u3+u4) P^lin_n
///   + u2 sum_j C(n,j) P^lin_j P^lin_{n-j} for n + 1 <= n_max.
/// Returns the first failing n, or -1.
int riccati_first_failure(int n_max);

}  // namespace mahonian
