#pragma once

// Laguerre words (partial permutations), their (0,1)-matrices, and the
// inversion / major-index / right-to-left-minimum statistics on them.

#include <climits>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahonian/limits.hpp"
#include "mahonian/parallel.hpp"
#include "mahonian/polyring.hpp"
#include "mahonian/words.hpp"

namespace mahonian {

/// A numeral 1..n or the hole symbol. Holes are larger than every numeral
/// and equal to each other.
class Letter {
 public:
  static constexpr Letter num(int value) { return Letter(value); }
  static constexpr Letter hole() { return Letter(kHoleCode); }

  constexpr bool is_hole() const { return code_ == kHoleCode; }
  /// Numeral value; 0 for a hole.
  constexpr int value() const { return is_hole() ? 0 : code_; }

  constexpr auto operator<=>(const Letter&) const = default;

 private:
  static constexpr int kHoleCode = INT_MAX;
  constexpr explicit Letter(int code) : code_(code) {}
  int code_;
};

/// A word of length n over [n] plus holes, numerals pairwise distinct.
class LaguerreWord {
 public:
  LaguerreWord() = default;
  /// Throws std::invalid_argument on a numeral outside [n] or a repeat.
  LaguerreWord(int n, std::vector<Letter> letters);

  /// Space-separated tokens, `*` for a hole: "3 2 5 * 1 8 6 *".
  static LaguerreWord parse(std::string_view text);
  /// Integer codes with 0 for a hole; n is the length.
  static LaguerreWord from_codes(const std::vector<int>& codes);

  int n() const { return static_cast<int>(letters_.size()); }
  int holes() const;
  std::span<const Letter> letters() const { return letters_; }
  /// 0-based access.
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::size_t size() const { return letters_.size(); }

  /// Numerals present (the image set), ascending.
  std::vector<int> image_set() const;
  std::vector<int> to_codes() const;
  std::string to_string() const;

  bool operator==(const LaguerreWord&) const = default;

 private:
  friend class WordStream;
  std::vector<Letter> letters_;
};

/// Every statistic of a Laguerre word. Position sets are 1-based.
struct StatRecord {
  std::vector<int> des_set;
  std::vector<int> inv_box;  // entry i-1 belongs to position i
  int inv0 = 0;
  int maj0 = 0;
  int between = 0;  // inv(S, complement of S)
  int inv = 0;
  int maj = 0;
  int inv_filled = 0;  // inversions whose left letter is a numeral
  int inv_holes = 0;   // inversions whose left letter is a hole
  std::vector<int> image_set;
  std::vector<int> rlmin_set;

  int des() const { return static_cast<int>(des_set.size()); }
  int rlmin() const { return static_cast<int>(rlmin_set.size()); }
  int tilde_inv_filled() const { return inv_filled + between; }
};

StatRecord full_stats(const LaguerreWord& w);

/// #{(a,b) in A x B : a > b}.
int between_inversions(std::span<const int> a, std::span<const int> b);

/// Numerals w_i such that every smaller numeral occurs before position i.
std::vector<int> rlmin_set(const LaguerreWord& w);

/// Sum over ordered partitions A + B = [n], |A| = n-k, of q^{inv(A,B)}.
Poly between_set_poly(int n, int k);

/// Relabels the numerals of w by the order-preserving bijection from its
/// image set onto `target` (same size, any order of input).
LaguerreWord relabel_image(const LaguerreWord& w, std::vector<int> target);

// ------------------------------------------------------------ enumeration

/// Which part of the set of Laguerre words on [n] with k holes to visit.
struct WordSpace {
  WordSpace() = default;
  WordSpace(int n_, int k_, std::optional<std::vector<int>> holes_ = std::nullopt,
            std::optional<std::vector<int>> image_ = std::nullopt)
      : n(n_), k(k_), holes(std::move(holes_)), image(std::move(image_)) {}

  int n = 0;
  int k = 0;
  /// Only words whose holes sit exactly at these 1-based positions.
  std::optional<std::vector<int>> holes;
  /// Only words whose image set is exactly this set of numerals.
  std::optional<std::vector<int>> image;
};

/// binom(n,k) n!/k!
Integer word_count(int n, int k);

/// Hole sets of size k in colex order (bitmask order).
std::vector<std::vector<int>> hole_sets(int n, int k);

/// Deterministic chunked stream over a WordSpace. Order: hole sets in colex
/// order, then numerals assigned to the non-hole positions as arrangements
/// in lexicographic order. Chunks are contiguous pieces of that order.
class WordStream {
 public:
  /// Throws std::invalid_argument on k > n or an inconsistent restriction.
  explicit WordStream(WordSpace space);

  std::size_t chunk_count() const { return chunks_.size(); }

  template <class Fn>
  void visit_chunk(std::size_t c, Fn&& fn) const;

  template <class Fn>
  void visit_all(Fn&& fn) const {
    for (std::size_t c = 0; c < chunks_.size(); ++c) {
      visit_chunk(c, fn);
    }
  }

 private:
  struct Chunk {
    std::vector<int> holes;  // 0-based positions
    int first_value;         // numeral at the first open position; 0 if none
  };

  WordSpace space_;
  std::vector<int> values_;  // candidate numerals, ascending
  std::vector<Chunk> chunks_;
};

template <class Fn>
void WordStream::visit_chunk(std::size_t c, Fn&& fn) const {
  const Chunk& chunk = chunks_.at(c);
  const int n = space_.n;
  LaguerreWord word;
  word.letters_.assign(static_cast<std::size_t>(n), Letter::hole());
  std::vector<std::size_t> open;
  {
    std::vector<bool> is_hole(static_cast<std::size_t>(n), false);
    for (int h : chunk.holes) {
      is_hole[static_cast<std::size_t>(h)] = true;
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      if (!is_hole[i]) {
        open.push_back(i);
      }
    }
  }
  if (open.empty()) {
    fn(static_cast<const LaguerreWord&>(word));
    return;
  }
  std::vector<bool> used(values_.size(), false);
  // Position 0 of `open` is pinned to chunk.first_value.
  std::size_t first_index = 0;
  while (values_[first_index] != chunk.first_value) {
    ++first_index;
  }
  used[first_index] = true;
  word.letters_[open[0]] = Letter::num(chunk.first_value);

  auto recurse = [&](auto& self, std::size_t t) -> void {
    if (t == open.size()) {
      fn(static_cast<const LaguerreWord&>(word));
      return;
    }
    for (std::size_t v = 0; v < values_.size(); ++v) {
      if (used[v]) {
        continue;
      }
      used[v] = true;
      word.letters_[open[t]] = Letter::num(values_[v]);
      self(self, t + 1);
      used[v] = false;
    }
    word.letters_[open[t]] = Letter::hole();
  };
  recurse(recurse, 1);
}

/// All words in a space, in stream order.
std::vector<LaguerreWord> enumerate_words(const WordSpace& space);
std::vector<LaguerreWord> enumerate_words(int n, int k);

// --------------------------------------------------------------- matrices

/// n x n (0,1)-matrix with at most one 1 per row and per column. Rows and
/// columns are 1-based.
class ZeroOneMatrix {
 public:
  ZeroOneMatrix() = default;
  /// Throws std::invalid_argument on out-of-range cells or a repeated
  /// row/column.
  ZeroOneMatrix(int n, const std::vector<std::pair<int, int>>& ones);

  int n() const { return n_; }
  bool at(int row, int col) const { return col_of_row_[static_cast<std::size_t>(row)] == col; }
  /// Column holding the 1 of `row`, or 0.
  int col_of_row(int row) const { return col_of_row_[static_cast<std::size_t>(row)]; }
  /// Row holding the 1 of `col`, or 0.
  int row_of_col(int col) const { return row_of_col_[static_cast<std::size_t>(col)]; }
  std::vector<std::pair<int, int>> ones() const;

  /// {"n":8,"ones":[[1,3],...]}
  std::string to_json() const;
  static ZeroOneMatrix from_json(std::string_view text);

  bool operator==(const ZeroOneMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> col_of_row_;  // index 0 unused
  std::vector<int> row_of_col_;
};

ZeroOneMatrix word_to_matrix(const LaguerreWord& w);
LaguerreWord matrix_to_word(const ZeroOneMatrix& m);

/// Zeros left after deleting those below a 1 in their column, those right
/// of a 1 in their row, and those whose row and column are both empty.
int matrix_survivor_inv(const ZeroOneMatrix& m);

/// Zeros above a column's 1 when the row above that 1 has a 1 further right
/// or no 1 at all, plus zeros left of a row's 1 in an empty column.
int matrix_survivor_maj(const ZeroOneMatrix& m);

// ---------------------------------------------------------- distributions

enum class QStatistic { none, inv, maj, inv0, maj0, tilde_inv_filled };

struct WeightSpec {
  QStatistic q_stat = QStatistic::maj;
  bool rlmin = true;  // multiply by b^{rlmin}
};

int statistic_value(const StatRecord& s, QStatistic stat);

/// Sum over the space of b^{rlmin} q^{stat} (as selected by `weight`).
Poly distribution(const WordSpace& space, WeightSpec weight, unsigned jobs = default_jobs());
Poly distribution(int n, int k, WeightSpec weight, unsigned jobs = default_jobs());

/// qbinom(n,k) [k+1]_{b,q} ... [n]_{b,q}
Poly mahonian_stirling_product(int n, int k);

/// Both sides of the Haglund-Remmel-Wilson identity for partial
/// permutations, with denominators cleared term by term.
std::pair<Poly, Poly> hrw_sides(int n, int k, unsigned jobs = default_jobs());

}  // namespace mahonian
