#pragma once

// Statistics shared by every word model: Laguerre words, multiset words and
// ordinary permutations. A word is any random-access range of totally ordered
// letters; positions are 1-based as in the usual combinatorial conventions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mahonian/parallel.hpp"
#include "mahonian/polyring.hpp"

namespace mahonian {

/// Positions i in [1, len-1] with w_i > w_{i+1}. Equal letters never form a
/// descent.
template <class Word>
std::vector<int> descent_set(const Word& w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < std::size(w); ++i) {
    if (w[i + 1] < w[i]) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

/// #{j < i : w_j > w_i} for a 1-based position i.
template <class Word>
int inv_box(const Word& w, std::size_t i) {
  if (i < 1 || i > std::size(w)) {
    throw std::out_of_range("inv_box: position " + std::to_string(i) + " outside [1, " +
                            std::to_string(std::size(w)) + "]");
  }
  int count = 0;
  for (std::size_t j = 0; j + 1 < i; ++j) {
    if (w[i - 1] < w[j]) {
      ++count;
    }
  }
  return count;
}

/// inv_box at every position; entry i-1 belongs to position i.
template <class Word>
std::vector<int> inv_box_vector(const Word& w) {
  std::vector<int> out(std::size(w), 0);
  for (std::size_t i = 0; i < std::size(w); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (w[i] < w[j]) {
        ++out[i];
      }
    }
  }
  return out;
}

template <class Word>
int inversions(const Word& w) {
  int count = 0;
  for (std::size_t i = 0; i < std::size(w); ++i) {
    for (std::size_t j = i + 1; j < std::size(w); ++j) {
      if (w[j] < w[i]) {
        ++count;
      }
    }
  }
  return count;
}

template <class Word>
int major_index(const Word& w) {
  int sum = 0;
  for (std::size_t i = 0; i + 1 < std::size(w); ++i) {
    if (w[i + 1] < w[i]) {
      sum += static_cast<int>(i) + 1;
    }
  }
  return sum;
}

/// Adds q^base * prod_s (1 + z q^{-s}) to `tally` as monomials in z and q.
/// Every resulting q-exponent must be nonnegative; a negative one means the
/// caller's statistics are inconsistent and raises std::logic_error.
void add_cleared_product(int base, const std::vector<int>& shifts, MonomialTally& tally);

/// Inversion side of the Haglund-Remmel-Wilson sum for one word:
/// q^{inv} prod_{i in Des} (1 + z / q^{1 + inv_box(i)}).
template <class Word>
void add_hrw_inv_term(const Word& w, int inv, MonomialTally& tally) {
  const auto boxes = inv_box_vector(w);
  std::vector<int> shifts;
  for (int i : descent_set(w)) {
    shifts.push_back(1 + boxes[static_cast<std::size_t>(i) - 1]);
  }
  add_cleared_product(inv, shifts, tally);
}

/// Major-index side for one word: q^{maj} prod_{i=1..des} (1 + z / q^i).
inline void add_hrw_maj_term(int maj, int des, MonomialTally& tally) {
  std::vector<int> shifts(static_cast<std::size_t>(des));
  for (int i = 0; i < des; ++i) {
    shifts[static_cast<std::size_t>(i)] = i + 1;
  }
  add_cleared_product(maj, shifts, tally);
}

}  // namespace mahonian
