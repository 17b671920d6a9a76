#pragma once

// Multiset permutations, b-codes and Carlitz's insertion bijection, which
// carries the inversion number to the major index while keeping the set of
// right-to-left minima.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mahonian/polyring.hpp"
#include "mahonian/words.hpp"

namespace mahonian {

/// A rearrangement of {1^{m_1}, ..., r^{m_r}}.
class MultisetWord {
 public:
  MultisetWord() = default;
  /// Throws std::invalid_argument unless each value i occurs exactly m_i
  /// times and no other value occurs.
  MultisetWord(std::vector<int> multiplicities, std::vector<int> letters);

  /// Space-separated values; the alphabet is read off the word, with
  /// r = max letter.
  static MultisetWord parse(std::string_view text);

  const std::vector<int>& multiplicities() const { return mult_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  /// Nondecreasing rearrangement.
  std::vector<int> sorted() const;
  std::string to_string() const;

  bool operator==(const MultisetWord&) const = default;

 private:
  std::vector<int> mult_;
  std::vector<int> letters_;
};

/// Parses "2,1,3" into multiplicities.
std::vector<int> parse_alphabet(std::string_view text);

/// Number of rearrangements, n! / (m_1! ... m_r!).
Integer multiset_count(const std::vector<int>& multiplicities);

/// Every rearrangement once, in lexicographic order.
std::vector<MultisetWord> enumerate_multiset(const std::vector<int>& multiplicities);

/// Compositions of n into positive parts, at most max_parts of them
/// (max_parts < 0 means unbounded). n = 0 yields the empty composition.
std::vector<std::vector<int>> compositions(int n, int max_parts = -1);

/// b_i counts the letters smaller than the i-th letter of the sorted word
/// (equal letters matched left to right) that sit to its right.
std::vector<int> b_code(const MultisetWord& w);

/// Inverse of b_code for a given alphabet. Throws std::invalid_argument if
/// the code is not the b-code of any rearrangement.
MultisetWord word_from_b_code(const std::vector<int>& multiplicities, const std::vector<int>& code);

/// Slot labels of a word for insertion: label[s] belongs to the slot in
/// front of letter s (s = size() is the end slot).
std::vector<int> insertion_slot_labels(const std::vector<int>& alpha);

/// The intermediate words alpha_1, ..., alpha_n of the insertion.
std::vector<std::vector<int>> carlitz_trace(const MultisetWord& w);

MultisetWord carlitz_psi(const MultisetWord& w);
MultisetWord carlitz_psi_inverse(const MultisetWord& w);

/// Values whose first occurrence is <= every letter to its right, ascending.
std::vector<int> rlmin_multiset(const MultisetWord& w);

/// Both sides of the multiset Haglund-Remmel-Wilson identity in q, z.
std::pair<Poly, Poly> wilson_sides(const std::vector<int>& multiplicities);

/// (sum q^inv, sum q^maj) over the rearrangements.
std::pair<Poly, Poly> macmahon_sides(const std::vector<int>& multiplicities);

}  // namespace mahonian
