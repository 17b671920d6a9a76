#pragma once

// Identity-verification harness: every id names one exhaustive check over a
// bounded range, with a re-checkable counterexample on failure.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mahonian {

struct Counterexample {
  std::string object;  // what was checked, e.g. "n=3 k=1"
  std::string lhs;
  std::string rhs;
};

struct VerifyReport {
  std::string id;
  std::string bounds;  // e.g. "n_max=6" or "N=8 generic=6"
  bool pass = true;
  long long cases = 0;  // individual equalities checked
  std::optional<Counterexample> counterexample;
  double seconds = 0.0;
};

/// All ids, in the order `--all` runs them.
const std::vector<std::string>& verify_ids();
bool is_verify_id(std::string_view id);

/// Default bound of an id (its largest sub-bound when it has several).
int default_bound(std::string_view id);

struct VerifyOptions {
  /// Explicit bound: replaces every sub-bound of the id.
  std::optional<int> n_max;
  /// Cap: each default sub-bound is reduced to at most this value.
  std::optional<int> cap;
  unsigned jobs = 1;
};

/// Runs one check. Throws std::invalid_argument on an unknown id and
/// std::length_error when an explicit bound exceeds the enumeration
/// ceiling. Default bounds are clamped to the ceiling.
VerifyReport run_verify(std::string_view id, const VerifyOptions& options);

}  // namespace mahonian
