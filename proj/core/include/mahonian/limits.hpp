#pragma once

namespace mahonian {

/// Hard ceiling on the ground-set size of any brute-force enumeration. Read
/// once from the MAHONIAN_MAX_N environment variable; defaults to 9.
int enumeration_ceiling();

/// Throws std::length_error naming `what` when n exceeds the ceiling.
void require_within_ceiling(int n, const char* what);

}  // namespace mahonian
