#pragma once

#include <string>

#include "wbnsl/core.hpp"

namespace wbnsl {

// All five distances require orderings over the same variable set and are
// symmetric with d(x,x) = 0.

// Number of discordant pairs, i.e. minimum number of adjacent
// transpositions. O(n log n).
long long kendall_tau(const Ordering& a, const Ordering& b);

// Minimum number of remove-and-reinsert operations: n minus the length of
// the longest common subsequence.
int insert_distance(const Ordering& a, const Ordering& b);

// Minimum number of arbitrary transpositions: n minus the cycle count of
// the position mapping.
int swap_distance(const Ordering& a, const Ordering& b);

// Span between the first and the last differing position (0 when equal).
int win_distance(const Ordering& a, const Ordering& b);

// Minimum over equal-content interval partitions of the maximum per-interval
// inversion count. Computed on the finest such partition: a coarser block's
// inversion count is the sum of its sub-blocks' counts, so coarsening never
// lowers the maximum.
long long invwin_distance(const Ordering& a, const Ordering& b);

enum class DistanceKind { insert, swap, inversions, inversion_window };

long long ordering_distance(DistanceKind kind, const Ordering& a, const Ordering& b);

std::string distance_kind_name(DistanceKind kind);

}  // namespace wbnsl
