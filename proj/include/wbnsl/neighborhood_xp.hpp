#pragma once

#include "wbnsl/core.hpp"
#include "wbnsl/distances.hpp"

namespace wbnsl {

// Exhaustive search of the insert- or swap-ball around an ordering. Cost is
// n^O(r): polynomial for fixed radius but with the radius in the exponent,
// and no fixed-parameter algorithm is expected for these two distances. The
// CLI guards calls with a work bound for that reason.
struct NeighborhoodSpec {
  DistanceKind kind = DistanceKind::insert;  // insert or swap
  int radius = 1;
};

// Every ordering at insert distance <= radius, each exactly once, in
// deterministic breadth-first discovery order (radius 0 first).
std::vector<Ordering> enumerate_insert_neighbors(const Ordering& tau, int radius);

// Every ordering at swap distance <= radius, each exactly once, same order.
std::vector<Ordering> enumerate_swap_neighbors(const Ordering& tau, int radius);

// Maximum of best_dag_for_ordering over the chosen ball; the first ordering
// reaching the maximum score in enumeration order wins.
SearchResult local_search_xp(const MultiScores& scores, const Ordering& tau, int k,
                             const NeighborhoodSpec& spec);

// Crude upper estimate of the ball size, for refusing oversized requests.
double estimate_neighborhood_size(int n, const NeighborhoodSpec& spec);

}  // namespace wbnsl
