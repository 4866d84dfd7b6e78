#pragma once

#include "wbnsl/core.hpp"

namespace wbnsl {

// Triples filtered to parent sets that lie entirely before their owner in a
// fixed ordering. Indices refer back to the base instance so results can be
// reported against it.
struct OrderingRestrictedScores {
  const MultiScores* base = nullptr;
  std::vector<std::vector<int>> kept;  // per variable: surviving triple indices, ascending
};

OrderingRestrictedScores restrict_to_ordering(const MultiScores& scores, const Ordering& tau);

// Best assignment among all arc sets with `tau` as a topological ordering
// and total weight at most k: budget DP over positions, O(k * instance).
// Ties during traceback go to the lowest triple index.
ScoredDag best_dag_for_ordering(const MultiScores& scores, const Ordering& tau, int k);

// Score-only fast path for k = 0: per-variable maximum over weight-zero
// triples that respect the ordering.
double ordering_score(const MultiScores& scores, const Ordering& tau);

}  // namespace wbnsl
