#pragma once

#include "wbnsl/core.hpp"
#include "wbnsl/distances.hpp"

namespace wbnsl {

// Reference solvers by exhaustion; deliberately independent of the dynamic
// programs they are used to check. Only sensible for tiny instances.
struct OracleBudget {
  int max_vars = 7;
  long long max_enumerations = 1000000;
};

// Exact optimum over every per-variable triple choice that induces an
// acyclic digraph of total weight at most k. Choices are enumerated in
// lexicographic triple-index order and ties keep the first maximum.
ScoredDag brute_best_dag(const MultiScores& scores, int k, const OracleBudget& budget = {});

// Exact optimum over triple choices whose parents all precede their owner
// in tau (acyclicity is then automatic).
ScoredDag brute_best_dag_for_ordering(const MultiScores& scores, const Ordering& tau, int k,
                                      const OracleBudget& budget = {});

// Exact optimum of best_dag_for_ordering over every ordering within the
// given distance of tau, found by filtering all permutations.
SearchResult brute_local_search(const MultiScores& scores, const Ordering& tau, int k, int r,
                                DistanceKind kind, const OracleBudget& budget = {});

// All orderings of n variables in lexicographic sequence order.
std::vector<Ordering> all_orderings(int n);

}  // namespace wbnsl
