#pragma once

#include <cstdint>
#include <string>

#include "wbnsl/core.hpp"

namespace wbnsl {

// Plain (weight budget 0) hill climbing over orderings, combining single
// insertions with exhaustive reordering of sliding windows of radius+1
// consecutive positions.
struct HillclimbConfig {
  int radius = 3;
  double epsilon = 1e-9;       // required gain per accepted move
  long long max_iterations = 0;  // accepted-move cap, 0 = unlimited
  int restarts = 1;
  std::uint64_t seed = 0;
};

struct HillclimbResult {
  Ordering ordering;
  ScoredDag dag;
  long long iterations = 0;  // accepted moves
};

// Ordering that agrees with tau outside positions [start, start+radius] and
// maximizes the plain ordering score; returns tau itself when it already
// attains the window maximum. Subset DP over the window's variables: the
// variables outside the window see the same predecessor sets under every
// window permutation, so only the window-internal scores vary.
Ordering best_window_permutation(const MultiScores& scores, const Ordering& tau, int start,
                                 int radius);

// First-improvement local search: scan all single insertions, then slide
// the window left to right, and repeat until no move gains more than
// epsilon. The result is radius-optimal for the combined neighborhood.
HillclimbResult hillclimb(const MultiScores& scores, const Ordering& start,
                          const HillclimbConfig& config);

struct RestartStats {
  std::vector<Ordering> starts;
  std::vector<double> scores;
  std::vector<long long> iterations;
  double average = 0.0;
  double maximum = 0.0;
};

// Runs hillclimb from `restarts` seeded uniform random orderings. The
// starts depend only on (seed, restart index), never on the radius, so runs
// with different radii race from identical lines.
RestartStats run_restarts(const MultiScores& scores, const HillclimbConfig& config,
                          int threads = 1);

// CSV rows instance,r,restart,score,iterations followed by avg and max
// summary rows.
std::string restart_stats_csv(const RestartStats& stats, const std::string& instance,
                              int radius);

}  // namespace wbnsl
