#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "wbnsl/core.hpp"

namespace wbnsl {

// Assignment of every variable to one of num_colors color classes; a class
// is the set of variables that keep their relative order during the search.
struct Coloring {
  std::vector<int> color_of;  // variable -> color in [0, num_colors)
  int num_colors = 1;
};

Coloring all_distinct_coloring(int n);
Coloring single_color_coloring(int n);
Coloring uniform_random_coloring(int n, int num_colors, std::mt19937_64& rng);

// Number of colors drawn for a given radius: max(1, ceil(sqrt(8 r))).
int radius_color_count(int radius);

// Repetitions needed for the constant success probability:
// ceil((2e)^sqrt(r/8)).
long long default_repetitions(int radius);

struct DpStats {
  unsigned long long keys = 0;  // distinct memo entries created
};

// Best assignment whose witness ordering is within `radius` adjacent
// transpositions of tau AND preserves the relative order inside every color
// class. Memoized top-down over (class-prefix vector, remaining weight,
// remaining inversions); at most (radius+2)^colors * (k+1) * (radius+1)
// entries are created. With all-distinct colors the class restriction is
// vacuous and the result is the exact optimum over the radius ball.
SearchResult color_restricted_solve(const MultiScores& scores, const Ordering& tau, int k,
                                    int radius, const Coloring& coloring,
                                    DpStats* stats = nullptr);

// Randomized search over the radius ball: best color-restricted solution
// across `repetitions` independent uniform colorings with
// radius_color_count(radius) colors (repetitions <= 0 picks the default).
// Always feasible; with the default repetitions the result is optimal with
// probability at least 1 - 1/e. Deterministic given the seed. When stats is
// supplied it receives the largest per-repetition entry count.
SearchResult ls_inversions(const MultiScores& scores, const Ordering& tau, int k, int radius,
                           std::uint64_t seed, long long repetitions = 0, int threads = 1,
                           DpStats* stats = nullptr);

// Deterministic exact variant (all-distinct coloring): practical only for
// small instances.
SearchResult ls_inversions_exact(const MultiScores& scores, const Ordering& tau, int k,
                                 int radius);

// Incremental interface: one memo shared across root budgets, used by the
// window solver to read off solutions for every budget below k.
class ColorRestrictedSolver {
 public:
  ColorRestrictedSolver(const MultiScores& scores, const Ordering& tau, int max_budget,
                        int radius, Coloring coloring);
  ~ColorRestrictedSolver();
  ColorRestrictedSolver(ColorRestrictedSolver&&) noexcept;

  double solve(int budget);       // budget in [0, max_budget]
  ScoredDag extract(int budget);  // assignment behind solve(budget)
  DpStats stats() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wbnsl
