#pragma once

#include <cstdint>

#include "wbnsl/core.hpp"

namespace wbnsl {

// Sub-instance over the variables of a window of the ordering: parents are
// intersected into the window, triples with parents beyond the window's end
// are dropped, and indices map back to the source instance.
struct WindowRestrictedScores {
  MultiScores scores;                           // over local ids, in window order
  std::vector<VarId> source_var;                // local id -> original id
  std::vector<std::vector<int>> source_triple;  // local (var, triple) -> original triple
};

// Window positions a..b inclusive, 0-based. For every variable in the
// window, each original triple whose parents all appear at positions <= b
// yields a local triple with those parents clipped to the window; clipping
// may create duplicate local parent sets and all of them are kept.
WindowRestrictedScores restrict_window(const MultiScores& scores, const Ordering& tau, int a,
                                       int b);

struct InvwinOptions {
  std::uint64_t seed = 0;
  long long oracle_reps = 0;  // <= 0 picks the radius default
  bool exact = false;         // all-distinct-color window solves, no randomness
  int threads = 1;
};

// Suffix DP over window partitions: each window is solved with the
// inversions search at radius r, and windows are chained under the shared
// weight budget. The witness keeps every variable inside its traceback
// window, so its inversion-window distance from tau is at most r.
// Deterministic given the seed; window solves derive their seeds from the
// window coordinates, so the thread count does not affect the result.
SearchResult ls_invwin(const MultiScores& scores, const Ordering& tau, int k, int r,
                       const InvwinOptions& options = {});

}  // namespace wbnsl
