#include "wbnsl/neighborhood_xp.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "wbnsl/order_dp.hpp"
#include "wbnsl/util.hpp"

namespace wbnsl {

namespace {

// Both distances are move metrics: every ordering at distance m+1 is one
// move away from one at distance m, so a breadth-first expansion with
// deduplication enumerates the ball exactly. Members at the final level are
// not expanded.
template <typename MoveVisitor>
std::vector<Ordering> ball(const Ordering& tau, int radius, MoveVisitor&& moves) {
  std::vector<std::vector<VarId>> discovered{tau.sequence()};
  std::unordered_set<std::vector<int>, VectorHash> seen{tau.sequence()};
  std::size_t level_begin = 0;
  for (int depth = 0; depth < radius; ++depth) {
    std::size_t level_end = discovered.size();
    if (level_begin == level_end) break;  // ball saturated
    for (std::size_t i = level_begin; i < level_end; ++i) {
      std::vector<VarId> base = discovered[i];  // copy: discovered may grow
      moves(base, [&](std::vector<VarId>&& candidate) {
        if (seen.insert(candidate).second) discovered.push_back(std::move(candidate));
      });
    }
    level_begin = level_end;
  }
  std::vector<Ordering> out;
  out.reserve(discovered.size());
  for (auto& seq : discovered) out.emplace_back(std::move(seq));
  return out;
}

template <typename Emit>
void insert_moves(const std::vector<VarId>& seq, Emit&& emit) {
  const int n = static_cast<int>(seq.size());
  for (int from = 0; from < n; ++from) {
    for (int to = 0; to < n; ++to) {
      if (to == from) continue;
      std::vector<VarId> next = seq;
      VarId v = next[static_cast<std::size_t>(from)];
      next.erase(next.begin() + from);
      next.insert(next.begin() + to, v);
      emit(std::move(next));
    }
  }
}

template <typename Emit>
void swap_moves(const std::vector<VarId>& seq, Emit&& emit) {
  const int n = static_cast<int>(seq.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<VarId> next = seq;
      std::swap(next[static_cast<std::size_t>(i)], next[static_cast<std::size_t>(j)]);
      emit(std::move(next));
    }
  }
}

}  // namespace

std::vector<Ordering> enumerate_insert_neighbors(const Ordering& tau, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  return ball(tau, radius,
              [](const std::vector<VarId>& seq, auto&& emit) { insert_moves(seq, emit); });
}

std::vector<Ordering> enumerate_swap_neighbors(const Ordering& tau, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  return ball(tau, radius,
              [](const std::vector<VarId>& seq, auto&& emit) { swap_moves(seq, emit); });
}

SearchResult local_search_xp(const MultiScores& scores, const Ordering& tau, int k,
                             const NeighborhoodSpec& spec) {
  std::vector<Ordering> neighborhood;
  switch (spec.kind) {
    case DistanceKind::insert:
      neighborhood = enumerate_insert_neighbors(tau, spec.radius);
      break;
    case DistanceKind::swap:
      neighborhood = enumerate_swap_neighbors(tau, spec.radius);
      break;
    default:
      throw std::invalid_argument("exhaustive search only covers insert and swap");
  }
  SearchResult result;
  bool have = false;
  for (const Ordering& candidate : neighborhood) {
    ScoredDag dag = best_dag_for_ordering(scores, candidate, k);
    ++result.evaluations;
    if (!have || dag.score > result.dag.score) {
      result.dag = std::move(dag);
      have = true;
    }
  }
  return result;
}

double estimate_neighborhood_size(int n, const NeighborhoodSpec& spec) {
  double per_move = spec.kind == DistanceKind::insert
                        ? static_cast<double>(n) * (n - 1)
                        : static_cast<double>(n) * (n - 1) / 2.0;
  double total = 1.0;
  double level = 1.0;
  for (int depth = 0; depth < spec.radius; ++depth) {
    level *= per_move;
    total += level;
    if (total > 1e18) return total;
  }
  return total;
}

}  // namespace wbnsl
