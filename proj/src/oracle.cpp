#include "wbnsl/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "wbnsl/order_dp.hpp"

namespace wbnsl {

namespace {

void check_vars(const MultiScores& scores, const OracleBudget& budget) {
  if (scores.size() > budget.max_vars)
    throw std::invalid_argument("instance exceeds the oracle variable cap");
}

// Topological ordering of the chosen arc set, smallest id first among
// ready vertices; empty when cyclic.
std::vector<VarId> topological_witness(const MultiScores& scores,
                                       const std::vector<int>& chosen) {
  const int n = scores.size();
  std::vector<int> indegree(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    indegree[static_cast<std::size_t>(v)] = static_cast<int>(
        scores.triple(v, chosen[static_cast<std::size_t>(v)]).parents.count());
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<VarId> order;
  order.reserve(static_cast<std::size_t>(n));
  VarSet done(static_cast<std::size_t>(n));
  for (int step = 0; step < n; ++step) {
    int next = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (scores.triple(v, chosen[static_cast<std::size_t>(v)]).parents.is_subset_of(done)) {
        next = v;
        break;
      }
    }
    if (next < 0) return {};
    placed[static_cast<std::size_t>(next)] = true;
    done.set(static_cast<std::size_t>(next));
    order.push_back(next);
  }
  return order;
}

// Enumerates triple choices depth-first in lexicographic index order,
// pruning on the weight budget.
template <typename Leaf>
void enumerate_choices(const MultiScores& scores, int k, const OracleBudget& budget,
                       long long& leaves, Leaf&& leaf) {
  const int n = scores.size();
  std::vector<int> chosen(static_cast<std::size_t>(n), 0);
  long long weight = 0;

  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (++leaves > budget.max_enumerations)
        throw std::runtime_error("oracle enumeration budget exceeded");
      leaf(chosen, weight);
      return;
    }
    const auto& ts = scores.triples(v);
    for (int idx = 0; idx < static_cast<int>(ts.size()); ++idx) {
      long long w = ts[static_cast<std::size_t>(idx)].weight;
      if (weight + w > k) continue;
      chosen[static_cast<std::size_t>(v)] = idx;
      weight += w;
      self(self, v + 1);
      weight -= w;
    }
  };
  rec(rec, 0);
}

}  // namespace

ScoredDag brute_best_dag(const MultiScores& scores, int k, const OracleBudget& budget) {
  check_vars(scores, budget);
  if (k < 0) throw std::invalid_argument("weight budget must be nonnegative");

  double best_score = -std::numeric_limits<double>::infinity();
  std::vector<int> best_chosen;
  std::vector<VarId> best_witness;
  long long leaves = 0;
  enumerate_choices(scores, k, budget, leaves,
                    [&](const std::vector<int>& chosen, long long) {
                      double score = 0.0;
                      for (int v = 0; v < scores.size(); ++v)
                        score += scores.triple(v, chosen[static_cast<std::size_t>(v)]).score;
                      if (score <= best_score) return;
                      std::vector<VarId> witness = topological_witness(scores, chosen);
                      if (witness.empty()) return;  // cyclic
                      best_score = score;
                      best_chosen = chosen;
                      best_witness = std::move(witness);
                    });
  return make_scored_dag(scores, std::move(best_chosen), Ordering(std::move(best_witness)));
}

ScoredDag brute_best_dag_for_ordering(const MultiScores& scores, const Ordering& tau, int k,
                                      const OracleBudget& budget) {
  check_vars(scores, budget);
  if (k < 0) throw std::invalid_argument("weight budget must be nonnegative");
  if (tau.size() != scores.size())
    throw std::invalid_argument("ordering does not match the instance");

  double best_score = -std::numeric_limits<double>::infinity();
  std::vector<int> best_chosen;
  long long leaves = 0;
  enumerate_choices(scores, k, budget, leaves,
                    [&](const std::vector<int>& chosen, long long) {
                      double score = 0.0;
                      for (int v = 0; v < scores.size(); ++v) {
                        const ScoreTriple& t =
                            scores.triple(v, chosen[static_cast<std::size_t>(v)]);
                        for (std::size_t u = t.parents.find_first(); u != VarSet::npos;
                             u = t.parents.find_next(u))
                          if (tau.position_of(static_cast<VarId>(u)) > tau.position_of(v))
                            return;
                        score += t.score;
                      }
                      if (score <= best_score) return;
                      best_score = score;
                      best_chosen = chosen;
                    });
  return make_scored_dag(scores, std::move(best_chosen), tau);
}

SearchResult brute_local_search(const MultiScores& scores, const Ordering& tau, int k, int r,
                                DistanceKind kind, const OracleBudget& budget) {
  check_vars(scores, budget);
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");

  SearchResult result;
  bool have = false;
  long long enumerated = 0;
  std::vector<VarId> seq(static_cast<std::size_t>(scores.size()));
  for (int v = 0; v < scores.size(); ++v) seq[static_cast<std::size_t>(v)] = v;
  do {
    if (++enumerated > budget.max_enumerations)
      throw std::runtime_error("oracle enumeration budget exceeded");
    Ordering sigma(seq);
    if (ordering_distance(kind, tau, sigma) > r) continue;
    ScoredDag dag = best_dag_for_ordering(scores, sigma, k);
    ++result.evaluations;
    if (!have || dag.score > result.dag.score) {
      result.dag = std::move(dag);
      have = true;
    }
  } while (std::next_permutation(seq.begin(), seq.end()));
  return result;
}

std::vector<Ordering> all_orderings(int n) {
  std::vector<Ordering> out;
  std::vector<VarId> seq(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) seq[static_cast<std::size_t>(v)] = v;
  do {
    out.emplace_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

}  // namespace wbnsl
