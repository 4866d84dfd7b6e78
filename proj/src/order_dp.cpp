#include "wbnsl/order_dp.hpp"

#include <limits>
#include <stdexcept>

namespace wbnsl {

namespace {

std::vector<VarSet> prefix_sets(const Ordering& tau) {
  const int n = tau.size();
  std::vector<VarSet> prefix;
  prefix.reserve(static_cast<std::size_t>(n));
  VarSet acc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    prefix.push_back(acc);
    acc.set(static_cast<std::size_t>(tau.at(i)));
  }
  return prefix;
}

}  // namespace

OrderingRestrictedScores restrict_to_ordering(const MultiScores& scores, const Ordering& tau) {
  if (tau.size() != scores.size())
    throw std::invalid_argument("ordering does not match the instance");
  OrderingRestrictedScores out;
  out.base = &scores;
  out.kept.resize(static_cast<std::size_t>(scores.size()));
  std::vector<VarSet> prefix = prefix_sets(tau);
  for (int pos = 0; pos < tau.size(); ++pos) {
    VarId v = tau.at(pos);
    auto& kept = out.kept[static_cast<std::size_t>(v)];
    const auto& triples = scores.triples(v);
    for (int idx = 0; idx < static_cast<int>(triples.size()); ++idx) {
      if (triples[static_cast<std::size_t>(idx)].parents.is_subset_of(
              prefix[static_cast<std::size_t>(pos)]))
        kept.push_back(idx);
    }
  }
  return out;
}

ScoredDag best_dag_for_ordering(const MultiScores& scores, const Ordering& tau, int k) {
  if (k < 0) throw std::invalid_argument("weight budget must be nonnegative");
  const int n = scores.size();
  OrderingRestrictedScores restricted = restrict_to_ordering(scores, tau);

  std::vector<int> chosen(static_cast<std::size_t>(n), -1);
  if (k == 0) {
    // Plain case: maximize per variable over weight-zero surviving triples.
    for (int v = 0; v < n; ++v) {
      double best = -std::numeric_limits<double>::infinity();
      for (int idx : restricted.kept[static_cast<std::size_t>(v)]) {
        const auto& t = scores.triple(v, idx);
        if (t.weight == 0 && t.score > best) {
          best = t.score;
          chosen[static_cast<std::size_t>(v)] = idx;
        }
      }
    }
    return make_scored_dag(scores, std::move(chosen), tau);
  }

  // table[i][k']: best score when only positions i.. may pick parents and
  // their weights must stay within k'. Filled from the back.
  const int cols = k + 1;
  std::vector<double> table(static_cast<std::size_t>((n + 1) * cols), 0.0);
  std::vector<int> pick(static_cast<std::size_t>(n * cols), -1);
  for (int i = n - 1; i >= 0; --i) {
    VarId v = tau.at(i);
    const auto& kept = restricted.kept[static_cast<std::size_t>(v)];
    for (int budget = 0; budget <= k; ++budget) {
      double best = -std::numeric_limits<double>::infinity();
      int best_idx = -1;
      for (int idx : kept) {
        const auto& t = scores.triple(v, idx);
        if (t.weight > budget) continue;
        double cand = t.score +
                      table[static_cast<std::size_t>((i + 1) * cols + budget -
                                                     static_cast<int>(t.weight))];
        if (cand > best) {
          best = cand;
          best_idx = idx;
        }
      }
      table[static_cast<std::size_t>(i * cols + budget)] = best;
      pick[static_cast<std::size_t>(i * cols + budget)] = best_idx;
    }
  }

  int budget = k;
  for (int i = 0; i < n; ++i) {
    VarId v = tau.at(i);
    int idx = pick[static_cast<std::size_t>(i * cols + budget)];
    chosen[static_cast<std::size_t>(v)] = idx;
    budget -= static_cast<int>(scores.triple(v, idx).weight);
  }
  return make_scored_dag(scores, std::move(chosen), tau);
}

double ordering_score(const MultiScores& scores, const Ordering& tau) {
  const int n = scores.size();
  if (tau.size() != n) throw std::invalid_argument("ordering does not match the instance");
  std::vector<VarSet> prefix = prefix_sets(tau);
  double total = 0.0;
  for (int v = 0; v < n; ++v) {
    double best = -std::numeric_limits<double>::infinity();
    const VarSet& before = prefix[static_cast<std::size_t>(tau.position_of(v))];
    for (const auto& t : scores.triples(v)) {
      if (t.weight == 0 && t.score > best && t.parents.is_subset_of(before)) best = t.score;
    }
    total += best;
  }
  return total;
}

}  // namespace wbnsl
