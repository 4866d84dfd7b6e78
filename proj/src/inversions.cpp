#include "wbnsl/inversions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "wbnsl/util.hpp"

namespace wbnsl {

namespace {

using Key = unsigned __int128;

struct KeyHash {
  std::size_t operator()(Key k) const {
    return static_cast<std::size_t>(splitmix64(static_cast<std::uint64_t>(k)) ^
                                    splitmix64(static_cast<std::uint64_t>(k >> 64)));
  }
};

struct MemoEntry {
  double score = 0.0;
  std::int32_t color = -1;   // class whose prefix-last element was removed
  std::int32_t spent = 0;    // weight spent on that element's triple
  std::int32_t triple = -1;  // its chosen triple index
};

// Triple of one variable in scan order (score descending, index ascending).
struct RankedTriple {
  double score;
  long long weight;
  int index;
  const VarSet* parents;
};

}  // namespace

Coloring all_distinct_coloring(int n) {
  Coloring chi;
  chi.num_colors = std::max(1, n);
  chi.color_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) chi.color_of[static_cast<std::size_t>(v)] = v;
  return chi;
}

Coloring single_color_coloring(int n) {
  Coloring chi;
  chi.num_colors = 1;
  chi.color_of.assign(static_cast<std::size_t>(n), 0);
  return chi;
}

Coloring uniform_random_coloring(int n, int num_colors, std::mt19937_64& rng) {
  if (num_colors < 1) throw std::invalid_argument("need at least one color");
  Coloring chi;
  chi.num_colors = num_colors;
  chi.color_of.resize(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    chi.color_of[static_cast<std::size_t>(v)] = bounded_draw(rng, num_colors);
  return chi;
}

int radius_color_count(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  int s = static_cast<int>(std::ceil(std::sqrt(8.0 * radius)));
  while (s > 0 && static_cast<long long>(s - 1) * (s - 1) >= 8LL * radius) --s;
  while (static_cast<long long>(s) * s < 8LL * radius) ++s;
  return std::max(1, s);
}

long long default_repetitions(int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  double reps = std::pow(2.0 * std::exp(1.0), std::sqrt(radius / 8.0));
  return static_cast<long long>(std::ceil(reps - 1e-12));
}

struct ColorRestrictedSolver::Impl {
  const MultiScores& scores;
  const Ordering& tau;
  int max_budget;
  int radius;
  Coloring coloring;

  // per color: members in tau order and their tau positions (ascending)
  std::vector<std::vector<VarId>> members;
  std::vector<std::vector<int>> positions;
  std::vector<std::vector<RankedTriple>> ranked;  // per variable

  std::vector<int> prefix;  // current class-prefix lengths during recursion
  VarSet in_play;           // variables covered by the current prefixes
  std::vector<Key> stride;  // mixed-radix stride per color
  Key full_index = 0;

  std::unordered_map<Key, MemoEntry, KeyHash> memo;
  std::vector<std::vector<RankedTriple>> scratch;  // per recursion depth

  Impl(const MultiScores& scores_in, const Ordering& tau_in, int max_budget_in, int radius_in,
       Coloring coloring_in)
      : scores(scores_in),
        tau(tau_in),
        max_budget(max_budget_in),
        radius(radius_in),
        coloring(std::move(coloring_in)) {
    const int n = scores.size();
    if (tau.size() != n) throw std::invalid_argument("ordering does not match the instance");
    if (static_cast<int>(coloring.color_of.size()) != n)
      throw std::invalid_argument("coloring does not match the instance");
    if (max_budget < 0 || radius < 0)
      throw std::invalid_argument("budget and radius must be nonnegative");

    members.resize(static_cast<std::size_t>(coloring.num_colors));
    positions.resize(static_cast<std::size_t>(coloring.num_colors));
    for (int pos = 0; pos < n; ++pos) {
      VarId v = tau.at(pos);
      int c = coloring.color_of[static_cast<std::size_t>(v)];
      if (c < 0 || c >= coloring.num_colors)
        throw std::invalid_argument("color out of range");
      members[static_cast<std::size_t>(c)].push_back(v);
      positions[static_cast<std::size_t>(c)].push_back(pos);
    }

    ranked.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const auto& ts = scores.triples(v);
      auto& rv = ranked[static_cast<std::size_t>(v)];
      rv.reserve(ts.size());
      for (int idx = 0; idx < static_cast<int>(ts.size()); ++idx)
        rv.push_back(RankedTriple{ts[static_cast<std::size_t>(idx)].score,
                                  ts[static_cast<std::size_t>(idx)].weight, idx,
                                  &ts[static_cast<std::size_t>(idx)].parents});
      std::stable_sort(rv.begin(), rv.end(), [](const RankedTriple& a, const RankedTriple& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.index < b.index;
      });
    }

    const Key limit = ~Key{0};
    Key states = 1;
    stride.resize(static_cast<std::size_t>(coloring.num_colors));
    for (int c = 0; c < coloring.num_colors; ++c) {
      stride[static_cast<std::size_t>(c)] = states;
      Key radix = static_cast<Key>(members[static_cast<std::size_t>(c)].size()) + 1;
      if (states > limit / radix)
        throw std::invalid_argument("instance too large for the prefix-vector search");
      states *= radix;
    }
    Key budgets = static_cast<Key>(max_budget) + 1;
    Key radii = static_cast<Key>(radius) + 1;
    if (states > limit / budgets || states * budgets > limit / radii)
      throw std::invalid_argument("instance too large for the prefix-vector search");

    full_index = 0;
    prefix.resize(static_cast<std::size_t>(coloring.num_colors));
    for (int c = 0; c < coloring.num_colors; ++c) {
      prefix[static_cast<std::size_t>(c)] =
          static_cast<int>(members[static_cast<std::size_t>(c)].size());
      full_index += stride[static_cast<std::size_t>(c)] *
                    static_cast<Key>(prefix[static_cast<std::size_t>(c)]);
    }
    in_play = VarSet(static_cast<std::size_t>(n));
    in_play.set();
    scratch.resize(static_cast<std::size_t>(n) + 1);
  }

  Key key_of(Key prefix_index, int budget_left, int radius_left) const {
    return (prefix_index * (static_cast<Key>(max_budget) + 1) + static_cast<Key>(budget_left)) *
               (static_cast<Key>(radius) + 1) +
           static_cast<Key>(radius_left);
  }

  // Elements of the current prefixes placed after tau-position pos, the
  // element at pos itself excluded.
  int count_after(int pos) const {
    int total = 0;
    int before = 0;
    for (int c = 0; c < coloring.num_colors; ++c) {
      int len = prefix[static_cast<std::size_t>(c)];
      total += len;
      const auto& ps = positions[static_cast<std::size_t>(c)];
      before += static_cast<int>(
          std::lower_bound(ps.begin(), ps.begin() + len, pos) - ps.begin());
    }
    return total - before - 1;
  }

  // Best-score undominated (weight, score, index) options of v among triples
  // with parents inside the current prefixes; weights strictly decrease.
  void pareto_options(VarId v, int budget_left, std::vector<RankedTriple>& out) const {
    out.clear();
    long long min_weight = std::numeric_limits<long long>::max();
    for (const RankedTriple& t : ranked[static_cast<std::size_t>(v)]) {
      if (t.weight > budget_left || t.weight >= min_weight) continue;
      if (!t.parents->is_subset_of(in_play)) continue;
      out.push_back(t);
      min_weight = t.weight;
      if (min_weight == 0) break;
    }
  }

  double solve_rec(Key prefix_index, int budget_left, int radius_left, int depth) {
    Key key = key_of(prefix_index, budget_left, radius_left);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second.score;
    MemoEntry entry;
    if (prefix_index == 0) {
      memo.emplace(key, entry);
      return 0.0;
    }
    entry.score = -std::numeric_limits<double>::infinity();
    std::vector<RankedTriple>& options = scratch[static_cast<std::size_t>(depth)];
    for (int c = 0; c < coloring.num_colors; ++c) {
      int len = prefix[static_cast<std::size_t>(c)];
      if (len == 0) continue;
      VarId last = members[static_cast<std::size_t>(c)][static_cast<std::size_t>(len - 1)];
      int moves = count_after(positions[static_cast<std::size_t>(c)][static_cast<std::size_t>(
          len - 1)]);
      if (moves > radius_left) continue;
      pareto_options(last, budget_left, options);
      // options hold weights in decreasing order; visit them increasing so
      // ties fall to the smaller weight.
      prefix[static_cast<std::size_t>(c)] = len - 1;
      in_play.reset(static_cast<std::size_t>(last));
      for (auto opt = options.rbegin(); opt != options.rend(); ++opt) {
        double value = opt->score + solve_rec(prefix_index - stride[static_cast<std::size_t>(c)],
                                              budget_left - static_cast<int>(opt->weight),
                                              radius_left - moves, depth + 1);
        if (value > entry.score) {
          entry.score = value;
          entry.color = c;
          entry.spent = static_cast<std::int32_t>(opt->weight);
          entry.triple = opt->index;
        }
      }
      prefix[static_cast<std::size_t>(c)] = len;
      in_play.set(static_cast<std::size_t>(last));
    }
    memo.emplace(key, entry);
    return entry.score;
  }

  double solve(int budget) {
    if (budget < 0 || budget > max_budget)
      throw std::invalid_argument("budget outside the prepared range");
    return solve_rec(full_index, budget, radius, 0);
  }

  ScoredDag extract(int budget) {
    solve(budget);
    const int n = scores.size();
    std::vector<int> chosen(static_cast<std::size_t>(n), -1);
    std::vector<VarId> reversed;
    reversed.reserve(static_cast<std::size_t>(n));

    Key prefix_index = full_index;
    int budget_left = budget;
    int radius_left = radius;
    while (prefix_index != 0) {
      const MemoEntry& entry = memo.at(key_of(prefix_index, budget_left, radius_left));
      int c = entry.color;
      int len = prefix[static_cast<std::size_t>(c)];
      VarId last = members[static_cast<std::size_t>(c)][static_cast<std::size_t>(len - 1)];
      int moves = count_after(positions[static_cast<std::size_t>(c)][static_cast<std::size_t>(
          len - 1)]);
      chosen[static_cast<std::size_t>(last)] = entry.triple;
      reversed.push_back(last);
      prefix[static_cast<std::size_t>(c)] = len - 1;
      in_play.reset(static_cast<std::size_t>(last));
      prefix_index -= stride[static_cast<std::size_t>(c)];
      budget_left -= entry.spent;
      radius_left -= moves;
    }
    // restore the full state for further queries
    for (int c = 0; c < coloring.num_colors; ++c)
      prefix[static_cast<std::size_t>(c)] =
          static_cast<int>(members[static_cast<std::size_t>(c)].size());
    in_play.set();

    std::reverse(reversed.begin(), reversed.end());
    return make_scored_dag(scores, std::move(chosen), Ordering(std::move(reversed)));
  }
};

ColorRestrictedSolver::ColorRestrictedSolver(const MultiScores& scores, const Ordering& tau,
                                             int max_budget, int radius, Coloring coloring)
    : impl_(std::make_unique<Impl>(scores, tau, max_budget, radius, std::move(coloring))) {}

ColorRestrictedSolver::~ColorRestrictedSolver() = default;
ColorRestrictedSolver::ColorRestrictedSolver(ColorRestrictedSolver&&) noexcept = default;

double ColorRestrictedSolver::solve(int budget) { return impl_->solve(budget); }

ScoredDag ColorRestrictedSolver::extract(int budget) { return impl_->extract(budget); }

DpStats ColorRestrictedSolver::stats() const {
  return DpStats{static_cast<unsigned long long>(impl_->memo.size())};
}

SearchResult color_restricted_solve(const MultiScores& scores, const Ordering& tau, int k,
                                    int radius, const Coloring& coloring, DpStats* stats) {
  ColorRestrictedSolver solver(scores, tau, k, radius, coloring);
  solver.solve(k);
  SearchResult result;
  result.dag = solver.extract(k);
  result.repetitions = 1;
  result.evaluations = 1;
  if (stats) *stats = solver.stats();
  return result;
}

SearchResult ls_inversions(const MultiScores& scores, const Ordering& tau, int k, int radius,
                           std::uint64_t seed, long long repetitions, int threads,
                           DpStats* stats) {
  if (repetitions <= 0) repetitions = default_repetitions(radius);
  const int colors = radius_color_count(radius);
  const int n = scores.size();

  std::mt19937_64 rng(splitmix64(seed));
  std::vector<Coloring> colorings;
  colorings.reserve(static_cast<std::size_t>(repetitions));
  for (long long rep = 0; rep < repetitions; ++rep)
    colorings.push_back(uniform_random_coloring(n, colors, rng));

  std::vector<ScoredDag> dags(static_cast<std::size_t>(repetitions));
  std::vector<unsigned long long> keys(static_cast<std::size_t>(repetitions), 0);
  parallel_for(static_cast<int>(repetitions), threads, [&](int rep) {
    ColorRestrictedSolver solver(scores, tau, k, radius,
                                 colorings[static_cast<std::size_t>(rep)]);
    solver.solve(k);
    dags[static_cast<std::size_t>(rep)] = solver.extract(k);
    keys[static_cast<std::size_t>(rep)] = solver.stats().keys;
  });

  SearchResult result;
  result.seed = seed;
  result.repetitions = repetitions;
  result.evaluations = repetitions;
  int best = 0;
  for (int rep = 1; rep < repetitions; ++rep)
    if (dags[static_cast<std::size_t>(rep)].score > dags[static_cast<std::size_t>(best)].score)
      best = rep;
  result.dag = std::move(dags[static_cast<std::size_t>(best)]);
  if (stats)
    stats->keys = *std::max_element(keys.begin(), keys.end());
  return result;
}

SearchResult ls_inversions_exact(const MultiScores& scores, const Ordering& tau, int k,
                                 int radius) {
  return color_restricted_solve(scores, tau, k, radius, all_distinct_coloring(scores.size()));
}

}  // namespace wbnsl
