#include "wbnsl/hillclimb.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "wbnsl/order_dp.hpp"
#include "wbnsl/util.hpp"

namespace wbnsl {

namespace {

constexpr int kMaxWindowRadius = 18;  // subset tables hold (r+1) * 2^(r+1) entries

struct ZeroTriple {
  VarSet parents;
  double score;
};

// Weight-zero triples per variable, sorted by descending score so the first
// triple whose parents fit is the maximum.
struct PlainInstance {
  int n;
  std::vector<std::vector<ZeroTriple>> triples;

  explicit PlainInstance(const MultiScores& scores) : n(scores.size()) {
    triples.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& tv = triples[static_cast<std::size_t>(v)];
      for (const auto& t : scores.triples(v))
        if (t.weight == 0) tv.push_back(ZeroTriple{t.parents, t.score});
      std::stable_sort(tv.begin(), tv.end(),
                       [](const ZeroTriple& a, const ZeroTriple& b) { return a.score > b.score; });
    }
  }

  double best(VarId v, const VarSet& preds) const {
    for (const auto& t : triples[static_cast<std::size_t>(v)])
      if (t.parents.is_subset_of(preds)) return t.score;
    return -std::numeric_limits<double>::infinity();  // unreachable on complete instances
  }
};

// Exhaustive window reordering via DP over subsets S of the window's
// variables: entry[S] is the best score of placing S on the window's first
// |S| slots, extended by choosing which variable comes last.
struct WindowDp {
  int width = 0;
  std::vector<double> value;        // 2^width
  std::vector<int> last;            // argmax local index per subset
  std::vector<double> reach;        // per local var: 2^width superset-max scores
  std::vector<std::uint32_t> mask_of_best;

  void run(const PlainInstance& inst, const std::vector<VarId>& window_vars,
           const VarSet& before_window, const VarSet& window_set,
           const std::vector<int>& local_of) {
    width = static_cast<int>(window_vars.size());
    const std::uint32_t full = (width >= 32) ? 0u : ((1u << width) - 1u);
    VarSet usable_bound = before_window | window_set;

    reach.assign(static_cast<std::size_t>(width) << width,
                 -std::numeric_limits<double>::infinity());
    for (int t = 0; t < width; ++t) {
      double* f = reach.data() + (static_cast<std::size_t>(t) << width);
      VarId v = window_vars[static_cast<std::size_t>(t)];
      for (const auto& triple : inst.triples[static_cast<std::size_t>(v)]) {
        if (!triple.parents.is_subset_of(usable_bound)) continue;
        std::uint32_t mask = 0;
        VarSet inside = triple.parents & window_set;
        for (std::size_t u = inside.find_first(); u != VarSet::npos; u = inside.find_next(u))
          mask |= 1u << local_of[u];
        if (triple.score > f[mask]) f[mask] = triple.score;
      }
      for (int b = 0; b < width; ++b)
        for (std::uint32_t m = 0; m <= full; ++m)
          if (m & (1u << b)) f[m] = std::max(f[m], f[m ^ (1u << b)]);
    }

    value.assign(std::size_t{1} << width, 0.0);
    last.assign(std::size_t{1} << width, -1);
    for (std::uint32_t m = 1; m <= full; ++m) {
      double best = -std::numeric_limits<double>::infinity();
      int best_t = -1;
      for (int t = 0; t < width; ++t) {
        if (!(m & (1u << t))) continue;
        std::uint32_t rest = m ^ (1u << t);
        double cand = value[rest] + reach[(static_cast<std::size_t>(t) << width) + rest];
        // ties keep the latest slot, staying closest to the incumbent order
        if (cand >= best) {
          best = cand;
          best_t = t;
        }
      }
      value[m] = best;
      last[m] = best_t;
    }
  }

  double best_score() const { return value[value.size() - 1]; }

  // window-local placement order, first slot first
  std::vector<int> best_order() const {
    std::vector<int> order(static_cast<std::size_t>(width));
    std::uint32_t m = static_cast<std::uint32_t>(value.size() - 1);
    for (int slot = width - 1; slot >= 0; --slot) {
      int t = last[m];
      order[static_cast<std::size_t>(slot)] = t;
      m ^= 1u << t;
    }
    return order;
  }
};

struct Climber {
  const PlainInstance& inst;
  int radius;
  double eps;
  long long max_iterations;

  std::vector<VarId> seq;
  std::vector<int> pos;
  std::vector<VarSet> prefix;  // prefix[i] = variables at positions < i
  std::vector<double> cur;     // per-variable current best score
  double total = 0.0;
  long long iterations = 0;

  VarSet scratch;
  WindowDp window;

  Climber(const PlainInstance& instance, const Ordering& start, const HillclimbConfig& config)
      : inst(instance),
        radius(config.radius),
        eps(config.epsilon),
        max_iterations(config.max_iterations),
        seq(start.sequence()),
        scratch(static_cast<std::size_t>(instance.n)) {
    const int n = inst.n;
    pos.resize(static_cast<std::size_t>(n));
    prefix.assign(static_cast<std::size_t>(n) + 1, VarSet(static_cast<std::size_t>(n)));
    cur.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
    refresh(0, n - 1);
  }

  // Recomputes prefixes and per-variable bests after positions lo..hi were
  // rearranged; prefixes past hi+1 keep their contents.
  void refresh(int lo, int hi) {
    for (int i = lo + 1; i <= std::min(hi + 1, inst.n); ++i) {
      prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)];
      prefix[static_cast<std::size_t>(i)].set(
          static_cast<std::size_t>(seq[static_cast<std::size_t>(i - 1)]));
    }
    for (int i = lo; i <= hi; ++i) {
      VarId v = seq[static_cast<std::size_t>(i)];
      cur[static_cast<std::size_t>(v)] = inst.best(v, prefix[static_cast<std::size_t>(i)]);
    }
    total = 0.0;
    for (int v = 0; v < inst.n; ++v) total += cur[static_cast<std::size_t>(v)];
  }

  void apply_insert(int src, int dst) {
    if (dst > src)
      std::rotate(seq.begin() + src, seq.begin() + src + 1, seq.begin() + dst + 1);
    else
      std::rotate(seq.begin() + dst, seq.begin() + src, seq.begin() + src + 1);
    int lo = std::min(src, dst), hi = std::max(src, dst);
    for (int i = lo; i <= hi; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
    refresh(lo, hi);
    ++iterations;
  }

  bool try_insert_moves() {
    const int n = inst.n;
    for (int src = 0; src < n; ++src) {
      VarId v = seq[static_cast<std::size_t>(src)];
      double base_v = cur[static_cast<std::size_t>(v)];
      // moving v later: every skipped variable loses v, v gains them
      VarSet gained = prefix[static_cast<std::size_t>(src)];
      double others = 0.0;
      for (int dst = src + 1; dst < n; ++dst) {
        VarId u = seq[static_cast<std::size_t>(dst)];
        scratch = prefix[static_cast<std::size_t>(dst)];
        scratch.reset(static_cast<std::size_t>(v));
        others += inst.best(u, scratch) - cur[static_cast<std::size_t>(u)];
        gained.set(static_cast<std::size_t>(u));
        double gain = others + inst.best(v, gained) - base_v;
        if (gain > eps) {
          apply_insert(src, dst);
          return true;
        }
      }
      // moving v earlier: every skipped variable gains v, v loses them
      VarSet shrunk = prefix[static_cast<std::size_t>(src)];
      others = 0.0;
      for (int dst = src - 1; dst >= 0; --dst) {
        VarId u = seq[static_cast<std::size_t>(dst)];
        shrunk.reset(static_cast<std::size_t>(u));
        scratch = prefix[static_cast<std::size_t>(dst)];
        scratch.set(static_cast<std::size_t>(v));
        others += inst.best(u, scratch) - cur[static_cast<std::size_t>(u)];
        double gain = others + inst.best(v, shrunk) - base_v;
        if (gain > eps) {
          apply_insert(src, dst);
          return true;
        }
      }
    }
    return false;
  }

  // Runs the window DP at `start`; returns the score of the best window
  // arrangement (the rest of the ordering contributes identically).
  double window_dp(int start) {
    const int width = radius + 1;
    std::vector<VarId> window_vars(static_cast<std::size_t>(width));
    std::vector<int> local_of(static_cast<std::size_t>(inst.n), -1);
    VarSet window_set(static_cast<std::size_t>(inst.n));
    for (int t = 0; t < width; ++t) {
      VarId v = seq[static_cast<std::size_t>(start + t)];
      window_vars[static_cast<std::size_t>(t)] = v;
      window_set.set(static_cast<std::size_t>(v));
      local_of[static_cast<std::size_t>(v)] = t;
    }
    window.run(inst, window_vars, prefix[static_cast<std::size_t>(start)], window_set, local_of);
    return window.best_score();
  }

  void apply_window(int start) {
    std::vector<int> order = window.best_order();
    std::vector<VarId> vars(static_cast<std::size_t>(order.size()));
    for (std::size_t slot = 0; slot < order.size(); ++slot)
      vars[slot] = seq[static_cast<std::size_t>(start) + static_cast<std::size_t>(order[slot])];
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      seq[static_cast<std::size_t>(start) + slot] = vars[slot];
      pos[static_cast<std::size_t>(vars[slot])] = start + static_cast<int>(slot);
    }
    refresh(start, start + static_cast<int>(order.size()) - 1);
    ++iterations;
  }

  bool try_window_moves() {
    for (int start = 0; start + radius < inst.n; ++start) {
      double current = 0.0;
      for (int t = 0; t <= radius; ++t)
        current += cur[static_cast<std::size_t>(seq[static_cast<std::size_t>(start + t)])];
      if (window_dp(start) > current + eps) {
        apply_window(start);
        return true;
      }
    }
    return false;
  }

  void climb() {
    while (max_iterations == 0 || iterations < max_iterations) {
      if (try_insert_moves()) continue;
      if (try_window_moves()) continue;
      break;
    }
  }
};

}  // namespace

Ordering best_window_permutation(const MultiScores& scores, const Ordering& tau, int start,
                                 int radius) {
  const int n = scores.size();
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  if (radius > kMaxWindowRadius)
    throw std::invalid_argument("window radius too large for the subset table");
  if (start < 0 || start + radius >= n)
    throw std::out_of_range("window does not fit the ordering");

  PlainInstance inst(scores);
  HillclimbConfig config;
  config.radius = radius;
  Climber climber(inst, tau, config);
  double current = 0.0;
  for (int t = 0; t <= radius; ++t)
    current += climber.cur[static_cast<std::size_t>(tau.at(start + t))];
  if (climber.window_dp(start) > current) {
    climber.apply_window(start);
    return Ordering(climber.seq);
  }
  return tau;
}

HillclimbResult hillclimb(const MultiScores& scores, const Ordering& start,
                          const HillclimbConfig& config) {
  if (start.size() != scores.size())
    throw std::invalid_argument("ordering does not match the instance");
  if (config.epsilon < 0) throw std::invalid_argument("epsilon must be nonnegative");
  if (config.radius < 0) throw std::invalid_argument("radius must be nonnegative");
  if (config.radius > kMaxWindowRadius && config.radius < scores.size())
    throw std::invalid_argument("window radius too large for the subset table");

  PlainInstance inst(scores);
  Climber climber(inst, start, config);
  climber.climb();
  HillclimbResult result;
  result.ordering = Ordering(climber.seq);
  result.dag = best_dag_for_ordering(scores, result.ordering, 0);
  result.iterations = climber.iterations;
  return result;
}

RestartStats run_restarts(const MultiScores& scores, const HillclimbConfig& config,
                          int threads) {
  if (config.restarts < 1) throw std::invalid_argument("need at least one restart");
  const int n = scores.size();

  RestartStats stats;
  stats.starts.reserve(static_cast<std::size_t>(config.restarts));
  for (int i = 0; i < config.restarts; ++i) {
    // independent of the radius, so different radii share their starts
    std::mt19937_64 rng(mix_seed(config.seed, static_cast<std::uint64_t>(i)));
    std::vector<VarId> seq(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) seq[static_cast<std::size_t>(v)] = v;
    shuffle_in_place(seq, rng);
    stats.starts.emplace_back(std::move(seq));
  }

  stats.scores.assign(static_cast<std::size_t>(config.restarts), 0.0);
  stats.iterations.assign(static_cast<std::size_t>(config.restarts), 0);
  parallel_for(config.restarts, threads, [&](int i) {
    HillclimbResult res = hillclimb(scores, stats.starts[static_cast<std::size_t>(i)], config);
    stats.scores[static_cast<std::size_t>(i)] = res.dag.score;
    stats.iterations[static_cast<std::size_t>(i)] = res.iterations;
  });

  double sum = 0.0;
  double best = -std::numeric_limits<double>::infinity();
  for (double s : stats.scores) {
    sum += s;
    best = std::max(best, s);
  }
  stats.average = sum / static_cast<double>(config.restarts);
  stats.maximum = best;
  return stats;
}

std::string restart_stats_csv(const RestartStats& stats, const std::string& instance,
                              int radius) {
  std::string out = "instance,r,restart,score,iterations\n";
  for (std::size_t i = 0; i < stats.scores.size(); ++i) {
    out += instance + ',' + std::to_string(radius) + ',' + std::to_string(i) + ',' +
           format_double(stats.scores[i]) + ',' + std::to_string(stats.iterations[i]) + '\n';
  }
  out += instance + ',' + std::to_string(radius) + ",avg," + format_double(stats.average) + ",\n";
  out += instance + ',' + std::to_string(radius) + ",max," + format_double(stats.maximum) + ",\n";
  return out;
}

}  // namespace wbnsl
