#include "wbnsl/invwin.hpp"

#include <limits>
#include <stdexcept>

#include "wbnsl/inversions.hpp"
#include "wbnsl/util.hpp"

namespace wbnsl {

WindowRestrictedScores restrict_window(const MultiScores& scores, const Ordering& tau, int a,
                                       int b) {
  const int n = scores.size();
  if (tau.size() != n) throw std::invalid_argument("ordering does not match the instance");
  if (a < 0 || b < a || b >= n) throw std::invalid_argument("invalid window range");

  const int width = b - a + 1;
  VarSet window(static_cast<std::size_t>(n));
  VarSet up_to_end(static_cast<std::size_t>(n));
  for (int pos = 0; pos <= b; ++pos) {
    up_to_end.set(static_cast<std::size_t>(tau.at(pos)));
    if (pos >= a) window.set(static_cast<std::size_t>(tau.at(pos)));
  }

  WindowRestrictedScores out;
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(width));
  out.source_var.reserve(static_cast<std::size_t>(width));
  std::vector<int> local_of(static_cast<std::size_t>(n), -1);
  for (int pos = a; pos <= b; ++pos) {
    VarId v = tau.at(pos);
    local_of[static_cast<std::size_t>(v)] = pos - a;
    out.source_var.push_back(v);
    names.push_back(scores.name(v));
  }
  out.scores = MultiScores(std::move(names));
  out.source_triple.resize(static_cast<std::size_t>(width));

  for (int local = 0; local < width; ++local) {
    VarId v = out.source_var[static_cast<std::size_t>(local)];
    const auto& ts = scores.triples(v);
    for (int idx = 0; idx < static_cast<int>(ts.size()); ++idx) {
      const ScoreTriple& t = ts[static_cast<std::size_t>(idx)];
      if (!t.parents.is_subset_of(up_to_end)) continue;
      VarSet clipped(static_cast<std::size_t>(width));
      VarSet inside = t.parents & window;
      for (std::size_t u = inside.find_first(); u != VarSet::npos; u = inside.find_next(u))
        clipped.set(static_cast<std::size_t>(local_of[u]));
      out.scores.add(local, clipped, t.score, t.weight);
      out.source_triple[static_cast<std::size_t>(local)].push_back(idx);
    }
  }
  return out;
}

namespace {

struct WindowSolution {
  double score = -std::numeric_limits<double>::infinity();
  ScoredDag dag;  // over window-local ids
};

}  // namespace

SearchResult ls_invwin(const MultiScores& scores, const Ordering& tau, int k, int r,
                       const InvwinOptions& options) {
  const int n = scores.size();
  if (tau.size() != n) throw std::invalid_argument("ordering does not match the instance");
  if (k < 0 || r < 0) throw std::invalid_argument("budget and radius must be nonnegative");

  long long reps = options.exact ? 1
                                 : (options.oracle_reps > 0 ? options.oracle_reps
                                                            : default_repetitions(r));
  const int colors = radius_color_count(r);

  // Window solutions for every start..end pair and every budget share the
  // colorings across budgets: one memo answers all root budgets of a run.
  std::vector<std::vector<WindowSolution>> window_best(
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  std::vector<std::pair<int, int>> spans;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) spans.emplace_back(a, b);

  SearchResult result;
  result.seed = options.seed;
  result.repetitions = reps;

  parallel_for(static_cast<int>(spans.size()), options.threads, [&](int span_idx) {
    auto [a, b] = spans[static_cast<std::size_t>(span_idx)];
    WindowRestrictedScores wrs = restrict_window(scores, tau, a, b);
    Ordering window_tau = Ordering::identity(b - a + 1);
    auto& best = window_best[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) +
                             static_cast<std::size_t>(b)];
    best.assign(static_cast<std::size_t>(k) + 1, WindowSolution{});
    std::mt19937_64 rng(mix_seed(options.seed, static_cast<std::uint64_t>(a),
                                 static_cast<std::uint64_t>(b)));
    for (long long rep = 0; rep < reps; ++rep) {
      Coloring chi = options.exact ? all_distinct_coloring(b - a + 1)
                                   : uniform_random_coloring(b - a + 1, colors, rng);
      ColorRestrictedSolver solver(wrs.scores, window_tau, k, r, std::move(chi));
      for (int budget = 0; budget <= k; ++budget) {
        double score = solver.solve(budget);
        auto& slot = best[static_cast<std::size_t>(budget)];
        if (score > slot.score) {
          slot.score = score;
          slot.dag = solver.extract(budget);
        }
      }
    }
  });
  result.evaluations = static_cast<long long>(spans.size()) * reps;

  // Suffix table: best total score of the tail starting at position j with
  // the given budget, split as first window [j, p] plus the rest.
  const int cols = k + 1;
  std::vector<double> table(static_cast<std::size_t>((n + 1) * cols), 0.0);
  std::vector<int> pick_end(static_cast<std::size_t>(n * cols), -1);
  std::vector<int> pick_spent(static_cast<std::size_t>(n * cols), -1);
  for (int j = n - 1; j >= 0; --j) {
    for (int budget = 0; budget <= k; ++budget) {
      double best = -std::numeric_limits<double>::infinity();
      int best_end = -1, best_spent = -1;
      for (int p = j; p < n; ++p) {
        const auto& wb = window_best[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                                     static_cast<std::size_t>(p)];
        for (int spent = 0; spent <= budget; ++spent) {
          double cand = wb[static_cast<std::size_t>(spent)].score +
                        table[static_cast<std::size_t>((p + 1) * cols + budget - spent)];
          if (cand > best) {
            best = cand;
            best_end = p;
            best_spent = spent;
          }
        }
      }
      table[static_cast<std::size_t>(j * cols + budget)] = best;
      pick_end[static_cast<std::size_t>(j * cols + budget)] = best_end;
      pick_spent[static_cast<std::size_t>(j * cols + budget)] = best_spent;
    }
  }

  // Traceback: stitch the window witnesses and map triples back.
  std::vector<int> chosen(static_cast<std::size_t>(n), -1);
  std::vector<VarId> witness;
  witness.reserve(static_cast<std::size_t>(n));
  int j = 0, budget = k;
  while (j < n) {
    int p = pick_end[static_cast<std::size_t>(j * cols + budget)];
    int spent = pick_spent[static_cast<std::size_t>(j * cols + budget)];
    const auto& wb = window_best[static_cast<std::size_t>(j) * static_cast<std::size_t>(n) +
                                 static_cast<std::size_t>(p)];
    const WindowSolution& sol = wb[static_cast<std::size_t>(spent)];
    WindowRestrictedScores wrs = restrict_window(scores, tau, j, p);
    for (VarId local : sol.dag.witness.sequence())
      witness.push_back(wrs.source_var[static_cast<std::size_t>(local)]);
    for (int local = 0; local < p - j + 1; ++local) {
      VarId original = wrs.source_var[static_cast<std::size_t>(local)];
      int local_triple = sol.dag.chosen[static_cast<std::size_t>(local)];
      chosen[static_cast<std::size_t>(original)] =
          wrs.source_triple[static_cast<std::size_t>(local)][static_cast<std::size_t>(
              local_triple)];
    }
    j = p + 1;
    budget -= spent;
  }
  result.dag = make_scored_dag(scores, std::move(chosen), Ordering(std::move(witness)));
  return result;
}

}  // namespace wbnsl
