#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "wbnsl/core.hpp"
#include "wbnsl/distances.hpp"
#include "wbnsl/hillclimb.hpp"
#include "wbnsl/inversions.hpp"
#include "wbnsl/invwin.hpp"
#include "wbnsl/neighborhood_xp.hpp"
#include "wbnsl/oracle.hpp"
#include "wbnsl/order_dp.hpp"
#include "wbnsl/scores_io.hpp"
#include "wbnsl/util.hpp"

namespace {

using namespace wbnsl;

struct CommonArgs {
  std::string input;
  bool weighted = false;
  double assume_empty_score = 0.0;
  bool has_assume_empty = false;
  std::string ordering_file;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonArgs& args, const std::string& formats) {
  cmd->add_option("input", args.input, "score file")->required();
  cmd->add_flag("--weighted", args.weighted,
                "records carry a weight token after the score");
  cmd->add_option("--assume-empty-score", args.assume_empty_score,
                  "inject an empty parent set with this score when missing")
      ->each([&args](const std::string&) { args.has_assume_empty = true; });
  cmd->add_option("--ordering", args.ordering_file,
                  "file with one variable name per line (default: file order)");
  cmd->add_option("--format", args.format, "output format: " + formats)
      ->check(CLI::IsMember(std::vector<std::string>{"text", "json", "dot", "csv"}));
}

MultiScores load_scores(const CommonArgs& args) {
  ParseOptions options;
  options.weighted = args.weighted;
  if (args.has_assume_empty) options.assume_empty_score = args.assume_empty_score;
  return parse_scores_file(args.input, options);
}

Ordering load_ordering(const CommonArgs& args, const MultiScores& scores) {
  if (args.ordering_file.empty()) return Ordering::identity(scores.size());
  std::ifstream in(args.ordering_file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + args.ordering_file + "'");
  std::vector<VarId> seq;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t a = line.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t");
    std::string name = line.substr(a, b - a + 1);
    int id = -1;
    for (int v = 0; v < scores.size(); ++v)
      if (scores.name(v) == name) id = v;
    if (id < 0) throw std::runtime_error("unknown variable '" + name + "' in ordering file");
    seq.push_back(id);
  }
  if (static_cast<int>(seq.size()) != scores.size())
    throw std::runtime_error("ordering file does not list every variable exactly once");
  return Ordering(std::move(seq));
}

void emit_result(const CommonArgs& args, const MultiScores& scores, const SearchResult& result) {
  if (args.format == "json")
    std::cout << write_result_json(scores, result.dag, result.seed, result.repetitions);
  else if (args.format == "dot")
    std::cout << write_result_dot(scores, result.dag);
  else
    std::cout << write_result_text(scores, result.dag);
}

DistanceKind parse_distance(const std::string& name) {
  if (name == "insert") return DistanceKind::insert;
  if (name == "swap") return DistanceKind::swap;
  if (name == "inv") return DistanceKind::inversions;
  return DistanceKind::inversion_window;
}

int run(int argc, char** argv) {
  CLI::App app{"ordering-based structure learning with weighted multiscores"};
  app.require_subcommand(1);

  CommonArgs score_args;
  int score_k = 0;
  CLI::App* score_cmd = app.add_subcommand("score", "best network for a fixed ordering");
  add_common(score_cmd, score_args, "text|json|dot");
  score_cmd->add_option("-k,--budget", score_k, "weight budget")->check(CLI::NonNegativeNumber);

  CommonArgs ls_args;
  std::string ls_distance;
  int ls_k = 0, ls_r = 1, ls_threads = 1;
  long long ls_reps = 0;
  std::uint64_t ls_seed = 0;
  bool ls_exact = false, ls_force = false;
  double ls_work_bound = 1e7;
  CLI::App* ls_cmd = app.add_subcommand("ls", "local search around an ordering");
  add_common(ls_cmd, ls_args, "text|json|dot");
  ls_cmd->add_option("--distance", ls_distance, "insert|swap|inv|invwin")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"insert", "swap", "inv", "invwin"}));
  ls_cmd->add_option("-r,--radius", ls_r, "search radius")->check(CLI::NonNegativeNumber);
  ls_cmd->add_option("-k,--budget", ls_k, "weight budget")->check(CLI::NonNegativeNumber);
  ls_cmd->add_option("--seed", ls_seed, "random seed (inv, invwin)");
  ls_cmd->add_option("--repetitions,--oracle-reps", ls_reps,
                     "coloring repetitions, 0 = radius default");
  ls_cmd->add_flag("--exact", ls_exact, "all-distinct colorings (exact, small instances only)");
  ls_cmd->add_option("--threads", ls_threads, "worker threads")->check(CLI::PositiveNumber);
  ls_cmd->add_option("--work-bound", ls_work_bound,
                     "refuse insert/swap neighborhoods estimated above this size");
  ls_cmd->add_flag("--force", ls_force, "run even above the work bound");

  CommonArgs hc_args;
  hc_args.format = "csv";
  HillclimbConfig hc_config;
  hc_config.restarts = 20;
  int hc_threads = 1;
  std::string hc_instance;
  CLI::App* hc_cmd = app.add_subcommand("hillclimb", "random-restart hill climbing");
  add_common(hc_cmd, hc_args, "csv|text|json");
  hc_cmd->add_option("-r,--radius", hc_config.radius, "window radius")
      ->check(CLI::NonNegativeNumber);
  hc_cmd->add_option("--restarts", hc_config.restarts, "number of random starts")
      ->check(CLI::PositiveNumber);
  hc_cmd->add_option("--seed", hc_config.seed, "random seed");
  hc_cmd->add_option("--epsilon", hc_config.epsilon, "required gain per accepted move");
  hc_cmd->add_option("--max-iterations", hc_config.max_iterations,
                     "accepted-move cap per restart, 0 = unlimited");
  hc_cmd->add_option("--threads", hc_threads, "worker threads")->check(CLI::PositiveNumber);
  hc_cmd->add_option("--instance-name", hc_instance, "label for the CSV rows");

  CommonArgs brute_args;
  std::string brute_distance;
  int brute_k = 0, brute_r = 0;
  CLI::App* brute_cmd = app.add_subcommand("brute", "exhaustive reference solver");
  brute_cmd->group("");  // debugging helper, hidden from --help
  add_common(brute_cmd, brute_args, "text|json|dot");
  brute_cmd->add_option("-k,--budget", brute_k, "weight budget")->check(CLI::NonNegativeNumber);
  brute_cmd->add_option("--distance", brute_distance, "insert|swap|inv|invwin")
      ->check(CLI::IsMember(std::vector<std::string>{"insert", "swap", "inv", "invwin"}));
  brute_cmd->add_option("-r,--radius", brute_r, "search radius")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (score_cmd->parsed()) {
      MultiScores scores = load_scores(score_args);
      Ordering tau = load_ordering(score_args, scores);
      SearchResult result;
      result.dag = best_dag_for_ordering(scores, tau, score_k);
      emit_result(score_args, scores, result);
      return 0;
    }

    if (ls_cmd->parsed()) {
      MultiScores scores = load_scores(ls_args);
      Ordering tau = load_ordering(ls_args, scores);
      DistanceKind kind = parse_distance(ls_distance);
      SearchResult result;
      if (kind == DistanceKind::insert || kind == DistanceKind::swap) {
        NeighborhoodSpec spec{kind, ls_r};
        double estimate = estimate_neighborhood_size(scores.size(), spec);
        if (estimate > ls_work_bound && !ls_force) {
          std::cerr << "estimated neighborhood size " << format_double(estimate)
                    << " exceeds the work bound " << format_double(ls_work_bound)
                    << "; the cost grows as n^r, pass --force to run anyway\n";
          return 1;
        }
        result = local_search_xp(scores, tau, ls_k, spec);
      } else if (kind == DistanceKind::inversions) {
        result = ls_exact ? ls_inversions_exact(scores, tau, ls_k, ls_r)
                          : ls_inversions(scores, tau, ls_k, ls_r, ls_seed, ls_reps, ls_threads);
      } else {
        InvwinOptions options;
        options.seed = ls_seed;
        options.oracle_reps = ls_reps;
        options.exact = ls_exact;
        options.threads = ls_threads;
        result = ls_invwin(scores, tau, ls_k, ls_r, options);
      }
      emit_result(ls_args, scores, result);
      return 0;
    }

    if (hc_cmd->parsed()) {
      MultiScores scores = load_scores(hc_args);
      RestartStats stats = run_restarts(scores, hc_config, hc_threads);
      std::string label = hc_instance.empty() ? hc_args.input : hc_instance;
      if (hc_args.format == "csv") {
        std::cout << restart_stats_csv(stats, label, hc_config.radius);
      } else {
        int best = 0;
        for (int i = 1; i < hc_config.restarts; ++i)
          if (stats.scores[static_cast<std::size_t>(i)] >
              stats.scores[static_cast<std::size_t>(best)])
            best = i;
        HillclimbResult top =
            hillclimb(scores, stats.starts[static_cast<std::size_t>(best)], hc_config);
        if (hc_args.format == "json") {
          std::cout << write_result_json(scores, top.dag, hc_config.seed, hc_config.restarts);
        } else {
          std::cout << "restarts " << hc_config.restarts << "\navg "
                    << format_double(stats.average) << "\nmax " << format_double(stats.maximum)
                    << "\n"
                    << write_result_text(scores, top.dag);
        }
      }
      return 0;
    }

    if (brute_cmd->parsed()) {
      MultiScores scores = load_scores(brute_args);
      SearchResult result;
      if (brute_distance.empty()) {
        result.dag = brute_best_dag(scores, brute_k);
      } else {
        Ordering tau = load_ordering(brute_args, scores);
        result = brute_local_search(scores, tau, brute_k, brute_r,
                                    parse_distance(brute_distance));
      }
      emit_result(brute_args, scores, result);
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
