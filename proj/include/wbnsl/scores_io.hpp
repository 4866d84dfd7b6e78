#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>

#include "wbnsl/core.hpp"

namespace wbnsl {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseOptions {
  // Weighted grammar inserts an integer weight token after the score:
  // "score weight count parents...". Selected explicitly, never sniffed, so
  // unweighted files stay bit-compatible with existing score files.
  bool weighted = false;
  // When set, a variable without an empty-parent-set, weight-zero triple
  // gets one injected with this score instead of failing the parse.
  std::optional<double> assume_empty_score;
};

// Score-file grammar: first line the variable count, then per variable a
// header "name count" followed by `count` records "score count parents..."
// (plus the weight token in weighted mode). '#' lines are comments; tokens
// are separated by spaces or tabs, records by LF or CRLF.
MultiScores parse_scores(std::istream& in, const ParseOptions& options = {});
MultiScores parse_scores(const std::string& text, const ParseOptions& options = {});
MultiScores parse_scores_file(const std::string& path, const ParseOptions& options = {});

// Canonical serialization of the same grammar; parses back to an identical
// instance. Writing unweighted requires all weights zero.
std::string write_scores(const MultiScores& scores, bool weighted);

// "child <- parents" lines plus totals and the witness ordering.
std::string write_result_text(const MultiScores& scores, const ScoredDag& dag);

// Machine-readable result: variables, arcs, score, weight, ordering, seed,
// repetitions.
std::string write_result_json(const MultiScores& scores, const ScoredDag& dag,
                              std::uint64_t seed, long long repetitions);

// Graphviz digraph of the arc set.
std::string write_result_dot(const MultiScores& scores, const ScoredDag& dag);

}  // namespace wbnsl
