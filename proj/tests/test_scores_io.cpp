#include <doctest.h>

#include "test_support.hpp"
#include "wbnsl/oracle.hpp"
#include "wbnsl/scores_io.hpp"

using namespace wbnsl;
using namespace wbnsl::test;

namespace {

bool same_instance(const MultiScores& a, const MultiScores& b) {
  if (a.size() != b.size() || a.names() != b.names()) return false;
  for (int v = 0; v < a.size(); ++v) {
    if (a.triples(v).size() != b.triples(v).size()) return false;
    for (std::size_t i = 0; i < a.triples(v).size(); ++i) {
      const auto& x = a.triples(v)[i];
      const auto& y = b.triples(v)[i];
      if (x.parents != y.parents || x.score != y.score || x.weight != y.weight) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("unweighted parse") {
  MultiScores ms = parse_scores("2\nA 1\n-1.5 0\nB 2\n-2.0 0\n-0.5 1 A\n");
  REQUIRE(ms.size() == 2);
  CHECK(ms.name(0) == "A");
  CHECK(ms.name(1) == "B");
  REQUIRE(ms.triples(1).size() == 2);
  CHECK(ms.triples(1)[0].parents.none());
  CHECK(ms.triples(1)[0].score == -2.0);
  CHECK(ms.triples(1)[0].weight == 0);
  CHECK(ms.triples(1)[1].parents == make_varset(2, {0}));
  CHECK(ms.triples(1)[1].score == -0.5);
  CHECK(ms.triples(1)[1].weight == 0);
}

TEST_CASE("weighted parse reads the weight token") {
  ParseOptions options;
  options.weighted = true;
  MultiScores ms = parse_scores("2\nA 1\n0 0 0\nB 2\n0 0 0\n-0.5 3 1 A\n", options);
  CHECK(ms.triples(1)[1].weight == 3);
  CHECK(ms.triples(1)[1].score == -0.5);
  CHECK(ms.triples(1)[1].parents == make_varset(2, {0}));
}

TEST_CASE("self-parent is rejected with its line number") {
  try {
    parse_scores("1\nA 1\n-1.0 1 A\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_scores(""), ParseError);
  CHECK_THROWS_AS(parse_scores("2\nA 1\n0 0\nA 1\n0 0\n"), ParseError);  // duplicate block
  CHECK_THROWS_AS(parse_scores("1\nA 1\n0 1 Z\n"), ParseError);          // unknown parent
  CHECK_THROWS_AS(parse_scores("1\nA 2\n0 0\n"), ParseError);            // short block
  CHECK_THROWS_AS(parse_scores("1\nA 1\n0 2 B\n"), ParseError);          // count mismatch
  CHECK_THROWS_AS(parse_scores("1\nA 1\n0 0\nB 1\n0 0\n"), ParseError);  // trailing block
  CHECK_THROWS_AS(parse_scores("1\nA 1\nnan 0\n"), ParseError);          // non-finite score
  CHECK_THROWS_AS(parse_scores("x\nA 1\n0 0\n"), ParseError);
}

TEST_CASE("parent names may refer to later blocks") {
  MultiScores ms = parse_scores("2\nA 2\n0 0\n1.5 1 B\nB 1\n0 0\n");
  CHECK(ms.triples(0)[1].parents == make_varset(2, {1}));
}

TEST_CASE("missing empty parent set: error unless a default is injected") {
  const std::string text = "2\nA 1\n-1.0 1 B\nB 1\n0 0\n";
  CHECK_THROWS_AS(parse_scores(text), ParseError);
  ParseOptions options;
  options.assume_empty_score = -7.5;
  MultiScores ms = parse_scores(text, options);
  REQUIRE(ms.triples(0).size() == 2);
  CHECK(ms.triples(0)[1].parents.none());
  CHECK(ms.triples(0)[1].score == -7.5);
  CHECK(ms.triples(0)[1].weight == 0);
}

TEST_CASE("weighted file missing a weight-zero empty set is incomplete") {
  ParseOptions options;
  options.weighted = true;
  // empty parent set exists but carries weight 1
  CHECK_THROWS_AS(parse_scores("1\nA 1\n0 1 0\n", options), ParseError);
}

TEST_CASE("comments, CRLF and tabs are tolerated") {
  MultiScores ms = parse_scores("# header\n2\r\nA\t1\n0 0\r\n\nB 1\n# inner comment\n0 0\n");
  CHECK(ms.size() == 2);
}

TEST_CASE("scores accept signs and exponents") {
  MultiScores ms = parse_scores("1\nA 2\n+0 0\n-1.25e-2 0\n");
  CHECK(ms.triples(0)[1].score == -0.0125);
}

TEST_CASE("round trip is idempotent") {
  const std::string weighted_text = "2\na 2\n0 0 0\n5 1 1 b\nb 2\n0 0 0\n3 0 1 a\n";
  ParseOptions weighted;
  weighted.weighted = true;
  MultiScores once = parse_scores(weighted_text, weighted);
  MultiScores twice = parse_scores(write_scores(once, true), weighted);
  CHECK(same_instance(once, twice));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    InstanceShape shape;
    shape.n = 4;
    MultiScores ms = random_instance(shape, rng);
    MultiScores back = parse_scores(write_scores(ms, true), weighted);
    CHECK(same_instance(ms, back));
  }
}

TEST_CASE("unweighted serialization refuses weighted instances") {
  CHECK_THROWS_AS(write_scores(fixture_f1(), false), std::invalid_argument);
  CHECK_NOTHROW(write_scores(fixture_f2(), true));
}

TEST_CASE("result writers") {
  MultiScores f1 = fixture_f1();
  ScoredDag best = brute_best_dag(f1, 1);
  CHECK(best.score == 5.0);

  std::string text = write_result_text(f1, best);
  CHECK(text.find("a <- b") != std::string::npos);
  CHECK(text.find("score 5") != std::string::npos);

  std::string dot = write_result_dot(f1, best);
  CHECK(dot.find("b -> a") != std::string::npos);

  std::string json = write_result_json(f1, best, 42, 7);
  CHECK(json.find("\"seed\": 42") != std::string::npos);
  CHECK(json.find("\"repetitions\": 7") != std::string::npos);
  CHECK(json.find("\"score\": 5.0") != std::string::npos);

  // the arcless assignment renders bare arrows and the empty-set total
  ScoredDag arcless = make_scored_dag(f1, {0, 0}, ord({0, 1}));
  std::string empty_text = write_result_text(f1, arcless);
  CHECK(empty_text.find("a <-\n") != std::string::npos);
  CHECK(empty_text.find("b <-\n") != std::string::npos);
  CHECK(empty_text.find("score 0") != std::string::npos);
}
