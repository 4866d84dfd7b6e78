#include <doctest.h>

#include "test_support.hpp"
#include "wbnsl/oracle.hpp"
#include "wbnsl/order_dp.hpp"

using namespace wbnsl;
using namespace wbnsl::test;

TEST_CASE("restriction keeps exactly the forward triples") {
  MultiScores f1 = fixture_f1();
  auto ab = restrict_to_ordering(f1, ord({0, 1}));
  CHECK(ab.kept[0] == std::vector<int>{0});     // a keeps only the empty set
  CHECK(ab.kept[1] == std::vector<int>{0, 1});  // b keeps both
  auto ba = restrict_to_ordering(f1, ord({1, 0}));
  CHECK(ba.kept[0] == std::vector<int>{0, 1});
  CHECK(ba.kept[1] == std::vector<int>{0});

  MultiScores f2 = fixture_f2();
  auto acb = restrict_to_ordering(f2, ord({0, 2, 1}));
  CHECK(acb.kept[1] == std::vector<int>{0, 1, 2});  // b keeps empty, {a}, {c}
  CHECK(acb.kept[2] == std::vector<int>{0});        // {a,b} is not within the prefix
}

TEST_CASE("restriction respects the ordering as a topological order") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    MultiScores ms = random_instance(InstanceShape{}, rng);
    Ordering tau = random_ordering(ms.size(), rng);
    auto restricted = restrict_to_ordering(ms, tau);
    for (int v = 0; v < ms.size(); ++v) {
      bool has_empty = false;
      for (int idx : restricted.kept[static_cast<std::size_t>(v)]) {
        const auto& t = ms.triple(v, idx);
        if (t.parents.none() && t.weight == 0) has_empty = true;
        for (std::size_t u = t.parents.find_first(); u != VarSet::npos;
             u = t.parents.find_next(u))
          CHECK(tau.position_of(static_cast<VarId>(u)) < tau.position_of(v));
      }
      CHECK(has_empty);
    }
  }
}

TEST_CASE("budget DP on the fixtures") {
  MultiScores f1 = fixture_f1();
  CHECK(best_dag_for_ordering(f1, ord({0, 1}), 0).score == 3.0);
  CHECK(best_dag_for_ordering(f1, ord({1, 0}), 1).score == 5.0);

  MultiScores f2 = fixture_f2();
  CHECK(best_dag_for_ordering(f2, ord({0, 1, 2}), 1).score == 5.0);
  CHECK(best_dag_for_ordering(f2, ord({0, 1, 2}), 0).score == 2.0);
}

TEST_CASE("budget DP equals assignment enumeration") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    InstanceShape shape;
    shape.n = 2 + bounded_draw(rng, 5);
    shape.extra_triples = 7;
    MultiScores ms = random_instance(shape, rng);
    Ordering tau = random_ordering(ms.size(), rng);
    double previous = -1e300;
    for (int k = 0; k <= 4; ++k) {
      ScoredDag fast = best_dag_for_ordering(ms, tau, k);
      ScoredDag slow = brute_best_dag_for_ordering(ms, tau, k);
      CHECK(fast.score == slow.score);
      CHECK(fast.witness == tau);
      CHECK(is_valid_scored_dag(ms, fast, k));
      CHECK(fast.score >= previous);  // monotone in the budget
      previous = fast.score;
    }
  }
}

TEST_CASE("score-only evaluation matches the k=0 DP") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    MultiScores ms = random_instance(InstanceShape{}, rng);
    Ordering tau = random_ordering(ms.size(), rng);
    CHECK(ordering_score(ms, tau) == best_dag_for_ordering(ms, tau, 0).score);
  }
}

TEST_CASE("deterministic traceback keeps the lowest triple index") {
  // two triples with the same parents and score; the earlier one must win
  MultiScores ms(2);
  ms.add(0, {}, 0, 0);
  ms.add(1, {}, 0, 0);
  ms.add(1, {0}, 4, 0);
  ms.add(1, {0}, 4, 0);
  ScoredDag dag = best_dag_for_ordering(ms, ord({0, 1}), 2);
  CHECK(dag.chosen[1] == 1);  // first of the two score-4 entries
}
