#include <doctest.h>

#include "test_support.hpp"
#include "wbnsl/distances.hpp"
#include "wbnsl/inversions.hpp"
#include "wbnsl/invwin.hpp"
#include "wbnsl/oracle.hpp"
#include "wbnsl/order_dp.hpp"

using namespace wbnsl;
using namespace wbnsl::test;

TEST_CASE("window restriction clips parents and drops out-of-range triples") {
  MultiScores f2 = fixture_f2();
  Ordering tau = ord({0, 1, 2});

  // positions 1..2, variables b and c
  WindowRestrictedScores w = restrict_window(f2, tau, 1, 2);
  REQUIRE(w.source_var == std::vector<VarId>{1, 2});
  REQUIRE(w.scores.triples(0).size() == 3);  // b: empty, {a} clipped to empty, {c}
  CHECK(w.scores.triples(0)[0].parents.none());
  CHECK(w.scores.triples(0)[1].parents.none());
  CHECK(w.scores.triples(0)[1].score == 2.0);
  CHECK(w.scores.triples(0)[2].parents == make_varset(2, {1}));
  CHECK(w.scores.triples(0)[2].score == 4.0);
  REQUIRE(w.scores.triples(1).size() == 2);  // c: empty and {a,b} clipped to {b}
  CHECK(w.scores.triples(1)[1].parents == make_varset(2, {0}));
  CHECK(w.scores.triples(1)[1].score == 3.0);
  CHECK(w.scores.triples(1)[1].weight == 1);
  CHECK(w.source_triple[1] == std::vector<int>{0, 1});

  // the whole range keeps every triple verbatim
  WindowRestrictedScores full = restrict_window(f2, tau, 0, 2);
  for (int v = 0; v < 3; ++v) {
    REQUIRE(full.scores.triples(v).size() == f2.triples(v).size());
    for (std::size_t i = 0; i < f2.triples(v).size(); ++i)
      CHECK(full.scores.triples(v)[i].parents == f2.triples(v)[i].parents);
  }

  // a triple whose parent sits after the window's end disappears
  WindowRestrictedScores head = restrict_window(f2, tau, 0, 1);
  CHECK(head.scores.triples(1).size() == 2);  // b loses {c}
  CHECK(head.source_triple[1] == std::vector<int>{0, 1});

  CHECK_THROWS_AS(restrict_window(f2, tau, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(restrict_window(f2, tau, 0, 3), std::invalid_argument);
}

TEST_CASE("radius zero freezes every window") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    MultiScores ms = random_instance(InstanceShape{}, rng);
    Ordering tau = random_ordering(ms.size(), rng);
    int k = bounded_draw(rng, 3);
    InvwinOptions options;
    options.exact = true;
    SearchResult res = ls_invwin(ms, tau, k, 0, options);
    CHECK(res.dag.score == best_dag_for_ordering(ms, tau, k).score);
  }
}

TEST_CASE("fixture search at radius one") {
  MultiScores f2 = fixture_f2();
  InvwinOptions options;
  options.exact = true;
  SearchResult res = ls_invwin(f2, ord({0, 1, 2}), 0, 1, options);
  CHECK(res.dag.score == 4.0);
  CHECK(res.dag.witness == ord({0, 2, 1}));
}

TEST_CASE("exact mode equals the permutation oracle") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    InstanceShape shape;
    shape.n = 2 + bounded_draw(rng, 4);
    MultiScores ms = random_instance(shape, rng);
    Ordering tau = random_ordering(ms.size(), rng);
    int k = bounded_draw(rng, 3);
    int r = bounded_draw(rng, 3);
    InvwinOptions options;
    options.exact = true;
    SearchResult mine = ls_invwin(ms, tau, k, r, options);
    SearchResult oracle = brute_local_search(ms, tau, k, r, DistanceKind::inversion_window);
    CHECK(mine.dag.score == oracle.dag.score);
    CHECK(is_valid_scored_dag(ms, mine.dag, k));
    CHECK(invwin_distance(tau, mine.dag.witness) <= r);
  }
}

TEST_CASE("window search dominates plain inversion search") {
  std::mt19937_64 rng(67);
  InvwinOptions options;
  options.exact = true;
  for (int trial = 0; trial < 15; ++trial) {
    InstanceShape shape;
    shape.n = 2 + bounded_draw(rng, 4);
    MultiScores ms = random_instance(shape, rng);
    Ordering tau = random_ordering(ms.size(), rng);
    int k = bounded_draw(rng, 2);
    int r = bounded_draw(rng, 3);
    CHECK(ls_invwin(ms, tau, k, r, options).dag.score >=
          ls_inversions_exact(ms, tau, k, r).dag.score);
  }
}

TEST_CASE("two far-apart blocks beat the plain inversion radius") {
  // both pairs need one inversion each; their inversion counts add up, but
  // each sits in its own window
  MultiScores ms(5);
  for (int v = 0; v < 5; ++v) ms.add(v, {}, 0, 0);
  ms.add(0, {1}, 10, 0);
  ms.add(3, {4}, 10, 0);
  Ordering tau = ord({0, 1, 2, 3, 4});
  Ordering target = ord({1, 0, 2, 4, 3});
  CHECK(kendall_tau(tau, target) == 2);
  CHECK(invwin_distance(tau, target) == 1);

  InvwinOptions options;
  options.exact = true;
  SearchResult windows = ls_invwin(ms, tau, 0, 1, options);
  SearchResult plain = ls_inversions_exact(ms, tau, 0, 1);
  CHECK(windows.dag.score == 20.0);
  CHECK(plain.dag.score == 10.0);
  CHECK(windows.dag.score ==
        brute_local_search(ms, tau, 0, 1, DistanceKind::inversion_window).dag.score);
  CHECK(plain.dag.score ==
        brute_local_search(ms, tau, 0, 1, DistanceKind::inversions).dag.score);
}

TEST_CASE("witness never crosses its window boundaries") {
  std::mt19937_64 rng(71);
  InvwinOptions options;
  options.exact = true;
  for (int trial = 0; trial < 10; ++trial) {
    InstanceShape shape;
    shape.n = 5;
    MultiScores ms = random_instance(shape, rng);
    Ordering tau = random_ordering(shape.n, rng);
    SearchResult res = ls_invwin(ms, tau, 2, 2, options);
    // every equal-content prefix of tau stays an equal-content prefix
    // of the witness exactly when no variable crossed a boundary; the
    // distance bound certifies it
    CHECK(invwin_distance(tau, res.dag.witness) <= 2);
    CHECK(is_valid_scored_dag(ms, res.dag, 2));
  }
}

TEST_CASE("randomized mode is deterministic per seed and thread count") {
  std::mt19937_64 rng(73);
  MultiScores ms = random_instance(InstanceShape{}, rng);
  Ordering tau = random_ordering(ms.size(), rng);
  InvwinOptions options;
  options.seed = 7;
  SearchResult a = ls_invwin(ms, tau, 2, 2, options);
  SearchResult b = ls_invwin(ms, tau, 2, 2, options);
  options.threads = 2;
  SearchResult c = ls_invwin(ms, tau, 2, 2, options);
  CHECK(a.dag.score == b.dag.score);
  CHECK(a.dag.witness == b.dag.witness);
  CHECK(a.dag.score == c.dag.score);
  CHECK(a.dag.witness == c.dag.witness);
  CHECK(is_valid_scored_dag(ms, a.dag, 2));
  CHECK(invwin_distance(tau, a.dag.witness) <= 2);
}
