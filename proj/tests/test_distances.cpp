#include <doctest.h>

#include "test_support.hpp"
#include "wbnsl/distances.hpp"
#include "wbnsl/oracle.hpp"

using namespace wbnsl;
using namespace wbnsl::test;

TEST_CASE("kendall tau examples") {
  CHECK(kendall_tau(ord({0, 1, 2}), ord({0, 1, 2})) == 0);
  CHECK(kendall_tau(ord({0, 1, 2}), ord({1, 0, 2})) == 1);
  Ordering a = ord({0, 1, 2, 3});
  Ordering b = ord({3, 1, 2, 0});
  CHECK(brute_discordant_pairs(a, b) == 5);
  CHECK(kendall_tau(a, b) == 5);
}

TEST_CASE("insert distance examples") {
  CHECK(insert_distance(ord({0, 1, 2}), ord({0, 1, 2})) == 0);
  Ordering a = ord({0, 1, 2, 3});
  Ordering b = ord({3, 1, 2, 0});
  CHECK(brute_lcs(a, b) == 2);
  CHECK(insert_distance(a, b) == 2);
  CHECK(brute_lcs(ord({0, 1, 2}), ord({2, 0, 1})) == 2);
  CHECK(insert_distance(ord({0, 1, 2}), ord({2, 0, 1})) == 1);
}

TEST_CASE("swap distance examples") {
  CHECK(swap_distance(ord({0, 1, 2}), ord({0, 1, 2})) == 0);
  CHECK(swap_distance(ord({0, 1, 2, 3}), ord({3, 1, 2, 0})) == 1);
  CHECK(brute_swap_distance(ord({0, 1, 2}), ord({2, 0, 1})) == 2);
  CHECK(swap_distance(ord({0, 1, 2}), ord({2, 0, 1})) == 2);
}

TEST_CASE("window distance examples") {
  CHECK(win_distance(ord({0, 1, 2, 3}), ord({0, 1, 2, 3})) == 0);
  CHECK(win_distance(ord({0, 1, 2, 3}), ord({3, 1, 2, 0})) == 3);
  CHECK(win_distance(ord({0, 1, 2, 3}), ord({0, 2, 1, 3})) == 1);
}

TEST_CASE("inversion-window distance examples") {
  CHECK(invwin_distance(ord({0, 1, 2, 3}), ord({0, 1, 2, 3})) == 0);
  Ordering a = ord({0, 1, 2, 3});
  Ordering two_blocks = ord({1, 0, 3, 2});
  CHECK(brute_invwin_distance(a, two_blocks) == 1);
  CHECK(invwin_distance(a, two_blocks) == 1);
  Ordering single_block = ord({3, 1, 2, 0});
  CHECK(brute_invwin_distance(a, single_block) == 5);
  CHECK(invwin_distance(a, single_block) == kendall_tau(a, single_block));
}

TEST_CASE("mismatched variable sets are rejected") {
  CHECK_THROWS_AS(kendall_tau(ord({0, 1}), ord({0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(insert_distance(ord({0, 1}), ord({0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(swap_distance(ord({0, 1}), ord({0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(win_distance(ord({0, 1}), ord({0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(invwin_distance(ord({0, 1}), ord({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("distance laws, exhaustive over small orderings") {
  for (int n = 1; n <= 5; ++n) {
    auto all = all_orderings(n);
    for (const Ordering& a : all) {
      for (const Ordering& b : all) {
        long long tau = kendall_tau(a, b);
        CHECK(tau == brute_discordant_pairs(a, b));
        CHECK(tau == kendall_tau(b, a));

        int ins = insert_distance(a, b);
        CHECK(ins == n - brute_lcs(a, b));
        CHECK(ins == insert_distance(b, a));
        CHECK(ins <= n - 1);

        int sw = swap_distance(a, b);
        CHECK(sw == swap_distance(b, a));
        CHECK(sw <= tau);

        CHECK(win_distance(a, b) == win_distance(b, a));

        long long iw = invwin_distance(a, b);
        CHECK(iw == brute_invwin_distance(a, b));
        CHECK(iw == invwin_distance(b, a));
        CHECK(iw <= tau);
      }
      CHECK(kendall_tau(a, a) == 0);
      CHECK(insert_distance(a, a) == 0);
      CHECK(swap_distance(a, a) == 0);
      CHECK(win_distance(a, a) == 0);
      CHECK(invwin_distance(a, a) == 0);
    }
  }
}

TEST_CASE("swap distance equals minimum transposition count") {
  for (int n = 2; n <= 4; ++n)
    for (const Ordering& b : all_orderings(n))
      CHECK(swap_distance(Ordering::identity(n), b) ==
            brute_swap_distance(Ordering::identity(n), b));
}
