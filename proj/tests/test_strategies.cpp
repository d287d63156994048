#include <doctest.h>

#include <algorithm>

#include "zsg/combinatorics.hpp"
#include "zsg/rng.hpp"
#include "zsg/strategies.hpp"

using namespace zsg;

namespace {
Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }
}

TEST_CASE("build_tables reproduces the n = 8 grid") {
  auto t = build_tables(4);
  CHECK(t.value(0, 0) == Rational(1));
  CHECK(t.value(1, 0) == frac(47, 35));
  CHECK(t.value(2, 0) == Rational(2));
  CHECK(t.value(4, 4) == Rational(0));
  CHECK(t.value(0, 1) == frac(23, 35));
  CHECK(t.value(1, 1) == frac(17, 20));
  CHECK(t.value(2, 1) == frac(6, 5));
  CHECK(t.value(1, 2) == frac(1, 2));
  CHECK(t.value(0, 3) == frac(1, 5));
  CHECK(t.value(4, 0) == Rational(4));
}

TEST_CASE("boundary rows and columns") {
  for (long m : {1L, 3L, 7L}) {
    auto t = build_tables(m);
    for (long i = 0; i <= m; ++i) CHECK(t.value(i, m) == Rational(0));
    for (long j = 0; j <= m; ++j) CHECK(t.value(m, j) == Rational(m - j));
    CHECK(t.stops(m, m));
  }
}

TEST_CASE("T dominates the stop payoff and is monotone") {
  for (long m : {5L, 20L, 50L}) {
    auto t = build_tables(m);
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= m; ++j) {
        CHECK(t.value(i, j) >= Rational(std::max(i - j, 0L)));
        if (i < m) CHECK(t.value(i + 1, j) >= t.value(i, j));
        if (j < m) CHECK(t.value(i, j + 1) <= t.value(i, j));
      }
  }
}

TEST_CASE("stopping states sit below the diagonal") {
  for (long m = 1; m <= 50; ++m) {
    auto t = build_tables(m);
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= m; ++j)
        if (t.stops(i, j) && !(i == m && j == m)) CHECK(i > j);
  }
}

TEST_CASE("tie convention changes S only where values tie") {
  for (long m = 1; m <= 12; ++m) {
    auto stop_ties = build_tables(m, true);
    auto run_ties = build_tables(m, false);
    for (long i = 0; i <= m; ++i)
      for (long j = 0; j <= m; ++j) {
        CHECK(stop_ties.value(i, j) == run_ties.value(i, j));
        if (stop_ties.stops(i, j) != run_ties.stops(i, j))
          CHECK(stop_ties.value(i, j) == Rational(i - j));
      }
  }
}

TEST_CASE("deck of 52: optimal value 2.62") {
  auto t = build_tables(26);
  CHECK(t.value(0, 0).decimal(2) == "2.62");
}

TEST_CASE("denominators stay exact") {
  auto t = build_tables(4);
  CHECK(t.value(1, 0).str() == "47/35");  // not approximately
}

TEST_CASE("threshold_decide") {
  CHECK(threshold_decide({1, 0, 4}, 1) == Decision::Stop);
  CHECK(threshold_decide({0, 0, 4}, 1) == Decision::Continue);
  CHECK(threshold_decide({3, 1, 10}, 3) == Decision::Continue);
}

TEST_CASE("approx_threshold") {
  CHECK(approx_threshold(8) == 1);
  CHECK(approx_threshold(52) == 3);
  CHECK(approx_threshold(2) == 1);
  CHECK_THROWS_AS(approx_threshold(7), std::domain_error);
}

TEST_CASE("optimal_decide") {
  auto t = build_tables(4);
  CHECK(optimal_decide({2, 0, 4}, t) == Decision::Stop);
  CHECK(optimal_decide({0, 0, 4}, t) == Decision::Continue);
  CHECK(optimal_decide({4, 4, 4}, t) == Decision::Stop);
  CHECK_THROWS_AS(optimal_decide({0, 0, 5}, t), std::domain_error);
}

TEST_CASE("middle_decide") {
  CHECK(middle_decide(4, 8, Rational(2)) == Decision::Stop);
  CHECK(middle_decide(4, 8, Rational(0)) == Decision::Continue);
  CHECK(middle_decide(3, 8, Rational(2)) == Decision::Continue);
  CHECK_THROWS_AS(middle_decide(2, 5, Rational(1)), std::domain_error);
}

TEST_CASE("general_optimal_value") {
  auto pair = Multiset::from_values({Rational(-1), Rational(1)});
  CHECK(general_optimal_value(pair, PayoffMode::Suffix) == frac(1, 2));
  CHECK(general_optimal_value(pair, PayoffMode::Prefix) == frac(1, 2));
  CHECK(general_optimal_value(Multiset::balanced_binary(4),
                              PayoffMode::Suffix) == Rational(1));
}

TEST_CASE("general oracle agrees with the DP table") {
  for (long m = 1; m <= 9; ++m)
    CHECK(general_optimal_value(Multiset::balanced_binary(m),
                                PayoffMode::Suffix) ==
          build_tables(m).value(0, 0));
}

TEST_CASE("negation duality between prefix and suffix") {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    long n = 2 + 2 * static_cast<long>(rng.next_below(3));  // 2, 4, 6
    std::vector<Rational> vals;
    Rational sum(0);
    for (long i = 0; i + 1 < n; ++i) {
      Rational v(static_cast<long>(rng.next_below(11)) - 5);
      vals.push_back(v);
      sum += v;
    }
    vals.push_back(-sum);
    auto m = Multiset::from_values(vals);
    CHECK(general_optimal_value(m, PayoffMode::Prefix) ==
          general_optimal_value(m.negated(), PayoffMode::Suffix));
  }
}

TEST_CASE("optimal dominates both heuristics") {
  for (long m = 1; m <= 12; ++m) {
    Rational w2 = build_tables(m).value(0, 0);
    CHECK(w2 >= w1_exact(m));
    CHECK(w2 >= w3_exact(2 * m));
  }
}

TEST_CASE("general oracle size guard") {
  CHECK_THROWS_AS(general_optimal_value(Multiset::balanced_binary(10),
                                        PayoffMode::Suffix),
                  refusal_error);
}
