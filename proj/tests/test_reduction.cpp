#include <doctest.h>

#include <algorithm>

#include "zsg/engine.hpp"
#include "zsg/reduction.hpp"
#include "zsg/rng.hpp"

using namespace zsg;

namespace {

Rational frac(long p, long q) { return Rational(BigInt(p), BigInt(q)); }

Multiset ms(std::initializer_list<long> vals) {
  std::vector<Rational> out;
  for (long v : vals) out.push_back(Rational(v));
  return Multiset::from_values(std::move(out));
}

// random even-size zero-sum multiset with entries in [-5, 5] \ {0}
Multiset random_zero_sum(SplitMix64& rng, long n) {
  while (true) {
    std::vector<Rational> vals;
    Rational sum(0);
    for (long i = 0; i + 1 < n; ++i) {
      long v = static_cast<long>(rng.next_below(10)) - 5;
      if (v >= 0) ++v;
      vals.push_back(Rational(v));
      sum += v;
    }
    vals.push_back(-sum);
    if (vals.back() == Rational(0)) continue;
    return Multiset::from_values(std::move(vals));
  }
}

}  // namespace

TEST_CASE("f_value examples") {
  CHECK(f_value(Multiset::balanced_binary(4)) == frac(18, 35));
  CHECK(f_value(Multiset::balanced_binary(1)) == frac(1, 2));
  Rational five_halves(BigInt(5), BigInt(2));
  std::vector<Rational> uniform;
  for (int i = 0; i < 4; ++i) uniform.push_back(five_halves);
  for (int i = 0; i < 4; ++i) uniform.push_back(-five_halves);
  CHECK(f_value(Multiset::from_values(uniform)) == frac(9, 7));
  CHECK_THROWS_AS(f_value(ms({-1, 0, 1})), std::domain_error);
}

TEST_CASE("f_value agrees with the full permutation enumeration") {
  SplitMix64 rng(5);
  StrategyFactory middle = [] { return make_middle_strategy(); };
  for (int trial = 0; trial < 10; ++trial) {
    Multiset m = random_zero_sum(rng, 6);
    CHECK(f_value(m) == exact_expected_payoff(middle, m, PayoffMode::Prefix));
  }
}

TEST_CASE("average_pair") {
  auto m = ms({-5, -3, -3, 1, 1, 1, 2, 6});
  auto next = average_pair(m, Rational(-5), Rational(1));
  CHECK(std::count(next.elements().begin(), next.elements().end(),
                   Rational(-2)) == 2);
  CHECK(next.n_plus() == next.n_minus());

  CHECK(average_pair(ms({-1, 1}), Rational(-1), Rational(1)).elements() ==
        std::vector<Rational>{Rational(0), Rational(0)});

  auto four = average_pair(m, Rational(2), Rational(6));
  CHECK(std::count(four.elements().begin(), four.elements().end(),
                   Rational(4)) == 2);

  CHECK_THROWS_AS(average_pair(m, Rational(1), Rational(1)), std::domain_error);
  CHECK_THROWS_AS(average_pair(m, Rational(-7), Rational(1)), std::domain_error);
}

TEST_CASE("lemma3_check holds on random multisets") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    Multiset m = random_zero_sum(rng, 6);
    const auto& els = m.elements();
    size_t ia = rng.next_below(els.size());
    size_t ib = rng.next_below(els.size());
    if (ia == ib || els[ia] == els[ib]) continue;
    Rational a = std::min(els[ia], els[ib]);
    Rational b = std::max(els[ia], els[ib]);
    std::vector<Rational> rest;
    bool skipped_a = false, skipped_b = false;
    for (const auto& v : els) {
      if (!skipped_a && v == a) { skipped_a = true; continue; }
      if (!skipped_b && v == b) { skipped_b = true; continue; }
      rest.push_back(v);
    }
    auto [with_pair, with_avg] = lemma3_check(rest, a, b);
    CHECK(with_pair >= with_avg);
  }
}

TEST_CASE("midpoint_inequality cases") {
  auto check_pair = [](long x, long a, long b, const Rational& lhs_want,
                       const Rational& rhs_want) {
    auto [lhs, rhs] = midpoint_inequality(Rational(x), Rational(a), Rational(b));
    CHECK(lhs == lhs_want);
    CHECK(rhs == rhs_want);
    CHECK(lhs >= rhs);
  };
  check_pair(0, -2, 2, Rational(1), Rational(0));
  check_pair(-3, -2, 2, Rational(0), Rational(0));
  check_pair(5, 1, 3, Rational(7), Rational(7));
}

TEST_CASE("midpoint_inequality on stratified random triples") {
  SplitMix64 rng(23);
  auto rnd = [&] {
    return Rational(BigInt(static_cast<long>(rng.next_below(81)) - 40),
                    BigInt(static_cast<long>(rng.next_below(8)) + 1));
  };
  int done = 0;
  while (done < 2000) {
    Rational a = rnd(), b = rnd();
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    Rational mid = -(a + b) / Rational(2);
    // stratify x across the four proof intervals relative to -b, mid, -a
    Rational anchors[4] = {-b - Rational(1), (-b + mid) / Rational(2),
                           (mid + -a) / Rational(2), -a + Rational(1)};
    for (const auto& x : anchors) {
      auto [lhs, rhs] = midpoint_inequality(x, a, b);
      CHECK(lhs >= rhs);
      ++done;
    }
  }
}

TEST_CASE("balance_signs") {
  auto example = ms({-5, -3, -3, 1, 1, 1, 2, 6});
  auto chain = balance_signs(example);
  CHECK(chain.steps.size() == 1);
  CHECK(chain.steps[0].action == "average -5 with 1");
  CHECK(chain.final_mu > example.mu() / Rational(2));

  auto balanced = balance_signs(Multiset::balanced_binary(3));
  CHECK(balanced.steps.empty());

  auto small = balance_signs(ms({-6, 1, 2, 3}));
  CHECK(small.steps.size() == 1);
  Rational neg_half5(BigInt(-5), BigInt(2));
  CHECK(std::count(small.steps[0].multiset.elements().begin(),
                   small.steps[0].multiset.elements().end(),
                   neg_half5) == 2);
  CHECK(small.final_mu == frac(5, 2));
  CHECK(small.final_mu > ms({-6, 1, 2, 3}).mu() / Rational(2));

  // negatives in excess: the mirrored pairing keeps the midpoint positive
  auto excess_neg = balance_signs(ms({-1, -1, -1, -1, -1, 1, 1, 3}));
  CHECK(excess_neg.steps.size() == 1);
  CHECK(excess_neg.steps[0].action == "average -1 with 3");
  CHECK(excess_neg.final_multiset().elements() ==
        Multiset::balanced_binary(4).elements());

  CHECK_THROWS_AS(balance_signs(ms({-2, 0, 0, 2})), refusal_error);
}

TEST_CASE("balance_signs step count") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Multiset m = random_zero_sum(rng, 8);
    auto chain = balance_signs(m);
    CHECK(static_cast<long>(chain.steps.size()) ==
          std::abs(m.n_plus() - m.n_minus()) / 2);
    CHECK(chain.final_mu > m.mu() / Rational(2));
  }
}

TEST_CASE("reduce_to_binary on the worked example") {
  auto example = ms({-5, -3, -3, 1, 1, 1, 2, 6});
  auto chain = reduce_to_binary(example, Rational(0), /*with_f=*/true);
  const auto& fin = chain.final_multiset();
  Rational five_halves(BigInt(5), BigInt(2));
  for (const auto& v : fin.elements())
    CHECK((v == five_halves || v == -five_halves));
  CHECK(chain.final_mu == five_halves);

  Rational prev = *chain.input_f;
  CHECK(prev == f_value(example));
  for (const auto& step : chain.steps) {
    CHECK(*step.f <= prev);
    prev = *step.f;
  }
  CHECK(prev == frac(9, 7));
}

TEST_CASE("reduce_to_binary leaves binary inputs alone") {
  auto chain = reduce_to_binary(Multiset::balanced_binary(4), Rational(0));
  CHECK(chain.steps.empty());
}

TEST_CASE("reduce_to_binary with an epsilon target") {
  auto m = ms({-3, -1, -1, 2, 2, 1});
  Rational eps(BigInt(1), BigInt(100));
  auto chain = reduce_to_binary(m, eps, /*with_f=*/true);
  const auto& fin = chain.final_multiset();
  for (int sign : {-1, +1}) {
    Rational lo, hi;
    bool found = false;
    for (const auto& v : fin.elements()) {
      if (v.sign() != sign) continue;
      if (!found) { lo = hi = v; found = true; }
      if (v < lo) lo = v;
      if (v > hi) hi = v;
    }
    CHECK(found);
    CHECK(hi - lo <= eps);
  }
  Rational prev = *chain.input_f;
  for (const auto& step : chain.steps) {
    CHECK(*step.f <= prev);
    prev = *step.f;
  }
}

TEST_CASE("reduce_to_binary refuses nonterminating exact requests") {
  // sums per class are not reachable by dyadic midpoints here
  auto m = ms({-1, -1, -2, 1, 1, 2});
  CHECK_THROWS_AS(reduce_to_binary(m, Rational(0)), refusal_error);
}

TEST_CASE("scaling_check") {
  auto b8 = Multiset::balanced_binary(4);
  Rational five_halves(BigInt(5), BigInt(2));
  auto [lhs, rhs] = scaling_check(b8, five_halves);
  CHECK(lhs == rhs);
  CHECK(lhs == frac(9, 7));

  SplitMix64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Multiset m = random_zero_sum(rng, 6);
    auto [l2, r2] = scaling_check(m, Rational(3));
    CHECK(l2 == r2);
  }
}
