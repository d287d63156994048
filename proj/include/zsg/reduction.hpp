#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsg/multiset.hpp"
#include "zsg/rational.hpp"

namespace zsg {

/// One pair-averaging step: the multiset after the step, a description of
/// the action, and optionally the exact middle-rule value there.
struct ReductionStep {
  Multiset multiset;
  std::string action;
  std::optional<Rational> f;
};

/// Sequence of multisets produced by pair-averaging. Consecutive entries
/// (input, then each step) differ by one replacement; f-values are
/// nonincreasing along the chain and every entry is zero-sum.
struct ReductionChain {
  Multiset input;
  std::optional<Rational> input_f;
  std::vector<ReductionStep> steps;  // empty when nothing had to move
  Rational final_mu;

  const Multiset& final_multiset() const {
    return steps.empty() ? input : steps.back().multiset;
  }
};

/// Exact expected payoff of the stop-in-the-middle rule (prefix mode) on a
/// random permutation of M. The payoff depends only on which elements land
/// in the first half, so this enumerates the C(n, n/2) index subsets
/// rather than all permutations; agreement with the full-permutation
/// expectation is unit-tested. Requires even n <= 20.
Rational f_value(const Multiset& m);

/// M with one copy each of a and b replaced by two copies of (a+b)/2.
/// Requires a < b and both present.
Multiset average_pair(const Multiset& m, const Rational& a, const Rational& b);

/// (f(M' u {a,b}), f(M' u {avg,avg})) for a caller-side >= assertion.
std::pair<Rational, Rational> lemma3_check(const std::vector<Rational>& m_prime,
                                           const Rational& a, const Rational& b);

/// (g(x+a)/2 + g(x+b)/2, g(x + (a+b)/2)) with g the positive part;
/// the pointwise inequality behind the pair-averaging lemma. Requires a < b.
std::pair<Rational, Rational> midpoint_inequality(const Rational& x,
                                                  const Rational& a,
                                                  const Rational& b);

/// Repeatedly averages (most negative, least positive) until
/// n_plus == n_minus == n/2; exactly |n_plus - n_minus| / 2 steps. The
/// final average absolute value mu' exceeds mu/2, asserted. Zero entries
/// are refused (the sign-counting argument needs n = n_plus + n_minus).
ReductionChain balance_signs(const Multiset& m, bool with_f = false);

/// Balances the signs, then averages the (min, max) pair within each sign
/// class until the class spread is <= epsilon. epsilon = 0 is accepted and
/// succeeds whenever exact uniformization is reachable; otherwise a step
/// cap of 10^4 triggers a refusal naming the residual spread.
ReductionChain reduce_to_binary(const Multiset& m, const Rational& epsilon,
                                bool with_f = false);

/// (f(lambda * M), lambda * f(M)) for a caller-side equality assertion.
std::pair<Rational, Rational> scaling_check(const Multiset& m,
                                            const Rational& lambda);

}  // namespace zsg
