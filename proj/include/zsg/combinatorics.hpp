#pragma once

#include <utility>
#include <vector>

#include "zsg/rational.hpp"

namespace zsg {

/// Query for the line-reach event: half-length m (n = 2m) and the offset t
/// of the line y = x - t.
struct ReachQuery {
  long m = 0;
  long t = 0;
};

/// Probability that a uniform random monotone lattice path from (0,0) to
/// (m,m) touches the line y = x - t: C(2m, m-t) / C(2m, m).
/// Returns 1 when t = 0 and 0 when t > m.
Rational reach_probability(const ReachQuery& q);
inline Rational reach_probability(long m, long t) { return reach_probability({m, t}); }

/// Threshold of the simple stopping rule: floor(sqrt((m+1)/2)), computed by
/// integer square root only.
long threshold_value(long m);

/// Exact expected payoff of the threshold rule: t * P(reach) with
/// t = threshold_value(m).
Rational w1_exact(long m);

/// Floating-point lower bound t * exp(-2t^2 / (m+1)) on w1_exact, nudged
/// down a few ulps so the bound direction survives rounding.
double w1_lower_bound(long m);

/// Sum over t = 1..m of the reach probabilities; an upper bound on the
/// expected payoff of any stopping rule. Equals 2^(2m-1)/C(2m,m) - 1/2.
Rational payoff_upper_bound(long m);

/// Closed-form expected payoff of the stop-in-the-middle rule at n = 4m:
/// 2m * C(2m-1, m-1)^2 / C(4m, 2m).
Rational w3_closed_form(long m);

/// Expected stop-in-the-middle payoff for any even n, via the
/// hypergeometric composition of the first half:
/// sum_k max(0, 2k - n/2) * C(n/2, k) * C(n/2, n/2 - k) / C(n, n/2).
Rational w3_exact(long n);

/// Both sides of the identity
/// sum_{k=1..m} 2k * C(2m, m-k) * C(2m, m+k) = 2m * C(2m-1, m-1)^2.
std::pair<Rational, Rational> lemma2_sides(long m);

/// Both sides of the Vandermonde convolution
/// sum_i C(s, i) * C(t, r-i) = C(s+t, r).
std::pair<BigCount, BigCount> vandermonde_check(long s, long t, long r);

/// Expected values of Moser's keep-or-reject procedure under the uniform
/// distribution: E_0 = 0, E_{n+1} = (1 + E_n^2) / 2.
struct MoserTable {
  std::vector<Rational> values;  // index = number of remaining choices
};

enum class MoserMode { Exact, Decimal };

/// Exact mode keeps full rationals; denominators are 2^(2^n - 1), so it
/// refuses above n_max = 24. Decimal mode rounds each step to 30 decimal
/// digits (half-even) and runs to n_max = 512; since the map x -> (1+x^2)/2
/// is a contraction on [0,1), the accumulated error stays below n * 10^-30,
/// far inside 3-digit accuracy.
MoserTable moser_table(long n_max, MoserMode mode = MoserMode::Exact);

}  // namespace zsg
