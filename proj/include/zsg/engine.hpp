#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zsg/multiset.hpp"
#include "zsg/rational.hpp"
#include "zsg/strategies.hpp"

namespace zsg {

/// One play: the revealed order, where the strategy stopped (0..n, with 0
/// meaning "before any reveal" and n meaning "rode to the end"), and the
/// payoff under the chosen mode.
struct GameRun {
  std::vector<Rational> permutation;
  long stop_index = 0;
  Rational payoff;
};

/// Aggregated Monte Carlo statistics; reproducible from (seed, reps,
/// strategy, multiset, mode).
struct SimReport {
  long reps = 0;
  double mean = 0.0;
  double stderr_of_mean = 0.0;
  uint64_t seed = 0;
  std::string strategy;
  PayoffMode mode = PayoffMode::Suffix;
};

/// Uniform random permutation of the multiset, deterministic in the seed
/// across platforms (SplitMix64 + unbiased Fisher-Yates).
std::vector<Rational> shuffle(const Multiset& m, uint64_t seed);

/// Reveals elements left to right, querying the strategy after every
/// reveal (including the last); records the first Stop.
GameRun play(Strategy& strategy, const std::vector<Rational>& permutation,
             PayoffMode mode);

using StrategyFactory = std::function<std::unique_ptr<Strategy>()>;

/// Replication r runs on seed mix_seed(seed, r), so the report is
/// independent of execution order. Payoffs are aggregated as doubles with
/// compensated summation; everything upstream stays exact.
SimReport monte_carlo(const StrategyFactory& factory, const Multiset& m,
                      PayoffMode mode, long reps, uint64_t seed);

/// Number of distinct permutations, n! / prod(multiplicity!).
BigCount permutation_count(const Multiset& m);

/// Exact expectation by enumerating every distinct permutation once
/// (lexicographic order). Refuses when the count exceeds 10^7.
Rational exact_expected_payoff(const StrategyFactory& factory,
                               const Multiset& m, PayoffMode mode);

/// True when the enumeration guard admits exact_expected_payoff.
bool enumeration_feasible(const Multiset& m);

}  // namespace zsg
