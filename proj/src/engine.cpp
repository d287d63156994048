#include "zsg/engine.hpp"

#include <algorithm>
#include <cmath>

#include "zsg/rng.hpp"

namespace zsg {

std::vector<Rational> shuffle(const Multiset& m, uint64_t seed) {
  if (m.size() < 1) throw std::domain_error("shuffle: empty multiset");
  std::vector<Rational> perm = m.elements();
  SplitMix64 rng(seed);
  shuffle_in_place(perm, rng);
  return perm;
}

GameRun play(Strategy& strategy, const std::vector<Rational>& permutation,
             PayoffMode mode) {
  long n = static_cast<long>(permutation.size());
  strategy.reset(n);
  GameRun run;
  run.permutation = permutation;
  Rational prefix(0);
  long stop_index = n;
  for (long i = 0; i < n; ++i) {
    prefix += permutation[static_cast<size_t>(i)];
    if (strategy.observe(permutation[static_cast<size_t>(i)], i + 1) ==
        Decision::Stop) {
      stop_index = i + 1;
      break;
    }
  }
  run.stop_index = stop_index;
  if (stop_index == n) {
    run.payoff = Rational(0);  // zero-sum: both sides vanish at the end
  } else {
    run.payoff = mode == PayoffMode::Prefix ? prefix : -prefix;
  }
  return run;
}

SimReport monte_carlo(const StrategyFactory& factory, const Multiset& m,
                      PayoffMode mode, long reps, uint64_t seed) {
  if (reps < 1) throw std::domain_error("monte_carlo: reps < 1");
  auto strategy = factory();
  // Kahan summation for the running mean/second moment
  double sum = 0.0, sum_c = 0.0;
  double sq = 0.0, sq_c = 0.0;
  auto add = [](double& acc, double& carry, double x) {
    double y = x - carry;
    double t = acc + y;
    carry = (t - acc) - y;
    acc = t;
  };
  for (long r = 0; r < reps; ++r) {
    auto perm = shuffle(m, mix_seed(seed, static_cast<uint64_t>(r)));
    GameRun run = play(*strategy, perm, mode);
    double p = run.payoff.to_double();
    add(sum, sum_c, p);
    add(sq, sq_c, p * p);
  }
  SimReport report;
  report.reps = reps;
  report.seed = seed;
  report.strategy = strategy->name();
  report.mode = mode;
  report.mean = sum / static_cast<double>(reps);
  double var = 0.0;
  if (reps > 1) {
    var = (sq - sum * sum / static_cast<double>(reps)) /
          static_cast<double>(reps - 1);
    if (var < 0.0) var = 0.0;
  }
  report.stderr_of_mean = std::sqrt(var / static_cast<double>(reps));
  return report;
}

BigCount permutation_count(const Multiset& m) {
  BigCount total;
  mpz_fac_ui(total.get_mpz_t(), static_cast<unsigned long>(m.size()));
  const auto& els = m.elements();
  size_t i = 0;
  while (i < els.size()) {
    size_t j = i;
    while (j < els.size() && els[j] == els[i]) ++j;
    BigCount f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j - i));
    mpz_divexact(total.get_mpz_t(), total.get_mpz_t(), f.get_mpz_t());
    i = j;
  }
  return total;
}

bool enumeration_feasible(const Multiset& m) {
  return m.size() >= 1 && permutation_count(m) <= BigCount(10000000);
}

Rational exact_expected_payoff(const StrategyFactory& factory,
                               const Multiset& m, PayoffMode mode) {
  if (m.size() < 1)
    throw std::domain_error("exact_expected_payoff: empty multiset");
  BigCount count = permutation_count(m);
  if (count > BigCount(10000000))
    throw refusal_error("exact_expected_payoff: " + count.get_str() +
                        " distinct permutations exceed the 10^7 guard");
  auto strategy = factory();
  std::vector<Rational> perm = m.elements();  // sorted: lexicographic start
  auto less = [](const Rational& a, const Rational& b) { return a < b; };
  Rational sum(0);
  BigCount seen(0);
  do {
    sum += play(*strategy, perm, mode).payoff;
    seen += 1;
  } while (std::next_permutation(perm.begin(), perm.end(), less));
  if (seen != count)
    throw std::logic_error("enumeration count mismatch: saw " +
                           seen.get_str() + ", expected " + count.get_str());
  return sum / Rational(BigInt(count));
}

}  // namespace zsg
