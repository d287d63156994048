#pragma once

#include <memory>
#include <string>
#include <vector>

#include "zsg/multiset.hpp"
#include "zsg/rational.hpp"

namespace zsg {

enum class Decision { Stop, Continue };

/// Counts of -1's (minus) and +1's (plus) revealed so far in the binary
/// game of half-length m.
struct BinaryState {
  long minus = 0;
  long plus = 0;
  long m = 0;
};

/// Value matrix T and stopping matrix S of the optimal binary strategy,
/// (m+1) x (m+1) each, indexed [minus][plus]. Immutable once built.
class StrategyTables {
 public:
  StrategyTables(long m, std::vector<Rational> t, std::vector<uint8_t> s)
      : m_(m), t_(std::move(t)), s_(std::move(s)) {}

  long m() const { return m_; }
  const Rational& value(long i, long j) const { return t_[idx(i, j)]; }
  bool stops(long i, long j) const { return s_[idx(i, j)] != 0; }

  /// Stopping states reachable from (0,0) when play follows S, with the
  /// payoff i - j collected there.
  std::vector<std::tuple<long, long, long>> reachable_stops() const;

  void dump_t_csv(std::ostream& out) const;
  void dump_s_csv(std::ostream& out) const;

 private:
  size_t idx(long i, long j) const {
    return static_cast<size_t>(i) * static_cast<size_t>(m_ + 1) +
           static_cast<size_t>(j);
  }
  long m_;
  std::vector<Rational> t_;
  std::vector<uint8_t> s_;
};

/// Backward-induction construction of T and S:
///   T[i,j] = max(i - j, p0 T[i+1,j] + p1 T[i,j+1]),
///   p0 = (m-i)/(2m-i-j), p1 = (m-j)/(2m-i-j),
/// with boundary T[i,m] = 0, T[m,j] = m - j. stop_on_ties picks the
/// convention for S when both branches are equal; T is identical either
/// way.
StrategyTables build_tables(long m, bool stop_on_ties = true);

/// Stop as soon as the lattice path reaches the line y = x - t, i.e.
/// minus - plus >= t.
Decision threshold_decide(const BinaryState& state, long t);

/// Threshold to use when only a bound N <= n <= 2N is known: the rule is
/// instantiated as if n = N.
long approx_threshold(long big_n);

/// Stop iff S marks the current state.
Decision optimal_decide(const BinaryState& state, const StrategyTables& tables);

/// Stop at the midpoint iff the running prefix sum is positive; otherwise
/// ride to the end.
Decision middle_decide(long index, long n, const Rational& prefix_sum);

/// Stateful adapter consumed by the game engine: reset per game, then
/// queried once after every reveal (index is the 1-based reveal count).
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual std::string name() const = 0;
  virtual void reset(long n) = 0;
  virtual Decision observe(const Rational& value, long index) = 0;
};

/// The three paper rules as engine strategies. Threshold and optimal are
/// binary-only and reject any revealed value other than +-1.
std::unique_ptr<Strategy> make_threshold_strategy(long t);
std::unique_ptr<Strategy> make_optimal_strategy(std::shared_ptr<const StrategyTables> tables);
std::unique_ptr<Strategy> make_middle_strategy();

/// Exact optimal game value for an arbitrary zero-sum multiset by
/// backward induction over remaining-multiset states, memoized on the
/// canonical remaining-count vector. Refuses |M| > 18.
Rational general_optimal_value(const Multiset& m, PayoffMode mode);

}  // namespace zsg
