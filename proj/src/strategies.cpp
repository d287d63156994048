#include "zsg/strategies.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <tuple>

#include "zsg/combinatorics.hpp"

namespace zsg {

std::vector<std::tuple<long, long, long>> StrategyTables::reachable_stops()
    const {
  std::vector<std::tuple<long, long, long>> out;
  std::vector<uint8_t> seen(static_cast<size_t>((m_ + 1) * (m_ + 1)), 0);
  std::vector<std::pair<long, long>> stack{{0, 0}};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    if (seen[idx(i, j)]) continue;
    seen[idx(i, j)] = 1;
    if (stops(i, j)) {
      out.emplace_back(i, j, i - j);
      continue;
    }
    if (i < m_) stack.emplace_back(i + 1, j);
    if (j < m_) stack.emplace_back(i, j + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void StrategyTables::dump_t_csv(std::ostream& out) const {
  out << "i\\j";
  for (long j = 0; j <= m_; ++j) out << "," << j;
  out << "\n";
  for (long i = 0; i <= m_; ++i) {
    out << i;
    for (long j = 0; j <= m_; ++j) out << "," << value(i, j).str();
    out << "\n";
  }
}

void StrategyTables::dump_s_csv(std::ostream& out) const {
  out << "i\\j";
  for (long j = 0; j <= m_; ++j) out << "," << j;
  out << "\n";
  for (long i = 0; i <= m_; ++i) {
    out << i;
    for (long j = 0; j <= m_; ++j) out << "," << (stops(i, j) ? 1 : 0);
    out << "\n";
  }
}

StrategyTables build_tables(long m, bool stop_on_ties) {
  if (m < 1 || m > 4096) throw std::domain_error("build_tables: need 1 <= m <= 4096");
  size_t side = static_cast<size_t>(m + 1);
  std::vector<Rational> t(side * side);
  std::vector<uint8_t> s(side * side, 0);
  auto at = [&](long i, long j) -> size_t {
    return static_cast<size_t>(i) * side + static_cast<size_t>(j);
  };

  // boundary: all +1's revealed -> ride to the end; all -1's revealed ->
  // collect the m-j remaining +1's
  for (long i = 0; i <= m; ++i) t[at(i, m)] = Rational(0);
  for (long j = 0; j <= m; ++j) {
    t[at(m, j)] = Rational(m - j);
    s[at(m, j)] = 1;
  }
  s[at(m, m)] = 1;  // automatic stop

  for (long i = m - 1; i >= 0; --i) {
    for (long j = m - 1; j >= 0; --j) {
      Rational denom(2 * m - i - j);
      Rational cont = (Rational(m - i) * t[at(i + 1, j)] +
                       Rational(m - j) * t[at(i, j + 1)]) /
                      denom;
      Rational stop_now(i - j);
      if (stop_now > cont || (stop_on_ties && stop_now == cont)) {
        t[at(i, j)] = stop_now;
        s[at(i, j)] = 1;
      } else {
        t[at(i, j)] = cont;
      }
    }
  }
  return StrategyTables(m, std::move(t), std::move(s));
}

Decision threshold_decide(const BinaryState& state, long t) {
  if (t < 1) throw std::domain_error("threshold_decide: t < 1");
  return state.minus - state.plus >= t ? Decision::Stop : Decision::Continue;
}

long approx_threshold(long big_n) {
  if (big_n < 2 || big_n % 2 != 0)
    throw std::domain_error("approx_threshold: N must be even and >= 2");
  return threshold_value(big_n / 2);
}

Decision optimal_decide(const BinaryState& state, const StrategyTables& tables) {
  if (state.m != tables.m())
    throw std::domain_error("optimal_decide: state/tables size mismatch");
  return tables.stops(state.minus, state.plus) ? Decision::Stop
                                               : Decision::Continue;
}

Decision middle_decide(long index, long n, const Rational& prefix_sum) {
  if (n % 2 != 0) throw std::domain_error("middle_decide: n must be even");
  if (index == n / 2 && prefix_sum > Rational(0)) return Decision::Stop;
  return Decision::Continue;
}

namespace {

long as_binary(const Rational& value) {
  if (value == Rational(1)) return 1;
  if (value == Rational(-1)) return -1;
  throw std::domain_error("binary strategy saw non-binary value " +
                          value.str());
}

class ThresholdStrategy final : public Strategy {
 public:
  explicit ThresholdStrategy(long t) : t_(t) {
    if (t < 1) throw std::domain_error("threshold strategy: t < 1");
  }
  std::string name() const override { return "threshold"; }
  void reset(long n) override {
    if (n % 2 != 0) throw std::domain_error("threshold strategy: odd n");
    state_ = {0, 0, n / 2};
  }
  Decision observe(const Rational& value, long) override {
    (as_binary(value) < 0 ? state_.minus : state_.plus) += 1;
    return threshold_decide(state_, t_);
  }

 private:
  long t_;
  BinaryState state_;
};

class OptimalStrategy final : public Strategy {
 public:
  explicit OptimalStrategy(std::shared_ptr<const StrategyTables> tables)
      : tables_(std::move(tables)) {}
  std::string name() const override { return "optimal"; }
  void reset(long n) override {
    if (n != 2 * tables_->m())
      throw std::domain_error("optimal strategy: tables built for n = " +
                              std::to_string(2 * tables_->m()));
    state_ = {0, 0, tables_->m()};
  }
  Decision observe(const Rational& value, long) override {
    (as_binary(value) < 0 ? state_.minus : state_.plus) += 1;
    return optimal_decide(state_, *tables_);
  }

 private:
  std::shared_ptr<const StrategyTables> tables_;
  BinaryState state_;
};

class MiddleStrategy final : public Strategy {
 public:
  std::string name() const override { return "middle"; }
  void reset(long n) override {
    if (n % 2 != 0) throw std::domain_error("middle strategy: odd n");
    n_ = n;
    prefix_ = Rational(0);
  }
  Decision observe(const Rational& value, long index) override {
    prefix_ += value;
    return middle_decide(index, n_, prefix_);
  }

 private:
  long n_ = 0;
  Rational prefix_;
};

}  // namespace

std::unique_ptr<Strategy> make_threshold_strategy(long t) {
  return std::make_unique<ThresholdStrategy>(t);
}
std::unique_ptr<Strategy> make_optimal_strategy(
    std::shared_ptr<const StrategyTables> tables) {
  return std::make_unique<OptimalStrategy>(std::move(tables));
}
std::unique_ptr<Strategy> make_middle_strategy() {
  return std::make_unique<MiddleStrategy>();
}

namespace {

struct GeneralSolver {
  std::vector<Rational> distinct;
  std::map<std::vector<long>, Rational> memo;
  PayoffMode mode;

  Rational solve(std::vector<long>& counts, long total, const Rational& rem_sum) {
    Rational stop = mode == PayoffMode::Suffix ? rem_sum : -rem_sum;
    if (stop < Rational(0)) stop = Rational(0);  // riding to the end is free
    if (total == 0) return stop;
    auto it = memo.find(counts);
    if (it != memo.end()) return it->second;
    Rational cont(0);
    for (size_t d = 0; d < distinct.size(); ++d) {
      if (counts[d] == 0) continue;
      long mult = counts[d];
      counts[d] -= 1;
      cont += Rational(mult) * solve(counts, total - 1, rem_sum - distinct[d]);
      counts[d] += 1;
    }
    cont = cont / Rational(total);
    Rational v = stop > cont ? stop : cont;
    memo.emplace(counts, v);
    return v;
  }
};

}  // namespace

Rational general_optimal_value(const Multiset& m, PayoffMode mode) {
  if (m.size() > 18)
    throw refusal_error("general_optimal_value: |M| > 18 (state-space guard)");
  if (m.size() == 0) return Rational(0);
  GeneralSolver solver;
  solver.mode = mode;
  std::vector<long> counts;
  for (const auto& v : m.elements()) {
    if (!solver.distinct.empty() && solver.distinct.back() == v) {
      counts.back() += 1;
    } else {
      solver.distinct.push_back(v);
      counts.push_back(1);
    }
  }
  return solver.solve(counts, m.size(), Rational(0));
}

}  // namespace zsg
