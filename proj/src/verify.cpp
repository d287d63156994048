#include "zsg/verify.hpp"

#include <algorithm>
#include <cstdio>

#include "zsg/combinatorics.hpp"
#include "zsg/engine.hpp"
#include "zsg/reduction.hpp"
#include "zsg/rng.hpp"
#include "zsg/strategies.hpp"

namespace zsg {

namespace {

void add(VerifySuite& suite, const std::string& id, const std::string& expected,
         const std::string& actual) {
  suite.checks.push_back({id, expected, actual, expected == actual});
}

void add_bool(VerifySuite& suite, const std::string& id, bool ok,
              const std::string& detail = "") {
  suite.checks.push_back({id, "true", ok ? "true" : (detail.empty() ? "false" : detail), ok});
}

// The published tables truncate rather than round their decimal entries, so
// compare against a truncated rendering.
std::string truncated(const Rational& v, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt units = v.numerator() * scale / v.denominator();
  std::string s = units.get_str();
  bool neg = !s.empty() && s.front() == '-';
  if (neg) s.erase(s.begin());
  while (s.size() <= static_cast<size_t>(digits)) s.insert(s.begin(), '0');
  s.insert(s.size() - static_cast<size_t>(digits), ".");
  return (neg ? "-" : "") + s;
}

VerifySuite suite_figure2() {
  VerifySuite s{"figure2", {}};
  auto t4 = build_tables(4);
  // full 5x5 value grid for n = 8, column i, row j
  const char* expected[5][5] = {
      {"1", "47/35", "2", "3", "4"},
      {"23/35", "17/20", "6/5", "2", "3"},
      {"2/5", "1/2", "2/3", "1", "2"},
      {"1/5", "1/4", "1/3", "1/2", "1"},
      {"0", "0", "0", "0", "0"},
  };
  for (long j = 0; j <= 4; ++j)
    for (long i = 0; i <= 4; ++i)
      add(s, "T4[" + std::to_string(i) + "," + std::to_string(j) + "]",
          expected[j][i], t4.value(i, j).str());

  auto stops4 = t4.reachable_stops();
  std::vector<std::tuple<long, long, long>> want4{
      {2, 0, 2}, {3, 1, 2}, {3, 2, 1}, {4, 3, 1}, {4, 4, 0}};
  add_bool(s, "reachable-stops-n8", stops4 == want4);

  auto t10 = build_tables(10);
  auto stops10 = t10.reachable_stops();
  std::vector<std::tuple<long, long, long>> want10{
      {3, 0, 3}, {4, 1, 3}, {5, 2, 3},  {6, 3, 3},  {7, 4, 3},  {7, 5, 2},
      {8, 6, 2}, {9, 7, 2}, {9, 8, 1},  {10, 9, 1}, {10, 10, 0}};
  add_bool(s, "reachable-stops-n20", stops10 == want10);
  return s;
}

VerifySuite suite_table1() {
  VerifySuite s{"table1", {}};
  auto table = moser_table(300, MoserMode::Decimal);
  const std::pair<long, const char*> rows[] = {
      {1, "0.500"}, {2, "0.625"}, {3, "0.695"},  {5, "0.775"},  {10, "0.861"},
      {20, "0.919"}, {100, "0.981"}, {200, "0.990"}, {300, "0.993"}};
  for (auto [n, dec] : rows)
    add(s, "E_" + std::to_string(n), dec,
        truncated(table.values[static_cast<size_t>(n)], 3));
  return s;
}

VerifySuite suite_table2() {
  VerifySuite s{"table2", {}};
  const std::pair<long, const char*> rows[] = {
      {2, "1/2"},  {4, "1/3"},    {6, "3/5"},     {8, "18/35"},
      {10, "5/7"}, {12, "50/77"}, {14, "350/429"}, {16, "980/1287"}};
  for (auto [n, frac] : rows)
    add(s, "W3(" + std::to_string(n) + ")", frac, w3_exact(n).str());
  add(s, "W3(32)~", "1.10", truncated(w3_exact(32), 2));
  add(s, "W3(64)~", "1.57", truncated(w3_exact(64), 2));
  return s;
}

VerifySuite suite_lemma1() {
  VerifySuite s{"lemma1", {}};
  for (long m = 1; m <= 7; ++m) {
    // exhaustive oracle: histogram of the deepest excursion below the
    // diagonal over all C(2m, m) paths
    std::vector<int> seq;
    for (long i = 0; i < m; ++i) seq.push_back(-1);
    for (long i = 0; i < m; ++i) seq.push_back(+1);
    std::vector<long> deepest(static_cast<size_t>(m) + 1, 0);
    do {
      long diff = 0, worst = 0;
      for (int v : seq) {
        diff += (v < 0) ? 1 : -1;
        worst = std::max(worst, diff);
      }
      deepest[static_cast<size_t>(worst)] += 1;
    } while (std::next_permutation(seq.begin(), seq.end()));
    for (long t = 1; t <= m; ++t) {
      long reach = 0;
      for (long d = t; d <= m; ++d) reach += deepest[static_cast<size_t>(d)];
      add(s, "paths(m=" + std::to_string(m) + ",t=" + std::to_string(t) + ")",
          binomial(2 * m, m - t).get_str(), std::to_string(reach));
    }
  }
  return s;
}

VerifySuite suite_lemma2() {
  VerifySuite s{"lemma2", {}};
  bool all_equal = true;
  std::string first_bad;
  for (long m = 1; m <= 200; ++m) {
    auto [lhs, rhs] = lemma2_sides(m);
    if (lhs != rhs) {
      all_equal = false;
      first_bad = "m=" + std::to_string(m);
      break;
    }
  }
  add_bool(s, "sides-equal-m-1..200", all_equal, first_bad);
  return s;
}

VerifySuite suite_vandermonde() {
  VerifySuite s{"vandermonde", {}};
  SplitMix64 rng(20240801);
  bool all_equal = true;
  std::string first_bad;
  for (int trial = 0; trial < 500; ++trial) {
    long a = static_cast<long>(rng.next_below(65));
    long b = static_cast<long>(rng.next_below(65));
    long r = static_cast<long>(rng.next_below(65));
    auto [lhs, rhs] = vandermonde_check(a, b, r);
    if (lhs != rhs) {
      all_equal = false;
      first_bad = "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(r) + ")";
      break;
    }
  }
  add_bool(s, "convolution-500-random-triples", all_equal, first_bad);
  return s;
}

VerifySuite suite_upperbound() {
  VerifySuite s{"upperbound", {}};
  bool identity = true;
  std::string bad;
  for (long m = 1; m <= 200; ++m) {
    BigCount c = binomial(2 * m, m);
    BigInt pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(2 * m - 1));
    Rational closed = Rational(pow2, c) - Rational(BigInt(1), BigInt(2));
    if (payoff_upper_bound(m) != closed) {
      identity = false;
      bad = "m=" + std::to_string(m);
      break;
    }
  }
  add_bool(s, "sum-equals-closed-form-m-1..200", identity, bad);

  bool dominated = true;
  std::string bad2;
  for (long m = 1; m <= 50; ++m) {
    if (build_tables(m).value(0, 0) > payoff_upper_bound(m)) {
      dominated = false;
      bad2 = "m=" + std::to_string(m);
      break;
    }
  }
  add_bool(s, "optimal-below-upper-bound-m-1..50", dominated, bad2);
  return s;
}

VerifySuite suite_deck52() {
  VerifySuite s{"deck52", {}};
  auto t26 = build_tables(26);
  add(s, "optimal-value-n52", "2.62", t26.value(0, 0).decimal(2));
  double w1lb = w1_lower_bound(26);
  add_bool(s, "threshold-bound-n52-in-[1.53,1.55]",
           w1lb >= 1.53 && w1lb <= 1.55, std::to_string(w1lb));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", w1lb);
  add(s, "threshold-bound-n52", "1.54", buf);
  return s;
}

VerifySuite suite_example9over7() {
  VerifySuite s{"example9over7", {}};
  auto m = Multiset::from_values({Rational(-5), Rational(-3), Rational(-3),
                                  Rational(1), Rational(1), Rational(1),
                                  Rational(2), Rational(6)});
  add(s, "mu", "11/4", m.mu().str());
  auto chain = reduce_to_binary(m, Rational(0), /*with_f=*/true);
  const Multiset& fin = chain.final_multiset();
  Rational half5(BigInt(5), BigInt(2));
  bool uniform = fin.size() == 8;
  for (const auto& v : fin.elements())
    uniform = uniform && (v == half5 || v == -half5);
  add_bool(s, "terminates-at-eight-copies-of-5/2", uniform, fin.str());

  bool nonincreasing = true;
  Rational prev = *chain.input_f;
  for (const auto& step : chain.steps) {
    if (*step.f > prev) nonincreasing = false;
    prev = *step.f;
  }
  add_bool(s, "f-chain-nonincreasing", nonincreasing);
  add(s, "final-f", "9/7", prev.str());

  auto [lhs, rhs] = scaling_check(Multiset::balanced_binary(4), half5);
  add(s, "scaling-f(5/2*B8)", rhs.str(), lhs.str());
  add(s, "scaled-value", "9/7", lhs.str());
  return s;
}

VerifySuite suite_dominance() {
  VerifySuite s{"dominance", {}};
  bool ok = true;
  std::string bad;
  for (long m = 1; m <= 12; ++m) {
    Rational w2 = build_tables(m).value(0, 0);
    if (w2 < w1_exact(m) || w2 < w3_exact(2 * m)) {
      ok = false;
      bad = "m=" + std::to_string(m);
      break;
    }
  }
  add_bool(s, "optimal-beats-threshold-and-middle-m-1..12", ok, bad);
  return s;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{
      "figure2", "table1", "table2",    "lemma1",        "lemma2",
      "vandermonde", "upperbound", "deck52", "example9over7", "dominance"};
  return names;
}

std::vector<VerifySuite> run_verify(const std::string& name) {
  using Runner = VerifySuite (*)();
  static const std::pair<const char*, Runner> runners[] = {
      {"figure2", suite_figure2},       {"table1", suite_table1},
      {"table2", suite_table2},         {"lemma1", suite_lemma1},
      {"lemma2", suite_lemma2},         {"vandermonde", suite_vandermonde},
      {"upperbound", suite_upperbound}, {"deck52", suite_deck52},
      {"example9over7", suite_example9over7}, {"dominance", suite_dominance}};
  std::vector<VerifySuite> out;
  if (name == "all") {
    for (const auto& [n, fn] : runners) out.push_back(fn());
    return out;
  }
  for (const auto& [n, fn] : runners) {
    if (name == n) {
      out.push_back(fn());
      return out;
    }
  }
  throw std::invalid_argument("unknown verify suite '" + name + "'");
}

}  // namespace zsg
