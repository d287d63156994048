#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "zsg/combinatorics.hpp"
#include "zsg/engine.hpp"
#include "zsg/reduction.hpp"
#include "zsg/strategies.hpp"
#include "zsg/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace zsg;

struct SimulateArgs {
  std::string strategy;
  long n = 0;
  std::string multiset_file;
  std::string mode = "suffix";
  long reps = 10000;
  uint64_t seed = 0;
  long threshold_n = 0;
};

int cmd_solve(long n, const std::string& multiset_file, const std::string& mode,
              const std::string& dump_t, const std::string& dump_s) {
  if (!multiset_file.empty()) {
    Multiset m = load_multiset_file(multiset_file);
    Rational v = general_optimal_value(m, payoff_mode_from_string(mode));
    std::cout << v.str() << " (" << v.decimal(2) << ")\n";
    return 0;
  }
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("solve: --n must be even and >= 2");
  auto tables = build_tables(n / 2);
  if (!dump_t.empty()) {
    std::ofstream out(dump_t);
    tables.dump_t_csv(out);
  }
  if (!dump_s.empty()) {
    std::ofstream out(dump_s);
    tables.dump_s_csv(out);
  }
  const Rational& v = tables.value(0, 0);
  std::cout << v.str() << " (" << v.decimal(2) << ")\n";
  return 0;
}

int cmd_simulate(const SimulateArgs& args) {
  Multiset m;
  if (!args.multiset_file.empty()) {
    m = load_multiset_file(args.multiset_file);
  } else {
    if (args.n < 2 || args.n % 2 != 0)
      throw std::domain_error("simulate: --n must be even and >= 2");
    m = Multiset::balanced_binary(args.n / 2);
  }
  PayoffMode mode = payoff_mode_from_string(args.mode);

  StrategyFactory factory;
  if (args.strategy == "threshold") {
    long t = args.threshold_n > 0 ? approx_threshold(args.threshold_n)
                                  : threshold_value(m.size() / 2);
    factory = [t] { return make_threshold_strategy(t); };
  } else if (args.strategy == "optimal") {
    std::shared_ptr<const StrategyTables> tables =
        std::make_shared<StrategyTables>(build_tables(m.size() / 2));
    factory = [tables] { return make_optimal_strategy(tables); };
  } else if (args.strategy == "middle") {
    factory = [] { return make_middle_strategy(); };
  } else {
    throw std::domain_error("simulate: unknown strategy '" + args.strategy + "'");
  }

  SimReport report = monte_carlo(factory, m, mode, args.reps, args.seed);
  ordered_json j;
  j["strategy"] = report.strategy;
  j["n"] = m.size();
  j["mode"] = to_string(report.mode);
  j["reps"] = report.reps;
  j["seed"] = report.seed;
  j["mean"] = report.mean;
  j["stderr"] = report.stderr_of_mean;
  if (enumeration_feasible(m))
    j["exact"] = exact_expected_payoff(factory, m, mode).str();
  std::cout << j.dump() << "\n";
  return 0;
}

int cmd_table(const std::string& what, long max_n, long max_m, long reach_m) {
  auto row = [](const std::string& param, const Rational& v) {
    std::cout << param << "\t" << v.str() << "\t" << v.decimal(6) << "\n";
  };
  if (what == "w3") {
    std::cout << "n\texact\tdecimal\n";
    for (long n = 2; n <= max_n; n += 2) row(std::to_string(n), w3_exact(n));
  } else if (what == "moser") {
    std::cout << "n\texact\tdecimal\n";
    auto mode = max_n <= 24 ? MoserMode::Exact : MoserMode::Decimal;
    auto table = moser_table(max_n, mode);
    for (long n = 0; n <= max_n; ++n)
      row(std::to_string(n), table.values[static_cast<size_t>(n)]);
  } else if (what == "reach") {
    std::cout << "t\texact\tdecimal\n";
    for (long t = 0; t <= reach_m; ++t)
      row(std::to_string(t), reach_probability(reach_m, t));
  } else if (what == "upper") {
    std::cout << "m\texact\tdecimal\n";
    for (long m = 1; m <= max_m; ++m) row(std::to_string(m), payoff_upper_bound(m));
  } else if (what == "w1") {
    std::cout << "m\texact\tdecimal\n";
    for (long m = 1; m <= max_m; ++m) row(std::to_string(m), w1_exact(m));
  } else {
    throw std::domain_error("table: unknown --what '" + what + "'");
  }
  return 0;
}

int cmd_verify(const std::string& what, bool as_json) {
  std::vector<VerifySuite> suites = run_verify(what);
  bool all_pass = true;
  if (as_json) {
    ordered_json out = ordered_json::array();
    for (const auto& s : suites) {
      ordered_json js;
      js["suite"] = s.name;
      js["pass"] = s.passed();
      js["checks"] = ordered_json::array();
      for (const auto& c : s.checks)
        js["checks"].push_back({{"id", c.id},
                                {"expected", c.expected},
                                {"actual", c.actual},
                                {"pass", c.pass}});
      out.push_back(js);
      all_pass = all_pass && s.passed();
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& s : suites) {
      long passed = 0;
      for (const auto& c : s.checks) {
        if (c.pass) {
          ++passed;
        } else {
          std::cout << "  FAIL " << s.name << "/" << c.id << ": expected "
                    << c.expected << ", got " << c.actual << "\n";
        }
      }
      std::cout << (s.passed() ? "PASS" : "FAIL") << " " << s.name << " ("
                << passed << "/" << s.checks.size() << " checks)\n";
      all_pass = all_pass && s.passed();
    }
  }
  return all_pass ? 0 : 1;
}

int cmd_reduce(const std::string& multiset_file, const std::string& epsilon,
               bool with_f) {
  Multiset m = load_multiset_file(multiset_file);
  ReductionChain chain = reduce_to_binary(m, Rational::parse(epsilon), with_f);
  auto line = [&](const Multiset& ms, const std::string& action,
                  const std::optional<Rational>& f) {
    std::cout << ms.str();
    if (f) std::cout << "  f = " << f->str();
    if (!action.empty()) std::cout << "  [" << action << "]";
    std::cout << "\n";
  };
  line(chain.input, "", chain.input_f);
  for (const auto& step : chain.steps) line(step.multiset, step.action, step.f);
  std::cout << "final mu' = " << chain.final_mu.str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Optimal stopping for zero-sum sequences: exact tables, "
               "simulation, and identity verification"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Optimal game value (exact)");
  long solve_n = 0;
  std::string solve_multiset, solve_mode = "suffix", dump_t, dump_s;
  solve->add_option("--n", solve_n, "Binary game length (even)");
  solve->add_option("--multiset", solve_multiset, "Multiset file (general oracle)");
  solve->add_option("--mode", solve_mode, "suffix|prefix (multiset route)")
      ->check(CLI::IsMember({"suffix", "prefix"}));
  solve->add_option("--dump-t", dump_t, "Write the value matrix T as CSV");
  solve->add_option("--dump-s", dump_s, "Write the stopping matrix S as CSV");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimation");
  SimulateArgs sim;
  simulate->add_option("--strategy", sim.strategy, "threshold|optimal|middle")
      ->required()
      ->check(CLI::IsMember({"threshold", "optimal", "middle"}));
  simulate->add_option("--n", sim.n, "Binary game length (even)");
  simulate->add_option("--multiset", sim.multiset_file, "Multiset file");
  simulate->add_option("--mode", sim.mode, "suffix|prefix")
      ->required()
      ->check(CLI::IsMember({"suffix", "prefix"}));
  simulate->add_option("--reps", sim.reps, "Replications");
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--threshold-n", sim.threshold_n,
                       "Known lower bound N on n (threshold strategy)");

  // table
  auto* table = app.add_subcommand("table", "Exact value tables as TSV");
  std::string table_what;
  long table_max_n = 16, table_max_m = 8, table_reach_m = 4;
  table->add_option("--what", table_what, "w3|moser|reach|upper|w1")
      ->required()
      ->check(CLI::IsMember({"w3", "moser", "reach", "upper", "w1"}));
  table->add_option("--max-n", table_max_n, "Largest n (w3, moser)");
  table->add_option("--max-m", table_max_m, "Largest m (upper, w1)");
  table->add_option("--m", table_reach_m, "Half-length m (reach)");

  // verify
  auto* verify = app.add_subcommand("verify", "Reproduce the published numbers");
  std::string verify_what;
  bool verify_json = false;
  {
    std::vector<std::string> names = verify_suite_names();
    names.push_back("all");
    verify->add_option("--what", verify_what, "Suite name or 'all'")
        ->required()
        ->check(CLI::IsMember(names));
  }
  verify->add_flag("--json", verify_json, "Machine-readable output");

  // reduce
  auto* reduce = app.add_subcommand("reduce", "Pair-averaging reduction chain");
  std::string reduce_multiset, reduce_epsilon = "0";
  bool reduce_with_f = false;
  reduce->add_option("--multiset", reduce_multiset, "Multiset file")->required();
  reduce->add_option("--epsilon", reduce_epsilon, "Spread target (rational)");
  reduce->add_flag("--with-f", reduce_with_f, "Evaluate f at every step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*solve) return cmd_solve(solve_n, solve_multiset, solve_mode, dump_t, dump_s);
    if (*simulate) return cmd_simulate(sim);
    if (*table) return cmd_table(table_what, table_max_n, table_max_m, table_reach_m);
    if (*verify) return cmd_verify(verify_what, verify_json);
    if (*reduce) return cmd_reduce(reduce_multiset, reduce_epsilon, reduce_with_f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
