#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zsg/combinatorics.hpp"
#include "zsg/engine.hpp"
#include "zsg/reduction.hpp"
#include "zsg/strategies.hpp"
#include "zsg/verify.hpp"

namespace py = pybind11;
using namespace zsg;

namespace {

py::object to_fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.str());
}

Rational from_py(const py::object& obj) {
  return Rational::parse(py::str(obj).cast<std::string>());
}

Multiset multiset_from(const py::sequence& values) {
  std::vector<Rational> vals;
  for (auto item : values) vals.push_back(from_py(py::reinterpret_borrow<py::object>(item)));
  return Multiset::from_values(std::move(vals));
}

StrategyFactory factory_for(const std::string& strategy, const Multiset& m) {
  if (strategy == "threshold") {
    long t = threshold_value(m.size() / 2);
    return [t] { return make_threshold_strategy(t); };
  }
  if (strategy == "optimal") {
    auto tables = std::make_shared<StrategyTables>(build_tables(m.size() / 2));
    return [tables] { return make_optimal_strategy(tables); };
  }
  if (strategy == "middle") {
    return [] { return make_middle_strategy(); };
  }
  throw std::domain_error("unknown strategy '" + strategy + "'");
}

}  // namespace

PYBIND11_MODULE(zsgame, m) {
  m.doc() = "Optimal stopping for zero-sum sequences: exact rational tables, "
            "strategies, simulation, and identity checks";

  m.def("binomial", [](long n, long k) {
    return py::int_(py::str(binomial(BigInt(n), BigInt(k)).get_str()));
  }, py::arg("n"), py::arg("k"), "C(n, k) as a python int");

  m.def("parse_rational",
        [](const std::string& s) { return to_fraction(Rational::parse(s)); },
        py::arg("text"));
  m.def("to_decimal",
        [](const py::object& x, unsigned digits) {
          return from_py(x).decimal(digits);
        },
        py::arg("value"), py::arg("digits"));

  m.def("reach_probability",
        [](long m_, long t) { return to_fraction(reach_probability(m_, t)); },
        py::arg("m"), py::arg("t"));
  m.def("threshold_value", &threshold_value, py::arg("m"));
  m.def("approx_threshold", &approx_threshold, py::arg("N"));
  m.def("w1_exact", [](long m_) { return to_fraction(w1_exact(m_)); }, py::arg("m"));
  m.def("w1_lower_bound", &w1_lower_bound, py::arg("m"));
  m.def("payoff_upper_bound",
        [](long m_) { return to_fraction(payoff_upper_bound(m_)); }, py::arg("m"));
  m.def("w3_exact", [](long n) { return to_fraction(w3_exact(n)); }, py::arg("n"));
  m.def("w3_closed_form",
        [](long m_) { return to_fraction(w3_closed_form(m_)); }, py::arg("m"));
  m.def("moser_table",
        [](long n_max, const std::string& mode) {
          auto table = moser_table(
              n_max, mode == "decimal" ? MoserMode::Decimal : MoserMode::Exact);
          py::list out;
          for (const auto& v : table.values) out.append(to_fraction(v));
          return out;
        },
        py::arg("n_max"), py::arg("mode") = "exact");

  m.def("solve",
        [](long n) {
          if (n < 2 || n % 2 != 0)
            throw std::domain_error("solve: n must be even and >= 2");
          return to_fraction(build_tables(n / 2).value(0, 0));
        },
        py::arg("n"), "Optimal expected payoff of the binary game");
  m.def("build_tables",
        [](long m_) {
          auto tables = build_tables(m_);
          py::list t, s;
          for (long i = 0; i <= m_; ++i) {
            py::list trow, srow;
            for (long j = 0; j <= m_; ++j) {
              trow.append(to_fraction(tables.value(i, j)));
              srow.append(tables.stops(i, j));
            }
            t.append(trow);
            s.append(srow);
          }
          return py::make_tuple(t, s);
        },
        py::arg("m"), "(T, S) as nested lists indexed [minus][plus]");

  m.def("general_optimal_value",
        [](const py::sequence& values, const std::string& mode) {
          return to_fraction(general_optimal_value(
              multiset_from(values), payoff_mode_from_string(mode)));
        },
        py::arg("values"), py::arg("mode") = "suffix");

  m.def("exact_expected_payoff",
        [](const std::string& strategy, const py::sequence& values,
           const std::string& mode) {
          Multiset ms = multiset_from(values);
          return to_fraction(exact_expected_payoff(
              factory_for(strategy, ms), ms, payoff_mode_from_string(mode)));
        },
        py::arg("strategy"), py::arg("values"), py::arg("mode"));

  m.def("simulate",
        [](const std::string& strategy, const py::sequence& values,
           const std::string& mode, long reps, uint64_t seed) {
          Multiset ms = multiset_from(values);
          SimReport r = monte_carlo(factory_for(strategy, ms), ms,
                                    payoff_mode_from_string(mode), reps, seed);
          py::dict out;
          out["strategy"] = r.strategy;
          out["n"] = ms.size();
          out["mode"] = to_string(r.mode);
          out["reps"] = r.reps;
          out["seed"] = r.seed;
          out["mean"] = r.mean;
          out["stderr"] = r.stderr_of_mean;
          if (enumeration_feasible(ms))
            out["exact"] = to_fraction(exact_expected_payoff(
                factory_for(strategy, ms), ms, payoff_mode_from_string(mode)));
          return out;
        },
        py::arg("strategy"), py::arg("values"), py::arg("mode"),
        py::arg("reps") = 10000, py::arg("seed") = 0);

  m.def("f_value",
        [](const py::sequence& values) {
          return to_fraction(f_value(multiset_from(values)));
        },
        py::arg("values"), "Exact stop-in-the-middle expectation (prefix mode)");

  m.def("reduce_to_binary",
        [](const py::sequence& values, const py::object& epsilon, bool with_f) {
          auto chain =
              reduce_to_binary(multiset_from(values), from_py(epsilon), with_f);
          py::list steps;
          auto entry = [&](const Multiset& ms, const std::string& action,
                           const std::optional<Rational>& f) {
            py::dict d;
            py::list els;
            for (const auto& v : ms.elements()) els.append(to_fraction(v));
            d["multiset"] = els;
            d["action"] = action;
            if (f) d["f"] = to_fraction(*f);
            steps.append(d);
          };
          entry(chain.input, "input", chain.input_f);
          for (const auto& s : chain.steps) entry(s.multiset, s.action, s.f);
          py::dict out;
          out["steps"] = steps;
          out["final_mu"] = to_fraction(chain.final_mu);
          return out;
        },
        py::arg("values"), py::arg("epsilon") = 0, py::arg("with_f") = false);

  m.def("verify",
        [](const std::string& what) {
          py::list out;
          for (const auto& suite : run_verify(what)) {
            py::dict d;
            d["suite"] = suite.name;
            d["pass"] = suite.passed();
            py::list checks;
            for (const auto& c : suite.checks) {
              py::dict cd;
              cd["id"] = c.id;
              cd["expected"] = c.expected;
              cd["actual"] = c.actual;
              cd["pass"] = c.pass;
              checks.append(cd);
            }
            d["checks"] = checks;
            out.append(d);
          }
          return out;
        },
        py::arg("what") = "all");
}
