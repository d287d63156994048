#include "zsg/multiset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace zsg {

std::string to_string(PayoffMode mode) {
  return mode == PayoffMode::Suffix ? "suffix" : "prefix";
}

PayoffMode payoff_mode_from_string(const std::string& s) {
  if (s == "suffix") return PayoffMode::Suffix;
  if (s == "prefix") return PayoffMode::Prefix;
  throw std::invalid_argument("unknown payoff mode '" + s + "'");
}

Multiset Multiset::from_values(std::vector<Rational> values) {
  Rational sum(0);
  Rational abs_sum(0);
  long plus = 0, minus = 0;
  for (const auto& v : values) {
    sum += v;
    abs_sum += v.abs();
    if (v.sign() > 0) ++plus;
    if (v.sign() < 0) ++minus;
  }
  if (sum != Rational(0))
    throw std::domain_error("multiset is not zero-sum: residual " + sum.str());
  std::sort(values.begin(), values.end());
  Multiset m;
  m.elements_ = std::move(values);
  m.n_plus_ = plus;
  m.n_minus_ = minus;
  m.mu_ = m.elements_.empty()
              ? Rational(0)
              : abs_sum / Rational(static_cast<long>(m.elements_.size()));
  return m;
}

Multiset Multiset::balanced_binary(long m) {
  std::vector<Rational> vals;
  vals.reserve(static_cast<size_t>(2 * m));
  for (long i = 0; i < m; ++i) vals.push_back(Rational(-1));
  for (long i = 0; i < m; ++i) vals.push_back(Rational(1));
  return from_values(std::move(vals));
}

bool Multiset::is_binary_balanced() const {
  if (size() == 0 || size() % 2 != 0) return false;
  for (const auto& v : elements_)
    if (v != Rational(1) && v != Rational(-1)) return false;
  return n_plus_ == n_minus_;
}

Multiset Multiset::scaled(const Rational& lambda) const {
  std::vector<Rational> vals;
  vals.reserve(elements_.size());
  for (const auto& v : elements_) vals.push_back(v * lambda);
  return from_values(std::move(vals));
}

Multiset Multiset::negated() const { return scaled(Rational(-1)); }

std::string Multiset::str() const {
  std::string out = "{";
  for (size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ", ";
    out += elements_[i].str();
  }
  out += "}";
  return out;
}

Multiset load_multiset_text(const std::string& text) {
  std::vector<Rational> values;
  // JSON array form
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("parse error: ") + e.what());
    }
    if (!j.is_array())
      throw std::invalid_argument("parse error: expected a JSON array");
    for (const auto& item : j) {
      if (item.is_string())
        values.push_back(Rational::parse(item.get<std::string>()));
      else if (item.is_number_integer())
        values.push_back(Rational(BigInt(std::to_string(item.get<long long>()))));
      else if (item.is_number())
        values.push_back(Rational::parse(item.dump()));
      else
        throw std::invalid_argument("parse error: non-numeric JSON element " +
                                    item.dump());
    }
    return Multiset::from_values(std::move(values));
  }

  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '#') continue;
    try {
      values.push_back(Rational::parse(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return Multiset::from_values(std::move(values));
}

Multiset load_multiset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open multiset file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_multiset_text(ss.str());
}

}  // namespace zsg
