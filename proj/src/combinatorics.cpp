#include "zsg/combinatorics.hpp"

#include <cmath>
#include <limits>

namespace zsg {

Rational reach_probability(const ReachQuery& q) {
  if (q.m < 1) throw std::domain_error("reach_probability: m < 1");
  if (q.t < 0) throw std::domain_error("reach_probability: t < 0");
  if (q.t == 0) return Rational(1);
  if (q.t > q.m) return Rational(0);
  BigCount hits = binomial(2 * q.m, q.m - q.t);
  BigCount total = binomial(2 * q.m, q.m);
  return Rational(hits, total);
}

long threshold_value(long m) {
  if (m < 1) throw std::domain_error("threshold_value: m < 1");
  // floor(sqrt((m+1)/2)) == floor(sqrt(floor((m+1)/2)))
  return isqrt(BigInt((m + 1) / 2)).get_si();
}

Rational w1_exact(long m) {
  long t = threshold_value(m);
  return Rational(t) * reach_probability(m, t);
}

double w1_lower_bound(long m) {
  long t = threshold_value(m);
  double x = static_cast<double>(t) *
             std::exp(-2.0 * static_cast<double>(t) * static_cast<double>(t) /
                      (static_cast<double>(m) + 1.0));
  for (int i = 0; i < 4; ++i) x = std::nextafter(x, 0.0);
  return x;
}

Rational payoff_upper_bound(long m) {
  if (m < 1) throw std::domain_error("payoff_upper_bound: m < 1");
  BigCount sum(0);
  for (long t = 1; t <= m; ++t) sum += binomial(2 * m, m - t);
  return Rational(sum, binomial(2 * m, m));
}

Rational w3_closed_form(long m) {
  if (m < 1) throw std::domain_error("w3_closed_form: m < 1");
  BigCount c = binomial(2 * m - 1, m - 1);
  return Rational(2 * m * c * c, binomial(4 * m, 2 * m));
}

Rational w3_exact(long n) {
  if (n < 2 || n % 2 != 0)
    throw std::domain_error("w3_exact: n must be even and >= 2");
  long h = n / 2;
  BigCount num(0);
  for (long k = h / 2 + 1; k <= h; ++k) {
    // first half holds k of the +1's and h-k of the -1's
    num += BigInt(2 * k - h) * binomial(h, k) * binomial(h, h - k);
  }
  return Rational(num, binomial(n, h));
}

std::pair<Rational, Rational> lemma2_sides(long m) {
  if (m < 1) throw std::domain_error("lemma2_sides: m < 1");
  BigInt lhs(0);
  for (long k = 1; k <= m; ++k)
    lhs += BigInt(2 * k) * binomial(2 * m, m - k) * binomial(2 * m, m + k);
  BigCount c = binomial(2 * m - 1, m - 1);
  BigInt rhs = 2 * m * c * c;
  return {Rational(lhs), Rational(rhs)};
}

std::pair<BigCount, BigCount> vandermonde_check(long s, long t, long r) {
  if (s < 0 || t < 0 || r < 0)
    throw std::domain_error("vandermonde_check: negative argument");
  BigCount lhs(0);
  for (long i = 0; i <= r; ++i) lhs += binomial(s, i) * binomial(t, r - i);
  return {lhs, binomial(s + t, r)};
}

namespace {

// round half-even to denominator 10^30
Rational round_to_fixed(const Rational& x) {
  static const BigInt kScale = [] {
    BigInt s(1);
    for (int i = 0; i < 30; ++i) s *= 10;
    return s;
  }();
  BigInt p = x.numerator() * kScale;
  BigInt q = x.denominator();
  BigInt quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  BigInt twice = 2 * rem;
  if (twice > q || (twice == q && mpz_odd_p(quo.get_mpz_t()))) quo += 1;
  return Rational(quo, kScale);
}

}  // namespace

MoserTable moser_table(long n_max, MoserMode mode) {
  if (n_max < 0) throw std::domain_error("moser_table: n_max < 0");
  if (n_max > 512)
    throw refusal_error("moser_table: n_max > 512");
  if (mode == MoserMode::Exact && n_max > 24)
    throw refusal_error(
        "moser_table: exact denominators have 2^n bits; use decimal mode "
        "above n_max = 24");
  MoserTable table;
  table.values.reserve(static_cast<size_t>(n_max) + 1);
  Rational e(0);
  table.values.push_back(e);
  const Rational half(BigInt(1), BigInt(2));
  for (long i = 1; i <= n_max; ++i) {
    e = half * (Rational(1) + e * e);
    if (mode == MoserMode::Decimal) e = round_to_fixed(e);
    table.values.push_back(e);
  }
  return table;
}

}  // namespace zsg
