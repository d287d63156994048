#include "zsg/rational.hpp"

#include <cctype>

namespace zsg {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  size_t i = 0;
  if (allow_sign && (s[0] == '+' || s[0] == '-')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  std::string s = text;
  // trim surrounding whitespace
  size_t b = s.find_first_not_of(" \t\r\n");
  size_t e = s.find_last_not_of(" \t\r\n");
  if (b == std::string::npos)
    throw std::invalid_argument("parse error: empty rational token");
  s = s.substr(b, e - b + 1);

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string p = s.substr(0, slash);
    std::string q = s.substr(slash + 1);
    if (!is_integer_token(p, true))
      throw std::invalid_argument("parse error: bad numerator '" + p + "'");
    if (!is_integer_token(q, false))
      throw std::invalid_argument("parse error: bad denominator '" + q + "'");
    BigInt den(q);
    if (den == 0) throw std::domain_error("zero denominator in '" + s + "'");
    return Rational(BigInt(p), den);
  }

  auto dot = s.find('.');
  if (dot == std::string::npos) {
    if (!is_integer_token(s, true))
      throw std::invalid_argument("parse error: bad integer '" + s + "'");
    return Rational(BigInt(s), BigInt(1));
  }

  // finite decimal: sign, integer part, '.', fraction part
  bool neg = false;
  std::string body = s;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
    dot -= 1;
  }
  std::string ip = body.substr(0, dot);
  std::string fp = body.substr(dot + 1);
  if (ip.empty() && fp.empty())
    throw std::invalid_argument("parse error: bad decimal '" + s + "'");
  if (!ip.empty() && !is_integer_token(ip, false))
    throw std::invalid_argument("parse error: bad decimal '" + s + "'");
  if (!fp.empty() && !is_integer_token(fp, false))
    throw std::invalid_argument("parse error: bad decimal '" + s + "'");
  BigInt num = ip.empty() ? BigInt(0) : BigInt(ip);
  BigInt den(1);
  for (char c : fp) {
    num = num * 10 + (c - '0');
    den *= 10;
  }
  if (neg) num = -num;
  return Rational(num, den);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal(unsigned digits) const {
  if (digits > 64) throw std::domain_error("decimal: digits > 64");
  BigInt p = ::abs(v_.get_num());
  const BigInt& q = v_.get_den();
  BigInt scale(1);
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  p *= scale;

  BigInt quo, rem;
  mpz_fdiv_qr(quo.get_mpz_t(), rem.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  BigInt twice = 2 * rem;
  if (twice > q || (twice == q && mpz_odd_p(quo.get_mpz_t())))
    quo += 1;

  std::string ds = quo.get_str();
  if (ds.size() <= digits) ds.insert(0, digits + 1 - ds.size(), '0');
  std::string out;
  if (sgn(v_) < 0 && quo != 0) out += '-';
  out += ds.substr(0, ds.size() - digits);
  if (digits > 0) {
    out += '.';
    out += ds.substr(ds.size() - digits);
  }
  return out;
}

BigCount binomial(const BigInt& n, const BigInt& k) {
  if (sgn(n) < 0) throw std::domain_error("binomial: n < 0");
  if (sgn(k) < 0 || k > n) return BigCount(0);
  BigInt kk = k;
  if (2 * kk > n) kk = n - kk;  // symmetry keeps the loop short
  BigCount result(1);
  // result stays integral at each step: after i factors it equals C(n', i)
  // for a growing prefix, so the division is always exact.
  for (BigInt i = 1; i <= kk; ++i) {
    result *= n - kk + i;
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), i.get_mpz_t());
  }
  return result;
}

BigCount binomial(unsigned long n, long k) {
  return binomial(BigInt(static_cast<unsigned long>(n)), BigInt(k));
}

BigInt isqrt(const BigInt& x) {
  if (sgn(x) < 0) throw std::domain_error("isqrt: negative argument");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

}  // namespace zsg
