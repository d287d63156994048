#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace zsg {

using BigInt = mpz_class;
using BigCount = mpz_class;

/// Raised when a size guard refuses a computation (state-space caps,
/// enumeration limits). Distinct from domain errors so callers can tell
/// "won't" from "can't".
struct refusal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; equality is value equality (2/4 == 1/2). Immutable in
/// spirit: every operation returns a fresh value.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(const BigInt& n) : v_(n) {}
  Rational(const BigInt& num, const BigInt& den);

  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  /// Parses "p/q" or a finite decimal string (optional sign). Decimal
  /// parsing is exact: "-2.5" -> -5/2.
  static Rational parse(const std::string& text);

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }

  /// Canonical serialization: "p/q", with "/q" omitted when q == 1.
  std::string str() const;

  /// Fixed-point decimal rendering with round-half-to-even; the fraction
  /// itself is never mutated. digits <= 64.
  std::string decimal(unsigned digits) const;

  double to_double() const { return v_.get_d(); }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  bool is_integer() const { return v_.get_den() == 1; }

  const mpq_class& raw() const { return v_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  mpq_class v_;
};

/// C(n, k) by the multiplicative formula with exact intermediate division;
/// returns 0 when k < 0 or k > n.
BigCount binomial(const BigInt& n, const BigInt& k);
BigCount binomial(unsigned long n, long k);

/// Floor integer square root.
BigInt isqrt(const BigInt& x);

}  // namespace zsg
