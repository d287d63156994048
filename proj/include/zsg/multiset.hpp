#pragma once

#include <string>
#include <vector>

#include "zsg/rational.hpp"

namespace zsg {

/// Which side of the sequence the player collects at the stopping point.
/// Suffix: the unrevealed remainder. Prefix: the revealed part (the dual
/// game). With a zero-sum input the two are negatives of each other.
enum class PayoffMode { Suffix, Prefix };

std::string to_string(PayoffMode mode);
PayoffMode payoff_mode_from_string(const std::string& s);

/// A zero-sum multiset of exact rationals, kept in sorted canonical order.
class Multiset {
 public:
  Multiset() = default;  // empty multiset

  /// Validates the zero-sum invariant exactly; a nonzero residual is
  /// reported as "p/q" in the error message.
  static Multiset from_values(std::vector<Rational> values);

  /// m copies each of -1 and +1.
  static Multiset balanced_binary(long m);

  const std::vector<Rational>& elements() const { return elements_; }
  long size() const { return static_cast<long>(elements_.size()); }
  long n_plus() const { return n_plus_; }
  long n_minus() const { return n_minus_; }
  long n_zero() const { return size() - n_plus_ - n_minus_; }

  /// Average absolute value, sum |a_i| / n.
  const Rational& mu() const { return mu_; }

  bool is_binary_balanced() const;

  /// Scales every element by lambda (lambda > 0 keeps the sign counts).
  Multiset scaled(const Rational& lambda) const;
  Multiset negated() const;

  std::string str() const;

 private:
  std::vector<Rational> elements_;
  long n_plus_ = 0;
  long n_minus_ = 0;
  Rational mu_;
};

/// Parses newline-separated rational/decimal tokens, or a JSON array of
/// such strings/numbers. Parse errors carry the line number.
Multiset load_multiset_text(const std::string& text);
Multiset load_multiset_file(const std::string& path);

}  // namespace zsg
