#include "zsg/reduction.hpp"

#include <algorithm>

namespace zsg {

namespace {

Rational positive_part(const Rational& x) {
  return x > Rational(0) ? x : Rational(0);
}

// Expected g(first-half sum) over uniform n/2-subsets of the element
// positions.
Rational middle_expectation(const std::vector<Rational>& els) {
  long n = static_cast<long>(els.size());
  long h = n / 2;
  std::vector<long> idx(static_cast<size_t>(h));
  for (long i = 0; i < h; ++i) idx[static_cast<size_t>(i)] = i;
  Rational sum(0);
  BigCount count(0);
  while (true) {
    Rational half(0);
    for (long i : idx) half += els[static_cast<size_t>(i)];
    sum += positive_part(half);
    count += 1;
    // next combination in lexicographic order
    long pos = h - 1;
    while (pos >= 0 && idx[static_cast<size_t>(pos)] == n - h + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<size_t>(pos)];
    for (long i = pos + 1; i < h; ++i)
      idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
  return sum / Rational(BigInt(count));
}

}  // namespace

Rational f_value(const Multiset& m) {
  if (m.size() < 2 || m.size() % 2 != 0)
    throw std::domain_error("f_value: n must be even and >= 2");
  if (m.size() > 20) throw refusal_error("f_value: n > 20");
  return middle_expectation(m.elements());
}

Multiset average_pair(const Multiset& m, const Rational& a, const Rational& b) {
  if (a == b) throw std::domain_error("average_pair: elements must be distinct");
  if (a > b) throw std::domain_error("average_pair: need a < b");
  std::vector<Rational> els = m.elements();
  auto take = [&](const Rational& v) {
    auto it = std::find(els.begin(), els.end(), v);
    if (it == els.end())
      throw std::domain_error("average_pair: " + v.str() + " not in multiset");
    els.erase(it);
  };
  take(a);
  take(b);
  Rational avg = (a + b) / Rational(2);
  els.push_back(avg);
  els.push_back(avg);
  return Multiset::from_values(std::move(els));
}

std::pair<Rational, Rational> lemma3_check(const std::vector<Rational>& m_prime,
                                           const Rational& a,
                                           const Rational& b) {
  if (a >= b) throw std::domain_error("lemma3_check: need a < b");
  if ((m_prime.size() + 2) % 2 != 0 || m_prime.size() + 2 > 12)
    throw refusal_error("lemma3_check: combined size must be even and <= 12");
  Rational avg = (a + b) / Rational(2);
  std::vector<Rational> with_pair = m_prime;
  with_pair.push_back(a);
  with_pair.push_back(b);
  std::vector<Rational> with_avg = m_prime;
  with_avg.push_back(avg);
  with_avg.push_back(avg);
  std::sort(with_pair.begin(), with_pair.end());
  std::sort(with_avg.begin(), with_avg.end());
  return {middle_expectation(with_pair), middle_expectation(with_avg)};
}

std::pair<Rational, Rational> midpoint_inequality(const Rational& x,
                                                  const Rational& a,
                                                  const Rational& b) {
  if (a >= b) throw std::domain_error("midpoint_inequality: need a < b");
  Rational half(BigInt(1), BigInt(2));
  Rational lhs = half * positive_part(x + a) + half * positive_part(x + b);
  Rational rhs = positive_part(x + (a + b) / Rational(2));
  return {lhs, rhs};
}

namespace {

std::optional<Rational> maybe_f(const Multiset& m, bool with_f) {
  if (!with_f) return std::nullopt;
  return f_value(m);
}

}  // namespace

ReductionChain balance_signs(const Multiset& m, bool with_f) {
  if (m.size() % 2 != 0)
    throw std::domain_error("balance_signs: n must be even");
  if (m.n_zero() > 0)
    throw refusal_error(
        "balance_signs: zero entries present; remove them in pairs or "
        "perturb first");
  ReductionChain chain;
  chain.input = m;
  chain.input_f = maybe_f(m, with_f);
  Multiset cur = m;
  while (cur.n_plus() != cur.n_minus()) {
    // Pick the pair whose midpoint lands on the minority side: with positives
    // in excess, the most negative and the least positive (every positive
    // below the largest magnitude, so the midpoint is strictly negative);
    // with negatives in excess, the mirror image.
    const auto& els = cur.elements();
    Rational a, b;
    if (cur.n_plus() > cur.n_minus()) {
      a = els.front();
      for (const auto& v : els)
        if (v.sign() > 0) {
          b = v;
          break;
        }
    } else {
      b = els.back();
      for (auto it = els.rbegin(); it != els.rend(); ++it)
        if (it->sign() < 0) {
          a = *it;
          break;
        }
    }
    Multiset next = average_pair(cur, a, b);
    ReductionStep step;
    step.action = "average " + a.str() + " with " + b.str();
    step.multiset = next;
    step.f = maybe_f(next, with_f);
    chain.steps.push_back(std::move(step));
    cur = next;
  }
  chain.final_mu = cur.mu();
  if (!(chain.final_mu > m.mu() / Rational(2)))
    throw std::logic_error("balance_signs: final mu' <= mu/2");
  return chain;
}

ReductionChain reduce_to_binary(const Multiset& m, const Rational& epsilon,
                                bool with_f) {
  if (epsilon < Rational(0))
    throw std::domain_error("reduce_to_binary: epsilon < 0");
  ReductionChain chain;
  if (m.n_plus() != m.n_minus()) {
    chain = balance_signs(m, with_f);
  } else {
    chain.input = m;
    chain.input_f = maybe_f(m, with_f);
  }
  Multiset cur = chain.final_multiset();

  const long kStepCap = 10000;
  long steps_taken = 0;
  for (int sign : {-1, +1}) {
    while (true) {
      Rational lo, hi;
      bool found = false;
      for (const auto& v : cur.elements()) {
        if (v.sign() != sign) continue;
        if (!found) {
          lo = hi = v;
          found = true;
        } else {
          if (v < lo) lo = v;
          if (v > hi) hi = v;
        }
      }
      if (!found || hi - lo <= epsilon) break;
      if (++steps_taken > kStepCap)
        throw refusal_error(
            "reduce_to_binary: step cap reached with residual spread " +
            (hi - lo).str());
      Multiset next = average_pair(cur, lo, hi);
      ReductionStep step;
      step.action = "average " + lo.str() + " with " + hi.str();
      step.multiset = next;
      step.f = maybe_f(next, with_f);
      chain.steps.push_back(std::move(step));
      cur = next;
    }
  }
  chain.final_mu = cur.mu();
  return chain;
}

std::pair<Rational, Rational> scaling_check(const Multiset& m,
                                            const Rational& lambda) {
  if (lambda <= Rational(0))
    throw std::domain_error("scaling_check: lambda must be positive");
  return {f_value(m.scaled(lambda)), lambda * f_value(m)};
}

}  // namespace zsg
