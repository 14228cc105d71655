#pragma once

// Dense univariate polynomials over Q and Sturm-sequence root isolation.

#include <algorithm>
#include <utility>
#include <vector>

#include "thue/numeric.hpp"

namespace thue::poly {

/// Ascending coefficients; the zero polynomial is the empty vector.
using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Rational eval(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

inline int sign_at(const Poly& p, const Rational& x) { return sgn(eval(p, x)); }

inline Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * Rational(static_cast<long>(k)));
  trim(d);
  return d;
}

/// Euclidean division a = q*b + r with deg r < deg b.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {std::move(q), std::move(a)};
}

inline Poly monic(Poly p) {
  trim(p);
  if (p.empty()) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

inline Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(std::move(a));
}

/// Sturm chain p, p', -rem(p, p'), ...; each member scaled by a positive
/// constant so signs are unchanged and coefficients stay small.
inline std::vector<Poly> sturm_sequence(const Poly& p) {
  std::vector<Poly> seq;
  Poly p0 = p;
  trim(p0);
  if (p0.empty()) return seq;
  seq.push_back(p0);
  Poly p1 = derivative(p0);
  while (!p1.empty()) {
    Rational scale = abs(p1.back());
    for (auto& c : p1) c /= scale;
    seq.push_back(p1);
    Poly r = divmod(seq[seq.size() - 2], seq.back()).second;
    for (auto& c : r) c = -c;
    p1 = std::move(r);
  }
  return seq;
}

inline int sign_variations(const std::vector<Poly>& seq, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Number of distinct real roots in the half-open interval (lo, hi].
inline int count_roots(const std::vector<Poly>& seq, const Rational& lo, const Rational& hi) {
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

/// Power of two strictly exceeding the modulus of every complex root.
inline Rational cauchy_bound(const Poly& p) {
  Rational ratio = 0;
  for (std::size_t k = 0; k + 1 < p.size(); ++k) ratio = std::max<Rational>(ratio, abs(p[k] / p.back()));
  Rational bound = 1;
  while (bound <= ratio + 1) bound *= 2;
  return bound;
}

struct Interval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

namespace detail {

// Walks the dyadic bisection tree below (lo, hi], which holds exactly one
// root. The walk is deterministic, so a finer `width` always yields a
// sub-interval of the coarser answer.
inline Interval refine_single(const std::vector<Poly>& seq, Rational lo, Rational hi,
                              const Rational& width) {
  const Poly& p = seq.front();
  for (;;) {
    if (sgn(eval(p, hi)) == 0) return {hi, hi};
    if (hi - lo <= width && sgn(eval(p, lo)) != 0) return {lo, hi};
    Rational mid = (lo + hi) / 2;
    if (sgn(eval(p, mid)) == 0) return {mid, mid};
    if (count_roots(seq, lo, mid) == 1)
      hi = mid;
    else
      lo = mid;
  }
}

inline void isolate(const std::vector<Poly>& seq, const Rational& lo, const Rational& hi, int count,
                    const Rational& width, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back(refine_single(seq, lo, hi, width));
    return;
  }
  Rational mid = (lo + hi) / 2;
  int left = count_roots(seq, lo, mid);
  isolate(seq, lo, mid, left, width, out);
  isolate(seq, mid, hi, count - left, width, out);
}

}  // namespace detail

/// Isolating intervals, in increasing order, for the real roots of a
/// squarefree polynomial. Non-degenerate intervals have non-root endpoints
/// and width <= `width`; degenerate ones are exact dyadic roots.
inline std::vector<Interval> isolate_real_roots(const Poly& p, const Rational& width) {
  if (sgn(width) <= 0) throw Error("isolation width must be positive");
  auto seq = sturm_sequence(p);
  if (seq.empty() || degree(seq.front()) < 1) return {};
  Rational bound = cauchy_bound(seq.front());
  std::vector<Interval> out;
  detail::isolate(seq, -bound, bound, count_roots(seq, -bound, bound), width, out);
  return out;
}

}  // namespace thue::poly
