#pragma once

// Ring of integers of Q(i sqrt(m)) in the integral bases
//   {1, w}, w = (1 + i sqrt(m)) / 2   when m = 3 (mod 4)   (s = 2)
//   {1, i sqrt(m)}                    otherwise            (s = 1)

#include <tuple>
#include <utility>
#include <vector>

#include "thue/forms.hpp"
#include "thue/numeric.hpp"

namespace thue {

class QuadraticField {
 public:
  explicit QuadraticField(Integer m) : m_(std::move(m)) {
    if (m_ < 1) throw Error("m must be a positive integer, got " + m_.get_str());
    if (!is_squarefree(m_)) throw Error("m = " + m_.get_str() + " is not square-free");
    s_ = (m_ % 4 == 3) ? 2 : 1;
    if (s_ == 2) omega_norm_ = (m_ + 1) / 4;
  }

  const Integer& m() const { return m_; }
  int s() const { return s_; }
  /// (1 + m) / 4 = |w|^2 when s = 2; unused otherwise.
  const Integer& omega_norm() const { return omega_norm_; }

  friend bool operator==(const QuadraticField& l, const QuadraticField& r) { return l.m_ == r.m_; }

 private:
  Integer m_;
  int s_ = 1;
  Integer omega_norm_ = 0;
};

/// u1 + u2 * (basis element), see QuadraticField.
struct RingElement {
  Integer u1 = 0;
  Integer u2 = 0;

  bool is_zero() const { return u1 == 0 && u2 == 0; }
  friend bool operator==(const RingElement& l, const RingElement& r) { return l.u1 == r.u1 && l.u2 == r.u2; }
};

inline RingElement ring_add(const RingElement& z, const RingElement& w) { return {z.u1 + w.u1, z.u2 + w.u2}; }

inline RingElement ring_scale(const Integer& c, const RingElement& z) { return {c * z.u1, c * z.u2}; }

inline RingElement ring_mul(const QuadraticField& field, const RingElement& z, const RingElement& w) {
  Integer bd = z.u2 * w.u2;
  if (field.s() == 2) {
    // w^2 = w - (1+m)/4
    return {z.u1 * w.u1 - bd * field.omega_norm(), z.u1 * w.u2 + z.u2 * w.u1 + bd};
  }
  return {z.u1 * w.u1 - field.m() * bd, z.u1 * w.u2 + z.u2 * w.u1};
}

/// |z|^2, always a nonnegative rational integer.
inline Integer norm(const QuadraticField& field, const RingElement& z) {
  if (field.s() == 2) return z.u1 * z.u1 + z.u1 * z.u2 + field.omega_norm() * z.u2 * z.u2;
  return z.u1 * z.u1 + field.m() * z.u2 * z.u2;
}

inline RingElement evaluate_ring(const QuadraticField& field, const BinaryForm& form, const RingElement& x,
                                 const RingElement& y) {
  const unsigned n = form.degree();
  RingElement acc{form.coeff(n), 0};
  RingElement ypow{1, 0};
  for (unsigned k = n; k-- > 0;) {
    ypow = ring_mul(field, ypow, y);
    acc = ring_add(ring_mul(field, acc, x), ring_scale(form.coeff(k), ypow));
  }
  return acc;
}

/// |F(x, y)| <= K decided as norm(F(x, y)) <= K^2.
inline bool satisfies_inequality(const QuadraticField& field, const BinaryForm& form, const RingElement& x,
                                 const RingElement& y, const Rational& K, Integer* norm_out = nullptr) {
  Integer nv = norm(field, evaluate_ring(field, form, x, y));
  if (norm_out) *norm_out = nv;
  return Rational(nv) <= K * K;
}

/// ((s x1 + (s-1) x2, s y1 + (s-1) y2), (x2, y2)): s times the real parts and
/// s / sqrt(m) times the imaginary parts of x and y.
inline std::pair<IntegerPair, IntegerPair> split_coordinates(const QuadraticField& field, const RingElement& x,
                                                             const RingElement& y) {
  const int s = field.s();
  IntegerPair real{s * x.u1 + (s - 1) * x.u2, s * y.u1 + (s - 1) * y.u2};
  IntegerPair imag{x.u2, y.u2};
  return {real, imag};
}

/// Canonical ordering of solution pairs: (norm(y), y1, y2, x1, x2).
inline bool canonical_less(const QuadraticField& field, const RingElement& xa, const RingElement& ya,
                           const RingElement& xb, const RingElement& yb) {
  Integer na = norm(field, ya), nb = norm(field, yb);
  if (na != nb) return na < nb;
  auto key = [](const RingElement& x, const RingElement& y) { return std::tie(y.u1, y.u2, x.u1, x.u2); };
  return key(xa, ya) < key(xb, yb);
}

}  // namespace thue
