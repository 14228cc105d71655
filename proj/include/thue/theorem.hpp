#pragma once

// Executable conclusions for solutions (x, y) of |F(x, y)| <= K over Z_M.
// Every comparison is raised to integer powers first, so sqrt(m) and n-th
// roots never enter a pass/fail decision.

#include <algorithm>
#include <optional>
#include <vector>

#include "thue/forms.hpp"
#include "thue/numeric.hpp"
#include "thue/quadfield.hpp"
#include "thue/rootbounds.hpp"

namespace thue {

struct ValueCheck {
  bool pass = false;
  Integer value;  ///< F evaluated at the relevant integer pair

  friend bool operator==(const ValueCheck&, const ValueCheck&) = default;
};

struct Implication {
  bool applicable = false;
  bool holds = false;

  bool violated() const { return applicable && !holds; }

  friend bool operator==(const Implication&, const Implication&) = default;
};

struct TheoremReport {
  ValueCheck ineq_a_real;
  ValueCheck ineq_a_imag;
  bool ineq_aa = false;
  Implication x12;
  Implication I1;
  Implication I2;

  bool consistent() const {
    return ineq_a_real.pass && ineq_a_imag.pass && ineq_aa && !x12.violated() && !I1.violated() && !I2.violated();
  }

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// |F(real pair)| <= s^n K and |F(x2, y2)| <= s^n K / sqrt(m)^n.
inline std::pair<ValueCheck, ValueCheck> check_a(const QuadraticField& field, const BinaryForm& form,
                                                 const RingElement& x, const RingElement& y, const Rational& K) {
  const unsigned n = form.degree();
  auto [real, imag] = split_coordinates(field, x, y);
  Integer fr = evaluate_int(form, real);
  Integer fi = evaluate_int(form, imag);
  Rational bound_sq = Rational(ipow(field.s(), 2 * n)) * K * K;
  ValueCheck r{Rational(fr * fr) <= bound_sq, fr};
  ValueCheck i{Rational(fi * fi * ipow(field.m(), n)) <= bound_sq, fi};
  return {r, i};
}

/// |F(real pair)| |F(x2, y2)| <= s^{2n} K^2 / (2^n sqrt(m)^n), squared.
inline bool check_aa(const QuadraticField& field, const BinaryForm& form, const RingElement& x, const RingElement& y,
                     const Rational& K) {
  const unsigned n = form.degree();
  auto [real, imag] = split_coordinates(field, x, y);
  Integer prod = evaluate_int(form, real) * evaluate_int(form, imag);
  Integer lhs = prod * prod * ipow(2, 2 * n) * ipow(field.m(), n);
  Rational K2 = K * K;
  return Rational(lhs) <= Rational(ipow(field.s(), 4 * n)) * K2 * K2;
}

namespace detail {
// |y| > T with T an upper enclosure: only asserted when norm(y) clears T^2.
inline bool exceeds(const QuadraticField& field, const RingElement& y, const Rational& threshold_upper) {
  return Rational(norm(field, y)) > threshold_upper * threshold_upper;
}
}  // namespace detail

/// If |y| > T_x12 then x2 y1 = x1 y2.
inline Implication check_x12(const QuadraticField& field, const Thresholds& t, const RingElement& x,
                             const RingElement& y) {
  Implication r;
  r.applicable = detail::exceeds(field, y, t.x12);
  r.holds = x.u2 * y.u1 == x.u1 * y.u2;
  return r;
}

/// If |y| > T_I1 and s y1 + (s-1) y2 = 0 then s x1 + (s-1) x2 = 0.
inline Implication check_I1(const QuadraticField& field, const Thresholds& t, const RingElement& x,
                            const RingElement& y) {
  auto [real, imag] = split_coordinates(field, x, y);
  Implication r;
  r.applicable = detail::exceeds(field, y, t.I1) && real.b == 0;
  r.holds = real.a == 0;
  return r;
}

/// If |y| > T_I2 and y2 = 0 then x2 = 0.
inline Implication check_I2(const QuadraticField& field, const Thresholds& t, const RingElement& x,
                            const RingElement& y) {
  Implication r;
  r.applicable = detail::exceeds(field, y, t.I2) && y.u2 == 0;
  r.holds = x.u2 == 0;
  return r;
}

inline TheoremReport theorem_report(const QuadraticField& field, const BinaryForm& form, const Thresholds& t,
                                    const RingElement& x, const RingElement& y, const Rational& K) {
  TheoremReport rep;
  std::tie(rep.ineq_a_real, rep.ineq_a_imag) = check_a(field, form, x, y, K);
  rep.ineq_aa = check_aa(field, form, x, y, K);
  rep.x12 = check_x12(field, t, x, y);
  rep.I1 = check_I1(field, t, x, y);
  rep.I2 = check_I2(field, t, x, y);
  return rep;
}

// ---------------------------------------------------------------------------
// Linear factors beta_j = x - alpha_j y.

struct RationalRange {
  Rational lo, hi;

  static RationalRange hull(const Rational& a, const Rational& b) { return a <= b ? RationalRange{a, b} : RationalRange{b, a}; }
  RationalRange square() const {
    if (sgn(lo) <= 0 && sgn(hi) >= 0) return {0, std::max<Rational>(lo * lo, hi * hi)};
    return hull(lo * lo, hi * hi);
  }
};

struct ComplexEnclosure {
  RationalRange re;
  RationalRange im;
  RationalRange abs2;  ///< |beta|^2
};

struct LinearFormProfile {
  std::vector<ComplexEnclosure> betas;
  std::size_t i0 = 0;
  /// Every other |beta_j|^2 lower bound is at least |beta_i0|^2 upper bound.
  bool i0_certified = false;
  /// |y| >= G was certified, so |beta_i0| <= C / |y|^(n-1) applies to solutions.
  bool gate = false;
  /// C_upper^2 / norm(y)^(n-1), present when `gate`.
  std::optional<Rational> beta_i0_bound_sq;
};

/// Rational enclosures of sqrt(m) on a 2^-bits grid.
inline RationalRange sqrt_enclosure(const Integer& m, unsigned bits) {
  return {root_lower(Rational(m), 2, bits), root_upper(Rational(m), 2, bits)};
}

inline LinearFormProfile beta_profile(const RootData& roots, const QuadraticField& field, const TheoremConstants& tc,
                                      const RingElement& x, const RingElement& y,
                                      unsigned bits = kDefaultPrecisionBits) {
  if (y.is_zero()) throw Error("beta_profile requires y != 0");
  auto [real, imag] = split_coordinates(field, x, y);
  const Rational s(field.s());
  const RationalRange root_m = sqrt_enclosure(field.m(), bits);
  LinearFormProfile prof;
  for (const auto& iv : roots.intervals) {
    // Both parts are affine in alpha, so the extremes sit at the interval ends.
    auto affine = [&](const IntegerPair& p) {
      Rational a(p.a), b(p.b);
      return RationalRange::hull(a - iv.lo * b, a - iv.hi * b);
    };
    RationalRange re = affine(real);
    re.lo /= s;
    re.hi /= s;
    RationalRange im0 = affine(imag);
    Rational c[] = {im0.lo * root_m.lo, im0.lo * root_m.hi, im0.hi * root_m.lo, im0.hi * root_m.hi};
    RationalRange im{*std::min_element(std::begin(c), std::end(c)) / s, *std::max_element(std::begin(c), std::end(c)) / s};
    RationalRange r2 = re.square(), i2 = im.square();
    prof.betas.push_back({re, im, {r2.lo + i2.lo, r2.hi + i2.hi}});
  }
  for (std::size_t j = 1; j < prof.betas.size(); ++j)
    if (prof.betas[j].abs2.hi < prof.betas[prof.i0].abs2.hi) prof.i0 = j;
  prof.i0_certified = true;
  for (std::size_t j = 0; j < prof.betas.size(); ++j)
    if (j != prof.i0 && prof.betas[j].abs2.lo < prof.betas[prof.i0].abs2.hi) prof.i0_certified = false;

  Integer ny = norm(field, y);
  prof.gate = Rational(ny) >= tc.G_upper * tc.G_upper;
  if (prof.gate) prof.beta_i0_bound_sq = tc.C_upper * tc.C_upper / Rational(ipow(ny, tc.degree - 1));
  return prof;
}

}  // namespace thue
