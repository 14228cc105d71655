#pragma once

// Certified enclosures of the root-separation quantities
//   A = min_{i != j} |a_i - a_j|,   B = min_i prod_{j != i} |a_j - a_i|
// and of the derived constants C = K / ((1-eps)^(n-1) B), G = K^(1/n) / (eps A).

#include <algorithm>
#include <optional>
#include <vector>

#include "thue/forms.hpp"
#include "thue/numeric.hpp"
#include "thue/poly.hpp"
#include "thue/quadfield.hpp"

namespace thue {

inline constexpr unsigned kDefaultPrecisionBits = 64;
inline constexpr unsigned kMaxPrecisionBits = 1024;

struct RootData {
  std::vector<poly::Interval> intervals;
  unsigned bits = 0;  ///< working precision; interval widths are <= 2^-bits
  Rational A_lower, A_upper;
  Rational B_lower, B_upper;

  unsigned degree() const { return static_cast<unsigned>(intervals.size()); }
};

namespace detail {

inline Rational gap_lower(const poly::Interval& left, const poly::Interval& right) { return right.lo - left.hi; }
inline Rational gap_upper(const poly::Interval& left, const poly::Interval& right) { return right.hi - left.lo; }

inline void fill_separation(RootData& rd) {
  const auto& iv = rd.intervals;
  const std::size_t n = iv.size();
  bool first = true;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Rational lo = gap_lower(iv[i], iv[i + 1]);
    Rational hi = gap_upper(iv[i], iv[i + 1]);
    if (first || lo < rd.A_lower) rd.A_lower = lo;
    if (first || hi < rd.A_upper) rd.A_upper = hi;
    first = false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    Rational plo = 1, phi = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const auto& l = iv[std::min(i, j)];
      const auto& r = iv[std::max(i, j)];
      plo *= gap_lower(l, r);
      phi *= gap_upper(l, r);
    }
    if (i == 0 || plo < rd.B_lower) rd.B_lower = plo;
    if (i == 0 || phi < rd.B_upper) rd.B_upper = phi;
  }
}

inline bool strictly_separated(const std::vector<poly::Interval>& iv) {
  for (std::size_t i = 0; i + 1 < iv.size(); ++i)
    if (!(iv[i].hi < iv[i + 1].lo)) return false;
  return true;
}

}  // namespace detail

/// Sturm-certified isolating intervals of width <= `width` for the n real
/// roots of f, together with A and B enclosures. Intervals are refined past
/// `width` if needed until neighbours are strictly separated.
inline RootData isolate_roots(const BinaryForm& form, const Rational& width) {
  require_admissible(form);
  if (sgn(width) <= 0) throw Error("isolation width must be positive");
  poly::Poly f = form.univariate();
  Rational w = width;
  RootData rd;
  for (;;) {
    rd.intervals = poly::isolate_real_roots(f, w);
    if (detail::strictly_separated(rd.intervals)) break;
    w /= 2;
  }
  if (rd.intervals.size() != form.degree()) throw Error("root isolation lost a root");
  // Smallest b with 2^-b <= width.
  rd.bits = 0;
  while (dyadic(-static_cast<long>(rd.bits)) > width) ++rd.bits;
  detail::fill_separation(rd);
  return rd;
}

inline RootData isolate_roots_bits(const BinaryForm& form, unsigned bits) {
  return isolate_roots(form, dyadic(-static_cast<long>(bits)));
}

struct TheoremConstants {
  Rational K;
  Rational epsilon;
  unsigned degree = 0;
  unsigned bits = 0;
  Rational C_lower, C_upper;
  Rational G_lower, G_upper;
  Rational K_root_upper;  ///< upper bound on K^(1/n)
};

/// Upper bounds of the three gating radii of the divisibility conclusions.
struct Thresholds {
  Rational x12;  ///< max{G, (sC/sqrt m)^(1/(n-2))}
  Rational I1;   ///< max{G, (sC)^(1/(n-1))}
  Rational I2;   ///< max{G, (sC/sqrt m)^(1/(n-1))}
};

inline void check_parameters(const Rational& K, const Rational& epsilon) {
  if (K < 1) throw Error("K must be at least 1, got " + K.get_str());
  if (sgn(epsilon) <= 0 || epsilon >= 1) throw Error("epsilon must lie in (0, 1), got " + epsilon.get_str());
}

inline TheoremConstants constants(const RootData& roots, const Rational& K, const Rational& epsilon) {
  check_parameters(K, epsilon);
  if (sgn(roots.A_lower) <= 0 || sgn(roots.B_lower) <= 0) throw Error("root enclosures are not separated");
  const unsigned n = roots.degree();
  const unsigned bits = std::max(roots.bits, kDefaultPrecisionBits);
  TheoremConstants tc;
  tc.K = K;
  tc.epsilon = epsilon;
  tc.degree = n;
  tc.bits = roots.bits;
  Rational damp = rpow(1 - epsilon, n - 1);
  tc.C_upper = K / (damp * roots.B_lower);
  tc.C_lower = K / (damp * roots.B_upper);
  tc.K_root_upper = root_upper(K, n, bits);
  tc.G_upper = tc.K_root_upper / (epsilon * roots.A_lower);
  tc.G_lower = root_lower(K, n, bits) / (epsilon * roots.A_upper);
  return tc;
}

inline Thresholds thresholds(const TheoremConstants& tc, const QuadraticField& field) {
  const unsigned n = tc.degree;
  const unsigned bits = std::max(tc.bits, kDefaultPrecisionBits);
  Rational sC = field.s() * tc.C_upper;
  // (sC / sqrt m)^(1/k) = ((sC)^2 / m)^(1/(2k)) keeps sqrt(m) out of the pipeline.
  Rational sC_sq_over_m = sC * sC / Rational(field.m());
  Thresholds t;
  t.x12 = std::max(tc.G_upper, root_upper(sC_sq_over_m, 2 * (n - 2), bits));
  t.I1 = std::max(tc.G_upper, root_upper(sC, n - 1, bits));
  t.I2 = std::max(tc.G_upper, root_upper(sC_sq_over_m, 2 * (n - 1), bits));
  return t;
}

struct CertifiedConstants {
  RootData roots;
  TheoremConstants constants;
  Thresholds thresholds;
};

/// Doubles the working precision from `start_bits` until floor(T^2) of every
/// threshold is unchanged between consecutive rounds. Applicability tests
/// compare T^2 against integer norms, so that floor is all that matters.
inline CertifiedConstants certified_constants(const BinaryForm& form, const QuadraticField& field, const Rational& K,
                                              const Rational& epsilon, unsigned start_bits = kDefaultPrecisionBits) {
  check_parameters(K, epsilon);
  auto round = [&](unsigned bits) {
    CertifiedConstants cc;
    cc.roots = isolate_roots_bits(form, bits);
    cc.constants = constants(cc.roots, K, epsilon);
    cc.thresholds = thresholds(cc.constants, field);
    return cc;
  };
  auto floors = [](const Thresholds& t) {
    return std::vector<Integer>{floor_of(t.x12 * t.x12), floor_of(t.I1 * t.I1), floor_of(t.I2 * t.I2)};
  };
  unsigned bits = start_bits;
  CertifiedConstants current = round(bits);
  while (bits * 2 <= kMaxPrecisionBits) {
    bits *= 2;
    CertifiedConstants next = round(bits);
    bool stable = floors(next.thresholds) == floors(current.thresholds);
    current = std::move(next);
    if (stable) break;
  }
  return current;
}

}  // namespace thue
