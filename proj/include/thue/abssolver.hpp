#pragma once

// Height-bounded enumeration of |F(a, b)| <= K' over Z^2.
//
// For b != 0, F(a, b) = prod_j (a - alpha_j b). Let W >= 1 be the least
// integer with W^n >= K'. If a lies farther than W from every alpha_j b,
// each factor exceeds W and |F(a, b)| > W^n >= K'. So only the integer
// windows [alpha_j b - W, alpha_j b + W] need exact evaluation.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "thue/forms.hpp"
#include "thue/numeric.hpp"
#include "thue/rootbounds.hpp"

namespace thue {

struct AbsSolution {
  IntegerPair pair;
  Integer value;  ///< F(a, b)

  friend bool operator==(const AbsSolution& l, const AbsSolution& r) { return l.pair == r.pair && l.value == r.value; }
};

struct AbsSolutionSet {
  Rational bound;
  std::int64_t height = 0;
  std::vector<AbsSolution> solutions;  ///< sorted by (b, a)
  bool complete_within_height = true;

  friend bool operator==(const AbsSolutionSet&, const AbsSolutionSet&) = default;
};

inline bool abs_order(const IntegerPair& l, const IntegerPair& r) {
  if (l.b != r.b) return l.b < r.b;
  return l.a < r.a;
}

/// Smallest W >= 1 with W^n >= bound.
inline Integer window_radius(const Rational& bound, unsigned n) {
  Integer w = iroot_ceil(std::max(ceil_of(bound), Integer(0)), n);
  return std::max(w, Integer(1));
}

inline AbsSolutionSet solve_abs(const BinaryForm& form, const RootData& roots, const Rational& Kprime,
                                std::int64_t Ymax) {
  if (Ymax < 0) throw Error("height bound must be nonnegative");
  if (sgn(Kprime) < 0) throw Error("K' must be nonnegative");
  const unsigned n = form.degree();
  AbsSolutionSet out;
  out.bound = Kprime;
  out.height = Ymax;

  auto accept = [&](const Integer& a, const Integer& b) {
    IntegerPair p{a, b};
    Integer v = evaluate_int(form, p);
    if (Rational(abs(v)) <= Kprime) out.solutions.push_back({p, v});
  };

  // b = 0: F(a, 0) = a^n.
  Integer amax = iroot_floor(floor_of(Kprime), n);
  for (Integer a = -amax; a <= amax; ++a) accept(a, 0);

  const Integer W = window_radius(Kprime, n);
  std::vector<std::pair<Integer, Integer>> ranges;
  for (std::int64_t bb = -Ymax; bb <= Ymax; ++bb) {
    if (bb == 0) continue;
    Integer b(static_cast<long>(bb));
    ranges.clear();
    for (const auto& iv : roots.intervals) {
      Rational e1 = iv.lo * Rational(b), e2 = iv.hi * Rational(b);
      if (e1 > e2) std::swap(e1, e2);
      ranges.emplace_back(ceil_of(e1 - Rational(W)), floor_of(e2 + Rational(W)));
    }
    std::sort(ranges.begin(), ranges.end());
    // Merged sweep so overlapping windows are scanned once.
    Integer next = ranges.front().first;
    for (const auto& [lo, hi] : ranges) {
      for (Integer a = std::max(lo, next); a <= hi; ++a) accept(a, b);
      if (hi + 1 > next) next = hi + 1;
    }
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const AbsSolution& l, const AbsSolution& r) { return abs_order(l.pair, r.pair); });
  return out;
}

inline AbsSolutionSet solve_abs(const BinaryForm& form, const Rational& Kprime, std::int64_t Ymax) {
  return solve_abs(form, isolate_roots_bits(form, 32), Kprime, Ymax);
}

/// Solutions of F(a, b) = k with |b| <= Ymax, sorted by (b, a).
inline std::vector<IntegerPair> solve_abs_equation(const BinaryForm& form, const Integer& k, std::int64_t Ymax) {
  std::vector<IntegerPair> out;
  for (const auto& s : solve_abs(form, Rational(abs(k)), Ymax).solutions)
    if (s.value == k) out.push_back(s.pair);
  return out;
}

}  // namespace thue
