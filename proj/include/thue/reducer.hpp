#pragma once

// Reduction of |F(x, y)| <= K over Z_M to absolute inequalities over Z.
//
// Write (a, b) = (s x1 + (s-1) x2, s y1 + (s-1) y2). Every solution has
//   F(x2, y2) = k1 with k1^2 m^n <= s^{2n} K^2, and |F(a, b)| <= s^n K,
//   k1^2 F(a, b)^2 2^{2n} m^n <= s^{4n} K^4.
// Case A handles k1 = 0 (x2, y2 on the zero lines of F), case B the rest.
// Candidates (x1, y1) = ((a - (s-1) x2) / s, (b - (s-1) y2) / s) are kept
// when integral and then checked exactly.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "thue/abssolver.hpp"
#include "thue/forms.hpp"
#include "thue/numeric.hpp"
#include "thue/quadfield.hpp"
#include "thue/rootbounds.hpp"
#include "thue/theorem.hpp"

namespace thue {

struct RelativeSolution {
  RingElement x;
  RingElement y;
  Integer norm_value;  ///< norm(F(x, y))
  TheoremReport report;

  friend bool operator==(const RelativeSolution&, const RelativeSolution&) = default;
};

/// Solutions (x, y) = base + t * step for every t in Z_M, all with F(x, y) = 0.
struct ZeroFamily {
  Integer root;  ///< integer root r of f; the family is x = r y
  RingElement base_x, base_y;
  RingElement step_x, step_y;

  friend bool operator==(const ZeroFamily&, const ZeroFamily&) = default;
};

struct RelativeSolutionSet {
  std::vector<RelativeSolution> solutions;
  std::int64_t search_height = 0;
  std::vector<ZeroFamily> families;
  std::vector<std::string> notes;
  /// x2 = y2 = 0 was forced and the problem was solved over Z directly.
  bool integral_fast_path = false;

  bool theorem_consistent() const {
    return std::all_of(solutions.begin(), solutions.end(), [](const auto& s) { return s.report.consistent(); });
  }

  friend bool operator==(const RelativeSolutionSet&, const RelativeSolutionSet&) = default;
};

struct ReducerOptions {
  bool integral_fast_path = true;
};

struct IntegerRange {
  Integer lo;
  Integer hi;

  bool contains(const Integer& v) const { return lo <= v && v <= hi; }
  bool only_zero() const { return lo == 0 && hi == 0; }
};

/// All k1 with k1^2 m^n <= s^{2n} K^2.
inline IntegerRange k1_range(const QuadraticField& field, const BinaryForm& form, const Rational& K) {
  const unsigned n = form.degree();
  Rational q = Rational(ipow(field.s(), 2 * n)) * K * K / Rational(ipow(field.m(), n));
  Integer kmax = iroot_floor(floor_of(q), 2);
  return {-kmax, kmax};
}

/// Largest |k2| allowed next to F(x2, y2) = k1 != 0.
inline Integer k2_bound(const QuadraticField& field, const BinaryForm& form, const Rational& K, const Integer& k1) {
  const unsigned n = form.degree();
  Rational K2 = K * K;
  Rational q = Rational(ipow(field.s(), 4 * n)) * K2 * K2 / Rational(k1 * k1 * ipow(2, 2 * n) * ipow(field.m(), n));
  return iroot_floor(floor_of(q), 2);
}

/// Whether (x, y) lies inside the region the reducer enumerates exhaustively.
inline bool within_reach(const QuadraticField& field, const RelativeSolutionSet& set, const RingElement& x,
                         const RingElement& y) {
  const Integer H(static_cast<long>(set.search_height));
  if (set.integral_fast_path) return x.u2 == 0 && y.u2 == 0 && abs(y.u1) <= H;
  auto [real, imag] = split_coordinates(field, x, y);
  return abs(real.b) <= H && abs(imag.b) <= H;
}

namespace detail {

inline void push_if_solution(const QuadraticField& field, const BinaryForm& form, const Rational& K,
                             const IntegerPair& real, const IntegerPair& imag, RelativeSolutionSet& out) {
  const int s = field.s();
  Integer xa = real.a - (s - 1) * imag.a;
  Integer yb = real.b - (s - 1) * imag.b;
  if (s == 2 && (!mpz_even_p(xa.get_mpz_t()) || !mpz_even_p(yb.get_mpz_t()))) return;
  RingElement x{xa / s, imag.a};
  RingElement y{yb / s, imag.b};
  Integer nv;
  if (satisfies_inequality(field, form, x, y, K, &nv)) out.solutions.push_back({x, y, nv, {}});
}

inline std::vector<IntegerPair> zero_set(const BinaryForm& form, std::int64_t Ymax) {
  std::vector<IntegerPair> zs{{0, 0}};
  for (const auto& r : integer_roots(form))
    for (std::int64_t t = -Ymax; t <= Ymax; ++t)
      if (t != 0) zs.push_back({r * static_cast<long>(t), Integer(static_cast<long>(t))});
  return zs;
}

inline void finalize(const QuadraticField& field, RelativeSolutionSet& out) {
  auto less = [&field](const RelativeSolution& l, const RelativeSolution& r) {
    return canonical_less(field, l.x, l.y, r.x, r.y);
  };
  std::sort(out.solutions.begin(), out.solutions.end(), less);
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end(),
                                  [](const auto& l, const auto& r) { return l.x == r.x && l.y == r.y; }),
                      out.solutions.end());
}

}  // namespace detail

/// Solutions with F(x2, y2) = 0 and |b| <= Ymax, |y2| <= Ymax.
inline RelativeSolutionSet case_A(const QuadraticField& field, const BinaryForm& form, const RootData& roots,
                                  const Rational& K, std::int64_t Ymax) {
  const unsigned n = form.degree();
  RelativeSolutionSet out;
  out.search_height = Ymax;
  for (const auto& r : integer_roots(form)) out.families.push_back({r, {0, 0}, {0, 0}, {r, 0}, {1, 0}});
  AbsSolutionSet ab = solve_abs(form, roots, Rational(ipow(field.s(), n)) * K, Ymax);
  for (const auto& imag : detail::zero_set(form, Ymax))
    for (const auto& sol : ab.solutions) detail::push_if_solution(field, form, K, sol.pair, imag, out);
  detail::finalize(field, out);
  return out;
}

inline RelativeSolutionSet case_A(const QuadraticField& field, const BinaryForm& form, const Rational& K,
                                  std::int64_t Ymax) {
  require_admissible(form);
  return case_A(field, form, isolate_roots_bits(form, kDefaultPrecisionBits), K, Ymax);
}

/// Solutions with F(x2, y2) = k1 != 0 and |b| <= Ymax, |y2| <= Ymax.
inline RelativeSolutionSet case_B(const QuadraticField& field, const BinaryForm& form, const RootData& roots,
                                  const Rational& K, std::int64_t Ymax) {
  const unsigned n = form.degree();
  RelativeSolutionSet out;
  out.search_height = Ymax;
  IntegerRange k1s = k1_range(field, form, K);
  if (k1s.only_zero()) return out;

  std::map<Integer, std::vector<IntegerPair>> by_k1;
  for (const auto& sol : solve_abs(form, roots, Rational(k1s.hi), Ymax).solutions)
    if (sol.value != 0) by_k1[sol.value].push_back(sol.pair);
  for (Integer k1 = k1s.lo; k1 <= k1s.hi; ++k1)
    if (k1 != 0 && !by_k1.count(k1))
      out.notes.push_back("k1 = " + k1.get_str() + " is not a value of F with |y2| <= " + std::to_string(Ymax) +
                          "; skipped");
  if (by_k1.empty()) return out;

  AbsSolutionSet ab = solve_abs(form, roots, Rational(ipow(field.s(), n)) * K, Ymax);
  std::map<Integer, std::vector<IntegerPair>> by_k2;
  for (const auto& sol : ab.solutions) by_k2[sol.value].push_back(sol.pair);

  for (const auto& [k1, imags] : by_k1) {
    Integer k2max = k2_bound(field, form, K, k1);
    for (auto it = by_k2.lower_bound(-k2max); it != by_k2.end() && it->first <= k2max; ++it)
      for (const auto& imag : imags)
        for (const auto& real : it->second) detail::push_if_solution(field, form, K, real, imag, out);
  }
  detail::finalize(field, out);
  return out;
}

inline RelativeSolutionSet case_B(const QuadraticField& field, const BinaryForm& form, const Rational& K,
                                  std::int64_t Ymax) {
  require_admissible(form);
  return case_B(field, form, isolate_roots_bits(form, kDefaultPrecisionBits), K, Ymax);
}

/// Every solution of |F(x, y)| <= K with |b| <= Ymax and |y2| <= Ymax (or
/// |y1| <= Ymax on the integral fast path), each carrying its theorem report.
inline RelativeSolutionSet solve_relative(const QuadraticField& field, const BinaryForm& form, const Rational& K,
                                          const Rational& epsilon, std::int64_t Ymax,
                                          const ReducerOptions& options = {}) {
  require_admissible(form);
  check_parameters(K, epsilon);
  if (Ymax < 0) throw Error("height bound must be nonnegative");
  const CertifiedConstants cc = certified_constants(form, field, K, epsilon);

  RelativeSolutionSet out;
  const bool no_zero_lines = integer_roots(form).empty();
  if (options.integral_fast_path && no_zero_lines && k1_range(field, form, K).only_zero()) {
    // F(x2, y2) = 0 forces x2 = y2 = 0, leaving |F(x1, y1)| <= K over Z.
    out.search_height = Ymax;
    out.integral_fast_path = true;
    out.notes.push_back("k1 = 0 is the only admissible value and f has no integer root: x2 = y2 = 0");
    for (const auto& sol : solve_abs(form, cc.roots, K, Ymax).solutions)
      out.solutions.push_back({{sol.pair.a, 0}, {sol.pair.b, 0}, sol.value * sol.value, {}});
  } else {
    out = case_A(field, form, cc.roots, K, Ymax);
    RelativeSolutionSet b = case_B(field, form, cc.roots, K, Ymax);
    out.solutions.insert(out.solutions.end(), b.solutions.begin(), b.solutions.end());
    out.notes.insert(out.notes.end(), b.notes.begin(), b.notes.end());
  }
  detail::finalize(field, out);
  for (auto& sol : out.solutions) sol.report = theorem_report(field, form, cc.thresholds, sol.x, sol.y, K);
  return out;
}

}  // namespace thue
