#pragma once

// Integer binary forms F(x, y) = sum c_k x^k y^(n-k) with f(x) = F(x, 1).

#include <string>
#include <utility>
#include <vector>

#include "thue/numeric.hpp"
#include "thue/poly.hpp"

namespace thue {

struct IntegerPair {
  Integer a;
  Integer b;

  friend bool operator==(const IntegerPair& l, const IntegerPair& r) { return l.a == r.a && l.b == r.b; }
};

class BinaryForm {
 public:
  /// `coeffs` are c_0 ... c_n in ascending powers of x.
  explicit BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) throw Error("a binary form needs at least two coefficients");
  }

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& coeff(unsigned k) const { return coeffs_.at(k); }

  poly::Poly univariate() const {
    poly::Poly p(coeffs_.begin(), coeffs_.end());
    poly::trim(p);
    return p;
  }

  std::string to_string() const {
    std::string out;
    const unsigned n = degree();
    for (unsigned i = 0; i <= n; ++i) {
      unsigned k = n - i;
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (out.empty())
        out += c < 0 ? "-" : "";
      else
        out += c < 0 ? " - " : " + ";
      std::string mono;
      auto append = [&mono](const char* var, unsigned e) {
        if (e == 0) return;
        if (!mono.empty()) mono += "*";
        mono += var;
        if (e > 1) mono += "^" + std::to_string(e);
      };
      append("x", k);
      append("y", n - k);
      if (mono.empty())
        out += mag.get_str();
      else if (mag == 1)
        out += mono;
      else
        out += mag.get_str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const BinaryForm& l, const BinaryForm& r) { return l.coeffs_ == r.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

inline Integer evaluate_int(const BinaryForm& form, const IntegerPair& p) {
  // Homogeneous Horner: ((c_n a + c_{n-1} b) a + c_{n-2} b^2) a + ...
  const unsigned n = form.degree();
  Integer acc = form.coeff(n);
  Integer bpow = 1;
  for (unsigned k = n; k-- > 0;) {
    bpow *= p.b;
    acc = acc * p.a + form.coeff(k) * bpow;
  }
  return acc;
}

enum class AdmissibilityFailure { none, degree_too_small, non_monic, repeated_root, complex_root };

struct Admissibility {
  AdmissibilityFailure failure = AdmissibilityFailure::none;
  std::string reason;

  bool ok() const { return failure == AdmissibilityFailure::none; }
  explicit operator bool() const { return ok(); }
};

/// Degree >= 3, monic f, and n distinct real roots (squarefree by exact gcd,
/// real by Sturm count).
inline Admissibility check_admissible(const BinaryForm& form) {
  const unsigned n = form.degree();
  if (n < 3) return {AdmissibilityFailure::degree_too_small, "degree " + std::to_string(n) + " is below 3"};
  if (form.coeff(n) != 1)
    return {AdmissibilityFailure::non_monic, "leading coefficient " + form.coeff(n).get_str() + " is not 1"};
  poly::Poly f = form.univariate();
  if (poly::degree(poly::gcd(f, poly::derivative(f))) > 0)
    return {AdmissibilityFailure::repeated_root, "f has a repeated root"};
  auto seq = poly::sturm_sequence(f);
  Rational bound = poly::cauchy_bound(f);
  int real = poly::count_roots(seq, -bound, bound);
  if (real != static_cast<int>(n))
    return {AdmissibilityFailure::complex_root,
            "f has " + std::to_string(real) + " real roots out of " + std::to_string(n)};
  return {};
}

inline void require_admissible(const BinaryForm& form) {
  if (auto adm = check_admissible(form); !adm) throw Error("inadmissible form " + form.to_string() + ": " + adm.reason);
}

/// Integer roots of f in increasing order. For monic f these are all of its
/// rational roots, so the nonzero zeros of F over Z^2 are the lines (r t, t).
inline std::vector<Integer> integer_roots(const BinaryForm& form) {
  std::vector<Integer> roots;
  poly::Poly f = form.univariate();
  for (const auto& iv : poly::isolate_real_roots(f, Rational(1, 4))) {
    for (Integer r = ceil_of(iv.lo); r <= floor_of(iv.hi); ++r)
      if (evaluate_int(form, {r, 1}) == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace thue
