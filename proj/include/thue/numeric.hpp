#pragma once

// Exact integer and rational helpers on top of GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace thue {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for malformed input and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational rpow(const Rational& base, unsigned long exp) {
  Rational r(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  r.canonicalize();
  return r;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Rational dyadic(long exponent) {
  Rational r(1);
  if (exponent >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(exponent));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<unsigned long>(-exponent));
  return r;
}

/// floor(N^(1/k)) for N >= 0.
inline Integer iroot_floor(const Integer& n, unsigned long k) {
  if (sgn(n) < 0) throw Error("iroot_floor: negative radicand");
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

/// ceil(N^(1/k)) for N >= 0.
inline Integer iroot_ceil(const Integer& n, unsigned long k) {
  Integer r = iroot_floor(n, k);
  if (ipow(r, k) < n) ++r;
  return r;
}

// Dyadic enclosures of q^(1/k) on a grid of 2^-bits. Both are monotone in q
// and tighten (never loosen) as bits grows.

inline Rational root_upper(const Rational& q, unsigned long k, unsigned bits) {
  if (sgn(q) < 0) throw Error("root_upper: negative argument");
  Rational scaled = q * dyadic(static_cast<long>(bits * k));
  Rational r(iroot_ceil(ceil_of(scaled), k));
  return r * dyadic(-static_cast<long>(bits));
}

inline Rational root_lower(const Rational& q, unsigned long k, unsigned bits) {
  if (sgn(q) < 0) throw Error("root_lower: negative argument");
  Rational scaled = q * dyadic(static_cast<long>(bits * k));
  Rational r(iroot_floor(floor_of(scaled), k));
  return r * dyadic(-static_cast<long>(bits));
}

inline Integer parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("empty integer literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw Error("malformed integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw Error("malformed integer '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

/// Accepts "p", "p/q" and finite decimals such as "2.5".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num = parse_integer(std::string_view(s).substr(0, slash));
    Integer den = parse_integer(std::string_view(s).substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) throw Error("malformed rational '" + s + "'");
    Integer whole = parse_integer(s.substr(0, dot) + frac);
    Rational r(whole, ipow(10, frac.size()));
    r.canonicalize();
    return r;
  }
  return Rational(parse_integer(s));
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Truncated decimal rendering with `digits` fractional digits.
inline std::string to_decimal(const Rational& q, unsigned digits = 12) {
  Rational a = abs(q);
  Integer scaled = floor_of(a * Rational(ipow(10, digits)));
  std::string body = scaled.get_str();
  if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (sgn(q) < 0 ? "-" : "") + body;
}

inline bool is_squarefree(const Integer& m) {
  if (m < 1) return false;
  Integer rest = m;
  for (Integer p = 2; p * p <= rest; ++p) {
    if (rest % p == 0) {
      rest /= p;
      if (rest % p == 0) return false;
    }
  }
  return true;
}

}  // namespace thue
