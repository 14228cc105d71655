#pragma once

// Exhaustive scan of |F(x, y)| <= K over the box [-H, H]^4 of coordinates.
// Shares nothing with the reducer except the ring arithmetic.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "thue/forms.hpp"
#include "thue/quadfield.hpp"

namespace thue {

struct OracleSolution {
  RingElement x;
  RingElement y;
  Integer norm_value;

  friend bool operator==(const OracleSolution&, const OracleSolution&) = default;
};

struct OracleResult {
  std::int64_t height = 0;
  std::vector<OracleSolution> solutions;

  friend bool operator==(const OracleResult&, const OracleResult&) = default;
};

inline OracleResult brute_force(const QuadraticField& field, const BinaryForm& form, const Rational& K,
                                std::int64_t H) {
  if (H < 0) throw Error("box height must be nonnegative");
  OracleResult out;
  out.height = H;
  auto coord = [](std::int64_t v) { return Integer(static_cast<long>(v)); };
  for (std::int64_t y1 = -H; y1 <= H; ++y1)
    for (std::int64_t y2 = -H; y2 <= H; ++y2) {
      RingElement y{coord(y1), coord(y2)};
      for (std::int64_t x1 = -H; x1 <= H; ++x1)
        for (std::int64_t x2 = -H; x2 <= H; ++x2) {
          RingElement x{coord(x1), coord(x2)};
          Integer nv;
          if (satisfies_inequality(field, form, x, y, K, &nv)) out.solutions.push_back({x, y, nv});
        }
    }
  std::sort(out.solutions.begin(), out.solutions.end(), [&field](const auto& l, const auto& r) {
    return canonical_less(field, l.x, l.y, r.x, r.y);
  });
  return out;
}

inline bool in_box(const RingElement& x, const RingElement& y, std::int64_t H) {
  const Integer h(static_cast<long>(H));
  return abs(x.u1) <= h && abs(x.u2) <= h && abs(y.u1) <= h && abs(y.u2) <= h;
}

}  // namespace thue
