#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"
#include "thue/rootbounds.hpp"

namespace thue {
namespace {

using testing::cubic_4;
using testing::cubic_irr;
using testing::cubic_m12;

double as_double(const Rational& q) { return q.get_d(); }

// x = 2 cos t turns x^3 - 3x - 1 = 0 into cos 3t = 1/2, so the roots are
// 2 cos 20deg, 2 cos 140deg and 2 cos 260deg.
std::vector<long double> irr_roots() {
  const long double deg = std::numbers::pi_v<long double> / 180;
  std::vector<long double> r{2 * std::cos(20 * deg), 2 * std::cos(140 * deg), 2 * std::cos(260 * deg)};
  std::sort(r.begin(), r.end());
  return r;
}

TEST(RootBounds, IntegerRootsAreExact) {
  RootData rd = isolate_roots(cubic_4(), Rational(1, 1024));
  ASSERT_EQ(rd.intervals.size(), 3u);
  const long expected[] = {-2, 0, 2};
  for (int j = 0; j < 3; ++j) EXPECT_TRUE(rd.intervals[j].contains(Rational(expected[j])));
  for (const auto& iv : rd.intervals) EXPECT_LE(iv.width(), Rational(1, 1024));
}

TEST(RootBounds, IrrationalCubic) {
  RootData rd = isolate_roots(cubic_irr(), Rational(1, 1024));
  ASSERT_EQ(rd.intervals.size(), 3u);
  auto r = irr_roots();
  for (int j = 0; j < 3; ++j) {
    EXPECT_LE(as_double(rd.intervals[j].lo), static_cast<double>(r[j]));
    EXPECT_GE(as_double(rd.intervals[j].hi), static_cast<double>(r[j]));
  }
  EXPECT_GT(rd.intervals[1].lo, Rational(-35, 100));
  EXPECT_LT(rd.intervals[1].hi, Rational(-34, 100));
}

TEST(RootBounds, SturmCertification) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr(), testing::form_of({6, -2, -3, 1})}) {
    RootData rd = isolate_roots_bits(f, 40);
    poly::Poly p = f.univariate();
    for (std::size_t j = 0; j < rd.intervals.size(); ++j) {
      const auto& iv = rd.intervals[j];
      if (iv.exact())
        EXPECT_EQ(sgn(poly::eval(p, iv.lo)), 0);
      else
        EXPECT_LT(poly::sign_at(p, iv.lo) * poly::sign_at(p, iv.hi), 0);
      if (j + 1 < rd.intervals.size()) EXPECT_LT(iv.hi, rd.intervals[j + 1].lo);
    }
  }
}

TEST(RootBounds, RejectsInadmissible) {
  EXPECT_THROW(isolate_roots(testing::form_of({0, 0, 1}), Rational(1, 1024)), Error);
  EXPECT_THROW(isolate_roots(testing::form_of({0, 1, 0, 1}), Rational(1, 1024)), Error);
  EXPECT_THROW(isolate_roots(cubic_4(), Rational(0)), Error);
}

TEST(RootBounds, ConstantsOfSplitCubic) {
  // Roots -2, 0, 2: A = 2, B = min(8, 4, 8) = 4, C = 1 / ((1/2)^2 4) = 1,
  // G = 1 / ((1/2) 2) = 1.
  RootData rd = isolate_roots_bits(cubic_4(), 64);
  TheoremConstants tc = constants(rd, Rational(1), Rational(1, 2));
  EXPECT_LE(rd.A_lower, 2);
  EXPECT_GE(rd.A_upper, 2);
  EXPECT_LE(rd.B_lower, 4);
  EXPECT_GE(rd.B_upper, 4);
  EXPECT_GE(tc.C_upper, 1);
  EXPECT_LE(tc.C_upper, 1 + dyadic(-30));
  EXPECT_GE(tc.G_upper, 1);
  EXPECT_LE(tc.G_upper, 1 + dyadic(-30));
}

TEST(RootBounds, SeparationOfIrrationalCubic) {
  auto r = irr_roots();
  long double A = std::min(r[1] - r[0], r[2] - r[1]);
  long double B = std::min({(r[1] - r[0]) * (r[2] - r[0]), (r[1] - r[0]) * (r[2] - r[1]), (r[2] - r[0]) * (r[2] - r[1])});
  EXPECT_NEAR(static_cast<double>(A), 1.18479, 1e-5);
  RootData rd = isolate_roots_bits(cubic_irr(), 64);
  EXPECT_LE(as_double(rd.A_lower), static_cast<double>(A) + 1e-15);
  EXPECT_GE(as_double(rd.A_upper), static_cast<double>(A) - 1e-15);
  EXPECT_NEAR(as_double(rd.A_lower), static_cast<double>(A), 1e-12);
  EXPECT_NEAR(as_double(rd.B_lower), static_cast<double>(B), 1e-12);
}

TEST(RootBounds, ParameterValidation) {
  RootData rd = isolate_roots_bits(cubic_4(), 64);
  EXPECT_THROW(constants(rd, Rational(1, 2), Rational(1, 2)), Error);
  EXPECT_THROW(constants(rd, Rational(1), Rational(0)), Error);
  EXPECT_THROW(constants(rd, Rational(1), Rational(1)), Error);
}

TEST(RootBounds, MonotoneUnderRefinement) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr()}) {
    RootData prev = isolate_roots_bits(f, 16);
    TheoremConstants pc = constants(prev, Rational(10), Rational(1, 3));
    for (unsigned bits = 32; bits <= 512; bits *= 2) {
      RootData cur = isolate_roots_bits(f, bits);
      TheoremConstants cc = constants(cur, Rational(10), Rational(1, 3));
      for (std::size_t j = 0; j < cur.intervals.size(); ++j) {
        EXPECT_GE(cur.intervals[j].lo, prev.intervals[j].lo);
        EXPECT_LE(cur.intervals[j].hi, prev.intervals[j].hi);
      }
      EXPECT_GE(cur.A_lower, prev.A_lower);
      EXPECT_GE(cur.B_lower, prev.B_lower);
      EXPECT_LE(cur.A_upper, prev.A_upper);
      EXPECT_LE(cur.B_upper, prev.B_upper);
      EXPECT_LE(cc.C_upper, pc.C_upper);
      EXPECT_LE(cc.G_upper, pc.G_upper);
      prev = cur;
      pc = cc;
    }
  }
}

TEST(RootBounds, ThresholdsForSplitCubicOverQi3) {
  // C = G = 1, s = 2, m = 3, n = 3:
  //   T_x12 = max(1, 2/sqrt 3), T_I1 = max(1, sqrt 2), T_I2 = max(1, (2/sqrt 3)^(1/2)).
  CertifiedConstants cc = certified_constants(cubic_4(), QuadraticField(3), Rational(1), Rational(1, 2));
  const Thresholds& t = cc.thresholds;
  EXPECT_GE(t.x12 * t.x12, Rational(4, 3));
  EXPECT_NEAR(as_double(t.x12), 2 / std::sqrt(3.0), 1e-15);
  EXPECT_GE(t.I1 * t.I1, Rational(2));
  EXPECT_NEAR(as_double(t.I1), std::sqrt(2.0), 1e-15);
  EXPECT_GE(rpow(t.I2, 4), Rational(4, 3));
  EXPECT_NEAR(as_double(t.I2), std::sqrt(2 / std::sqrt(3.0)), 1e-15);
}

TEST(RootBounds, ThresholdsNeverBelowG) {
  for (long m : {1, 2, 3, 7, 163}) {
    CertifiedConstants cc = certified_constants(cubic_irr(), QuadraticField(m), Rational(10), Rational(1, 2));
    EXPECT_GE(cc.thresholds.x12, cc.constants.G_upper);
    EXPECT_GE(cc.thresholds.I1, cc.constants.G_upper);
    EXPECT_GE(cc.thresholds.I2, cc.constants.G_upper);
  }
}

}  // namespace
}  // namespace thue
