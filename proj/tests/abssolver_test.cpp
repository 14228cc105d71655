#include <gtest/gtest.h>


#include "test_support.hpp"
#include "thue/abssolver.hpp"

namespace thue {
namespace {

using testing::cubic_4;
using testing::cubic_irr;
using testing::cubic_m12;

std::vector<std::tuple<long, long, long>> triples(const AbsSolutionSet& s) {
  std::vector<std::tuple<long, long, long>> out;
  for (const auto& x : s.solutions) out.emplace_back(x.pair.a.get_si(), x.pair.b.get_si(), x.value.get_si());
  return out;
}

void expect_matches_rectangle(const BinaryForm& f, const Rational& bound, long ymax) {
  AbsSolutionSet got = solve_abs(f, bound, ymax);
  auto want = testing::rectangle_scan(f, bound, ymax);
  std::sort(want.begin(), want.end(), [](const auto& l, const auto& r) { return l.b != r.b ? l.b < r.b : l.a < r.a; });
  ASSERT_EQ(got.solutions.size(), want.size()) << f.to_string() << " K'=" << bound << " Y=" << ymax;
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_EQ(got.solutions[i].pair, (IntegerPair{want[i].a, want[i].b}));
    EXPECT_EQ(got.solutions[i].value, want[i].value);
  }
}

TEST(AbsSolver, SplitCubicUnitBound) {
  // Frozen from the full-rectangle scan |b| <= 2, |a| <= 5|b| + 1.
  const std::vector<std::tuple<long, long, long>> want = {
      {-4, -2, 0}, {0, -2, 0}, {4, -2, 0}, {-2, -1, 0}, {0, -1, 0}, {2, -1, 0}, {-1, 0, -1}, {0, 0, 0},
      {1, 0, 1},   {-2, 1, 0}, {0, 1, 0},  {2, 1, 0},   {-4, 2, 0}, {0, 2, 0},  {4, 2, 0}};
  AbsSolutionSet got = solve_abs(cubic_4(), Rational(1), 2);
  EXPECT_EQ(triples(got), want);
  EXPECT_EQ(got.height, 2);
  EXPECT_TRUE(got.complete_within_height);
}

TEST(AbsSolver, ZeroBoundIsTheZeroSet) {
  AbsSolutionSet got = solve_abs(cubic_4(), Rational(0), 3);
  ASSERT_EQ(got.solutions.size(), 19u);
  for (const auto& s : got.solutions) {
    EXPECT_EQ(s.value, 0);
    const Integer& a = s.pair.a;
    const Integer& b = s.pair.b;
    EXPECT_TRUE(a == 0 || a == 2 * b || a == -2 * b);
  }
}

TEST(AbsSolver, HeightZero) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr()}) {
    AbsSolutionSet got = solve_abs(f, Rational(1), 0);
    EXPECT_EQ(triples(got), (std::vector<std::tuple<long, long, long>>{{-1, 0, -1}, {0, 0, 0}, {1, 0, 1}}));
  }
}

TEST(AbsSolver, Equation) {
  auto zeros = solve_abs_equation(cubic_4(), 0, 2);
  EXPECT_EQ(zeros.size(), 13u);
  for (const auto& p : zeros) EXPECT_TRUE(p.a == 0 || p.a == 2 * p.b || p.a == -2 * p.b);
  EXPECT_EQ(solve_abs_equation(cubic_4(), 1, 0), (std::vector<IntegerPair>{{1, 0}}));
  auto fifteen = solve_abs_equation(cubic_4(), 15, 1);
  EXPECT_NE(std::find(fifteen.begin(), fifteen.end(), IntegerPair{3, 1}), fifteen.end());
  for (const auto& p : fifteen) EXPECT_EQ(evaluate_int(cubic_4(), p), 15);
  auto want = testing::rectangle_scan(cubic_4(), Rational(15), 1);
  long count15 = std::count_if(want.begin(), want.end(), [](const auto& p) { return p.value == 15; });
  EXPECT_EQ(static_cast<long>(fifteen.size()), count15);
}

TEST(AbsSolver, RejectsBadArguments) {
  EXPECT_THROW(solve_abs(cubic_4(), Rational(-1), 2), Error);
  EXPECT_THROW(solve_abs(cubic_4(), Rational(1), -1), Error);
}

TEST(AbsSolver, WindowRadius) {
  EXPECT_EQ(window_radius(Rational(0), 3), 1);
  EXPECT_EQ(window_radius(Rational(1), 3), 1);
  EXPECT_EQ(window_radius(Rational(8), 3), 2);
  EXPECT_EQ(window_radius(Rational(9), 3), 3);
  EXPECT_EQ(window_radius(Rational(80), 3), 5);
}

TEST(AbsSolver, MatchesRectangleOnCorpus) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr(), testing::form_of({6, -2, -3, 1})})
    for (long bound : {0, 1, 7, 50})
      for (long ymax : {0, 3, 12}) expect_matches_rectangle(f, Rational(bound), ymax);
  expect_matches_rectangle(cubic_irr(), Rational(5, 2), 10);
}

TEST(AbsSolver, Symmetry) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr(), testing::from_roots({-3, -1, 1, 4})}) {
    AbsSolutionSet got = solve_abs(f, Rational(30), 15);
    for (const auto& s : got.solutions) {
      IntegerPair neg{-s.pair.a, -s.pair.b};
      auto it = std::find_if(got.solutions.begin(), got.solutions.end(), [&](const auto& t) { return t.pair == neg; });
      ASSERT_NE(it, got.solutions.end());
      EXPECT_EQ(it->value, f.degree() % 2 ? -s.value : s.value);
    }
  }
}

TEST(AbsSolver, ZerosLieOnIntegerRootLines) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr(), testing::from_roots({-3, -1, 1, 4})}) {
    auto roots = integer_roots(f);
    for (const auto& s : solve_abs(f, Rational(20), 10).solutions) {
      if (s.value != 0) continue;
      bool on_line = s.pair.a == 0 && s.pair.b == 0;
      for (const auto& r : roots) on_line = on_line || s.pair.a == r * s.pair.b;
      EXPECT_TRUE(on_line);
    }
  }
}

TEST(AbsSolver, SortedAndUnique) {
  AbsSolutionSet got = solve_abs(testing::from_roots({-1, 0, 1}), Rational(40), 20);
  for (std::size_t i = 1; i < got.solutions.size(); ++i)
    EXPECT_TRUE(abs_order(got.solutions[i - 1].pair, got.solutions[i].pair));
}

}  // namespace
}  // namespace thue
