#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "test_support.hpp"
#include "thue/forms.hpp"

namespace thue {
namespace {

using testing::cubic_4;
using testing::cubic_irr;
using testing::cubic_m12;
using testing::form_of;

TEST(Forms, EvaluateInt) {
  EXPECT_EQ(evaluate_int(cubic_4(), {1, 0}), 1);
  EXPECT_EQ(evaluate_int(cubic_4(), {0, 0}), 0);
  EXPECT_EQ(testing::naive_eval(cubic_4(), 3, 1), 15);
  EXPECT_EQ(evaluate_int(cubic_4(), {3, 1}), 15);
}

TEST(Forms, EvaluateMatchesNaive) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr(), form_of({3, -7, 0, 2, 1})})
    for (int i = 0; i < 200; ++i) {
      Integer a = testing::uniform(-50, 50), b = testing::uniform(-50, 50);
      EXPECT_EQ(evaluate_int(f, {a, b}), testing::naive_eval(f, a, b));
    }
}

TEST(Forms, Homogeneity) {
  for (const auto& f : {cubic_4(), cubic_m12(), cubic_irr()})
    for (int i = 0; i < 200; ++i) {
      Integer a = testing::uniform(-30, 30), b = testing::uniform(-30, 30), t = testing::uniform(-9, 9);
      EXPECT_EQ(evaluate_int(f, {t * a, t * b}), ipow(t, f.degree()) * evaluate_int(f, {a, b}));
      EXPECT_EQ(evaluate_int(f, {a, 0}), ipow(a, f.degree()));
    }
}

TEST(Forms, Admissible) {
  // disc(x^3 + p x + q) = -4p^3 - 27q^2 = 108 - 27 = 81 for x^3 - 3x - 1.
  EXPECT_TRUE(check_admissible(cubic_irr()).ok());
  EXPECT_TRUE(check_admissible(cubic_4()).ok());
  EXPECT_TRUE(check_admissible(cubic_m12()).ok());
}

TEST(Forms, InadmissibleReasons) {
  EXPECT_EQ(check_admissible(form_of({0, 1, 0, 1})).failure, AdmissibilityFailure::complex_root);
  EXPECT_EQ(check_admissible(form_of({0, 0, 1})).failure, AdmissibilityFailure::degree_too_small);
  EXPECT_EQ(check_admissible(form_of({0, -4, 0, 2})).failure, AdmissibilityFailure::non_monic);
  // (x - 1)^2 (x + 2)
  EXPECT_EQ(check_admissible(form_of({2, -3, 0, 1})).failure, AdmissibilityFailure::repeated_root);
  EXPECT_THROW(require_admissible(form_of({0, 1, 0, 1})), Error);
}

TEST(Forms, IntegerRoots) {
  EXPECT_EQ(integer_roots(cubic_4()), (std::vector<Integer>{-2, 0, 2}));
  EXPECT_TRUE(integer_roots(cubic_irr()).empty());
  EXPECT_EQ(integer_roots(cubic_m12()), (std::vector<Integer>{-1, 0, 2}));
  // (x - 3)(x^2 - 2): one integer root among irrational ones.
  EXPECT_EQ(integer_roots(form_of({6, -2, -3, 1})), (std::vector<Integer>{3}));
}

TEST(Forms, IntegerRootsDivideConstantTerm) {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> roots;
    while (roots.size() < 4) {
      long r = testing::uniform(-12, 12);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    BinaryForm f = testing::from_roots(roots);
    auto got = integer_roots(f);
    std::sort(roots.begin(), roots.end());
    ASSERT_EQ(got.size(), roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) EXPECT_EQ(got[i], roots[i]);
    if (f.coeff(0) != 0)
      for (const auto& r : got) EXPECT_EQ(f.coeff(0) % r, 0);
  }
}

// Random products of linear factors, optionally times x^2 + 1 or x^2 - 2, so
// the real-root structure is known in advance.
TEST(Forms, AdmissibilityAgreesWithConstruction) {
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> roots;
    const std::size_t n = 3 + trial % 3;
    while (roots.size() < n) roots.push_back(testing::uniform(-6, 6));
    std::sort(roots.begin(), roots.end());
    bool distinct = std::adjacent_find(roots.begin(), roots.end()) == roots.end();
    BinaryForm f = testing::from_roots(roots);
    EXPECT_EQ(check_admissible(f).ok(), distinct);
    // Multiplying by (x^2 + 1) adds a complex pair.
    std::vector<Integer> cs(f.coeffs().size() + 2, Integer(0));
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      cs[k] += f.coeff(k);
      cs[k + 2] += f.coeff(k);
    }
    EXPECT_FALSE(check_admissible(BinaryForm(cs)).ok());
    // x^2 - 2 adds two irrational real roots.
    std::vector<Integer> ds(f.coeffs().size() + 2, Integer(0));
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
      ds[k] -= 2 * f.coeff(k);
      ds[k + 2] += f.coeff(k);
    }
    EXPECT_EQ(check_admissible(BinaryForm(ds)).ok(), distinct);
  }
}

TEST(Forms, ToString) {
  EXPECT_EQ(cubic_4().to_string(), "x^3 - 4*x*y^2");
  EXPECT_EQ(cubic_irr().to_string(), "x^3 - 3*x*y^2 - y^3");
}

}  // namespace
}  // namespace thue
