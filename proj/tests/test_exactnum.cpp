#include <gtest/gtest.h>

#include <random>

#include "finvar/cycnum.hpp"

using finvar::CycNum;
using finvar::Rational;

namespace {

CycNum random_element(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> e(finvar::euler_phi(n));
  for (auto& c : e) c = Rational(num(rng), den(rng));
  return CycNum::from_exponents(n, e);
}

}  // namespace

TEST(Rational, NormalFormAndArithmetic) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), finvar::DivisionByZero);
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("1/x"), finvar::ParseError);
}

TEST(Rational, OverflowPromotesToBig) {
  Rational big(INT64_MAX);
  Rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq / big, big);
  EXPECT_TRUE((sq / big).is_small());
  Rational frac(1, INT64_MAX);
  EXPECT_EQ((frac * frac) * big * big, Rational(1));
  EXPECT_EQ(Rational::parse(sq.str()), sq);
}

TEST(CycNum, DefiningRelations) {
  EXPECT_EQ(CycNum::zeta(4) * CycNum::zeta(4), CycNum(-1));
  CycNum z3 = CycNum::zeta(3);
  EXPECT_TRUE((CycNum(1) + z3 + z3 * z3).is_zero());
  CycNum z8 = CycNum::zeta(8);
  EXPECT_EQ((CycNum(1) + z8) * (CycNum(1) - z8), CycNum(1) - CycNum::zeta(4));
  EXPECT_EQ((CycNum(1) + z8) * (CycNum(1) - z8), CycNum(1) - z8 * z8);
}

TEST(CycNum, ResultConductorIsLcm) {
  CycNum s = CycNum::zeta(4) + CycNum::zeta(3);
  EXPECT_EQ(s.conductor(), 12);
}

TEST(CycNum, DivisionByZeroIsDistinct) {
  EXPECT_THROW(CycNum::zeta(5) / CycNum(Rational(0), 5), finvar::DivisionByZero);
}

TEST(CycNum, Embed) {
  CycNum m1 = CycNum(-1).embed(8);
  EXPECT_EQ(m1.conductor(), 8);
  EXPECT_EQ(m1, CycNum(-1));
  EXPECT_EQ(CycNum::zeta(4).embed(8), CycNum::zeta(8, 2));
  EXPECT_EQ(CycNum::zeta(4).embed(8).coeffs(), CycNum::zeta(8, 2).coeffs());
  // zeta_3 = zeta_6^2 = zeta_6 - 1 = -zeta_6^{-1}
  CycNum e = CycNum::zeta(3).embed(6);
  EXPECT_EQ(e.str(), "cyc(6)[-1, 1]");
  EXPECT_EQ(e, -CycNum::zeta(6, -1));
  // minimal polynomial x^2 + x + 1 of zeta_3 vanishes at the embedded value
  EXPECT_TRUE((e * e + e + CycNum(1)).is_zero());
  EXPECT_THROW(CycNum::zeta(3).embed(8), finvar::ConductorMismatch);
}

TEST(CycNum, RootOfUnityOrder) {
  EXPECT_EQ(CycNum(-1).root_of_unity_order(), 2);
  EXPECT_EQ(CycNum::zeta(8).root_of_unity_order(), 8);
  EXPECT_FALSE(CycNum(2).root_of_unity_order().has_value());
  EXPECT_EQ((-CycNum::zeta(3)).root_of_unity_order(), 6);
  EXPECT_EQ(CycNum(1).root_of_unity_order(), 1);
  EXPECT_FALSE((CycNum::zeta(5) + CycNum(1)).root_of_unity_order().has_value());
}

TEST(CycNum, NamedConstantsSquare) {
  EXPECT_EQ(finvar::sqrt_minus1() * finvar::sqrt_minus1(), CycNum(-1));
  EXPECT_EQ(finvar::sqrt2() * finvar::sqrt2(), CycNum(2));
  EXPECT_EQ(finvar::inv_sqrt2() * finvar::inv_sqrt2(), CycNum(Rational(1, 2)));
  EXPECT_EQ(finvar::sqrt_minus3() * finvar::sqrt_minus3(), CycNum(-3));
  EXPECT_EQ(finvar::sqrt5() * finvar::sqrt5(), CycNum(5));
  EXPECT_EQ(finvar::sqrt_minus7() * finvar::sqrt_minus7(), CycNum(-7));
  for (int q : {3, 6, 7, 10, 12, -2, -5, 28}) {
    CycNum r = finvar::sqrt_rational(Rational(q));
    EXPECT_EQ(r * r, CycNum(q)) << q;
  }
  CycNum h = finvar::sqrt_rational(Rational(3, 8));
  EXPECT_EQ(h * h, CycNum(Rational(3, 8)));
}

TEST(CycNum, SqrtMinus7IsQuadraticResidueSum) {
  // residues mod 7 are 1,2,4
  CycNum b = CycNum::zeta(7);
  CycNum g = b + b.pow(2) + b.pow(4) - b.pow(3) - b.pow(5) - b.pow(6);
  EXPECT_EQ(g, finvar::sqrt_minus7());
}

TEST(CycNum, TextRoundTrip) {
  std::mt19937_64 rng(7);
  for (int n : {1, 3, 4, 5, 7, 8, 12, 20, 24, 28, 40}) {
    for (int t = 0; t < 20; ++t) {
      CycNum a = random_element(rng, n);
      EXPECT_EQ(CycNum::parse(a.str()), a);
      EXPECT_EQ(CycNum::parse(a.str()).conductor(), n);
    }
  }
  EXPECT_EQ(CycNum::parse("cyc(4)[1/2, -3/4]"), CycNum(Rational(1, 2)) - CycNum::zeta(4).scaled(Rational(3, 4)));
  EXPECT_THROW(CycNum::parse("cyc(4)[1]"), finvar::ParseError);
  EXPECT_THROW(CycNum::parse("cyc(4)[1, 2"), finvar::ParseError);
}

TEST(CycNum, FieldAxiomsRandomized) {
  std::mt19937_64 rng(11);
  for (int n : {1, 3, 4, 5, 7, 8, 12, 20, 24}) {
    for (int t = 0; t < 25; ++t) {
      CycNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(CycNum, EmbedRestrictRoundTrip) {
  std::mt19937_64 rng(13);
  const std::vector<std::pair<int, int>> pairs{{3, 12}, {4, 12}, {4, 8}, {5, 20}, {3, 6}, {7, 28}, {8, 24}, {1, 5}, {5, 40}, {12, 24}};
  int count = 0;
  for (int t = 0; t < 100; ++t) {
    for (auto [m, n] : pairs) {
      CycNum a = random_element(rng, m);
      auto back = a.embed(n).restrict_to(m);
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(back->coeffs(), a.coeffs());
      ++count;
    }
  }
  EXPECT_EQ(count, 1000);
  EXPECT_FALSE(CycNum::zeta(8).restrict_to(4).has_value());
  EXPECT_EQ(finvar::sqrt2().minimized().conductor(), 8);
  EXPECT_EQ(CycNum::zeta(3).embed(24).minimized().conductor(), 3);
}

TEST(CycNum, GaloisAndConjugation) {
  CycNum z = CycNum::zeta(12);
  EXPECT_EQ(z * z.conj(), CycNum(1));
  EXPECT_EQ(finvar::sqrt5().galois(2), -finvar::sqrt5());
  EXPECT_EQ(finvar::sqrt5().galois(4), finvar::sqrt5());
}
