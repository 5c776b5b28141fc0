#include <gtest/gtest.h>

#include <random>

#include "finvar/invariants.hpp"

using namespace finvar;

namespace {

Mat perm_matrix(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  Mat m(n, 1);
  for (int i = 0; i < n; ++i) m.set(img[i] - 1, i, CycNum(1));
  return m;
}

MatGroup symmetric_perm_group(int n) {
  std::vector<int> t(n), c(n);
  for (int i = 0; i < n; ++i) {
    t[i] = i + 1;
    c[i] = (i + 1) % n + 1;
  }
  std::swap(t[0], t[1]);
  return MatGroup::closure({perm_matrix(t), perm_matrix(c)});
}

// S_n on the hyperplane sum = 0, basis e_i - e_n.
Mat hyperplane_matrix(const std::vector<int>& img) {
  const int n = static_cast<int>(img.size());
  Mat m(n - 1, 1);
  for (int i = 0; i < n - 1; ++i) {
    int a = img[i] - 1, b = img[n - 1] - 1;
    if (a < n - 1) m.set(a, i, m.at(a, i) + CycNum(1));
    if (b < n - 1) m.set(b, i, m.at(b, i) - CycNum(1));
  }
  return m;
}

MatGroup standard_sn(int n) {
  std::vector<int> t(n), c(n);
  for (int i = 0; i < n; ++i) {
    t[i] = i + 1;
    c[i] = (i + 1) % n + 1;
  }
  std::swap(t[0], t[1]);
  return MatGroup::closure({hyperplane_matrix(t), hyperplane_matrix(c)});
}

MatGroup q8() {
  CycNum i = CycNum::zeta(4);
  return MatGroup::closure({Mat::diag({i, -i}), Mat::from_rows({{CycNum(0), i}, {i, CycNum(0)}})});
}

}  // namespace

TEST(Poly, MonomialOrderAndPrinting) {
  auto m2 = monomials_of_degree(3, 2);
  ASSERT_EQ(m2.size(), 6u);
  EXPECT_EQ(mono_exps(m2[0], 3), (std::vector<int>{2, 0, 0}));
  EXPECT_EQ(mono_exps(m2.back(), 3), (std::vector<int>{0, 0, 2}));
  SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  SparsePoly p = (x + y).pow(2) - x.scaled(CycNum(Rational(1, 2)));
  EXPECT_EQ(p.str(), "1 * x1^2 + 2 * x1*x2 + 1 * x2^2 + -1/2 * x1");
  EXPECT_EQ(SparsePoly(2).str(), "0");
}

TEST(Poly, LinearSubstitutionComposes) {
  Mat a = Mat::from_ints({{1, 2}, {0, 1}});
  Mat b = Mat::from_ints({{0, 1}, {-1, 3}});
  SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  SparsePoly f = x.pow(3) + x * y.scaled(CycNum(5)) + SparsePoly::constant(2, CycNum(7));
  // f(a b x) = (f o a)(b x)
  EXPECT_EQ(f.substitute_linear(a * b), f.substitute_linear(a).substitute_linear(b));
}

TEST(Molien, TrivialGroup) {
  MatGroup g = MatGroup::closure({Mat::identity(2)});
  TruncSeries s = molien(g, 6);
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(s.coeffs[d], Rational(d + 1));
  EXPECT_EQ(molien(MatGroup::closure({Mat::identity(1)}), 3).str(), "[1, 1, 1, 1]");
}

TEST(Molien, QuaternionMatchesReynoldsCounts) {
  MatGroup g = q8();
  TruncSeries s = molien(g, 6);
  EXPECT_EQ(s.str(), "[1, 0, 0, 0, 2, 0, 1]");
  for (int d = 0; d <= 6; ++d) EXPECT_EQ(Rational(static_cast<long long>(invariant_basis(g, d).size())), s.coeffs[d]);
}

TEST(Molien, StandardS5) {
  MatGroup g = standard_sn(5);
  ASSERT_EQ(g.order(), 120u);
  EXPECT_EQ(molien(g, 20), TruncSeries::weighted_hilbert({2, 3, 4, 5}, 20));
  for (int d = 0; d <= 6; ++d) {
    EXPECT_EQ(Rational(static_cast<long long>(invariant_basis(g, d).size())), molien(g, 6).coeffs[d]) << d;
  }
}

TEST(Reynolds, AveragesAndIsIdempotent) {
  MatGroup s5 = symmetric_perm_group(5);
  SparsePoly x1 = SparsePoly::variable(5, 0);
  EXPECT_EQ(reynolds(s5, x1 * x1), SparsePoly::power_sum(5, 2).scaled(CycNum(Rational(1, 5))));
  MatGroup g = standard_sn(4);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int t = 0; t < 5; ++t) {
    SparsePoly f(3);
    for (Mono m : monomials_of_degree(3, 3)) f.add_term(m, CycNum(coef(rng)));
    SparsePoly r = reynolds(g, f);
    EXPECT_EQ(reynolds(g, r), r);
    for (const auto& gen : g.generators()) EXPECT_EQ(r.substitute_linear(gen), r);
  }
}

TEST(InvariantBasis, FixedByGeneratorsAndDegreeZero) {
  MatGroup g = q8();
  auto b0 = invariant_basis(g, 0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_EQ(b0[0], SparsePoly::constant(2, CycNum(1)));
  for (const auto& f : invariant_basis(g, 4)) {
    for (const auto& gen : g.generators()) EXPECT_EQ(f.substitute_linear(gen), f);
  }
  MatGroup s6 = standard_sn(6);
  EXPECT_EQ(invariant_basis(s6, 4).size(), 2u);
}

TEST(InvariantBasis, MonomialAndGeneralPathsAgree) {
  // The permutation group is monomial; conjugating by a shear forces the general path.
  MatGroup perm = symmetric_perm_group(3);
  Mat p = Mat::from_ints({{1, 1, 0}, {0, 1, 0}, {0, 0, 1}});
  Mat pinv = p.inverse();
  std::vector<Mat> conj;
  for (const auto& g : perm.generators()) conj.push_back(pinv * g * p);
  MatGroup other = MatGroup::closure(conj);
  for (int d = 0; d <= 5; ++d) {
    auto a = invariant_basis(perm, d);
    std::vector<SparsePoly> moved;
    for (const auto& f : a) moved.push_back(f.substitute_linear(p));
    EXPECT_EQ(poly_echelon_basis(moved, 3), invariant_basis(other, d)) << d;
  }
}

TEST(AlgebraGenerators, Examples) {
  auto triv = algebra_generators(MatGroup::closure({Mat::identity(1)}), 3);
  ASSERT_EQ(triv.generators.size(), 1u);
  EXPECT_EQ(triv.generators[0].degree, 1);
  EXPECT_TRUE(triv.exhausted);
  auto s5 = algebra_generators(standard_sn(5), 6);
  std::vector<int> degs;
  for (const auto& g : s5.generators) degs.push_back(g.degree);
  EXPECT_EQ(degs, (std::vector<int>{2, 3, 4, 5}));
  EXPECT_TRUE(s5.exhausted);
  auto short_run = algebra_generators(standard_sn(5), 3, 6);
  EXPECT_FALSE(short_run.exhausted);
  EXPECT_FALSE(short_run.warning.empty());
}

TEST(RelationSpace, OneVariable) {
  SparsePoly x = SparsePoly::variable(1, 0);
  auto rel = relation_space({{1, x}, {2, x * x}}, 2);
  ASSERT_EQ(rel.size(), 1u);
  SparsePoly g1 = SparsePoly::variable(2, 0), g2 = SparsePoly::variable(2, 1);
  EXPECT_EQ(rel[0], g1 * g1 - g2);
  EXPECT_TRUE(relation_space({{1, x}, {2, x * x}}, 1).empty());
}

TEST(Reflections, Detection) {
  EXPECT_TRUE(is_reflection(Mat::diag({CycNum(1), CycNum(1), CycNum(1), CycNum(-1)})));
  EXPECT_FALSE(is_reflection(Mat::identity(3)));
  EXPECT_FALSE(is_reflection(Mat::diag({omega(), omega(), CycNum(1)})));
  EXPECT_EQ(count_reflections(standard_sn(5)), 10u);
}

TEST(Reflections, SymmetricGroupDegrees) {
  StDegreeReport r = verify_st_degrees(standard_sn(4), {2, 3, 4}, 16);
  EXPECT_EQ(r.reflections, 6u);
  for (const auto& c : r.checks) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.actual;
  StDegreeReport bad = verify_st_degrees(standard_sn(4), {2, 2, 6}, 10);
  EXPECT_EQ(bad.checks[0].status, Status::Fail);
}

TEST(QuotientDims, SymmetricGroupModuloS1S3) {
  MatGroup s6 = symmetric_perm_group(6);
  std::vector<SparsePoly> modded{SparsePoly::power_sum(6, 1), SparsePoly::power_sum(6, 3)};
  EXPECT_EQ(quotient_invariant_dims(s6, modded, 2), 1);
  TruncSeries want = TruncSeries::weighted_hilbert({2, 4, 5, 6}, 10);
  for (int d = 0; d <= 10; ++d) EXPECT_EQ(Rational(quotient_invariant_dims(s6, modded, d)), want.coeffs[d]) << d;
}
