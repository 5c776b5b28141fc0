#include <gtest/gtest.h>

#include <random>

#include "finvar/catalog.hpp"
#include "finvar/monomial.hpp"

using namespace finvar;

namespace {

IntMatrix adjugate3(const IntMatrix& m) {
  IntMatrix a(3, std::vector<long long>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  }
  return a;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  IntMatrix a = adjugate3(m);
  long long d = int_det(m);
  for (auto& row : a)
    for (auto& x : row) x *= d;  // d = +-1
  return a;
}

long long max_abs(const IntMatrix& m) {
  long long r = 0;
  for (const auto& row : m)
    for (long long x : row) r = std::max(r, std::llabs(x));
  return r;
}

const CatalogEntry& a4_example() {
  static const CatalogEntry e = [] {
    for (auto& x : imprimitive_examples())
      if (x.name == "imprimitive_a4_1_4") return x;
    throw std::runtime_error("missing imprimitive_a4_1_4");
  }();
  return e;
}

}  // namespace

TEST(IntegerLinearAlgebra, Basics) {
  IntMatrix m{{2, 0}, {0, 3}};
  EXPECT_EQ(int_det(m), 6);
  EXPECT_EQ(smith_divisors({{2, 4}, {6, 8}}), (std::vector<long long>{2, 4}));
  EXPECT_EQ(int_str(int_identity(2)), "[[1,0],[0,1]]");
  IntMatrix k = integer_kernel({{1, 1, 1}});
  EXPECT_EQ(k.size(), 2u);
  for (const auto& v : k) EXPECT_EQ(v[0] + v[1] + v[2], 0);
}

TEST(MonomialLattice, SignAction) {
  MonomialLattice l = invariant_monomial_lattice({3, {{CycNum(-1), CycNum(-1), CycNum(1)}}});
  EXPECT_EQ(int_str(l.basis), "[[1,1,0],[0,2,0],[0,0,1]]");
  EXPECT_EQ(l.index_det, 2);
  EXPECT_TRUE(l.indices_agree());
}

TEST(MonomialLattice, OrderFourAction) {
  CycNum i = CycNum::zeta(4);
  MonomialLattice l = invariant_monomial_lattice({3, {{i, i, CycNum(1)}}});
  EXPECT_EQ(l.index_det, 4);
  EXPECT_TRUE(l.indices_agree());
}

TEST(MonomialLattice, TrivialAction) {
  MonomialLattice l = invariant_monomial_lattice({3, {{CycNum(1), CycNum(1), CycNum(1)}}});
  EXPECT_EQ(l.basis, int_identity(3));
  EXPECT_EQ(l.index_det, 1);
}

TEST(MonomialLattice, Pi0OfPermutations) {
  // y_i = x_i / x_4 under the 3-cycle x1 -> x2 -> x3 -> x1.
  EXPECT_EQ(int_str(pi0_of_perm(Perm::from_cycles(4, {{1, 2, 3}}))), "[[0,1,0],[0,0,1],[1,0,0]]");
  // Moving x4 introduces -1 columns.
  EXPECT_EQ(int_str(pi0_of_perm(Perm::from_cycles(4, {{1, 2}, {3, 4}}))), "[[0,1,-1],[1,0,-1],[0,0,-1]]");
}

TEST(MonomialLattice, A4Presentation) {
  auto c = gamma_candidates();
  ASSERT_EQ(c.size(), 3u);
  for (const auto& g : c) EXPECT_TRUE(a4_presentation_check(g.theta, g.delta)) << g.label;
  EXPECT_FALSE(a4_presentation_check(int_identity(3), int_identity(3)));
}

TEST(MonomialLattice, InducedRepresentationOfA4Example) {
  ImprimitiveReduction r = induced_integer_rep(a4_example().group);
  EXPECT_EQ(r.gamma.size(), 12u);
  EXPECT_EQ(r.a_order, 8u);
  EXPECT_EQ(r.lattice.index_det, 4);
  EXPECT_TRUE(r.lattice.indices_agree());
  EXPECT_TRUE(r.lattice_stable);
  EXPECT_TRUE(r.traces_agree);
  auto a4 = a4_reduction(r);
  ASSERT_TRUE(a4.has_value());
  EXPECT_TRUE(a4->pi0_presentation);
  EXPECT_TRUE(a4->pi_presentation);
  EXPECT_EQ(int_str(a4->pi0_theta), "[[0,1,0],[0,0,1],[1,0,0]]");
  EXPECT_EQ(int_str(a4->pi0_delta), "[[0,1,-1],[1,0,-1],[0,0,-1]]");
  EXPECT_EQ(a4->pi0_class.label, "Gamma10");
  EXPECT_NE(a4->pi_class.label, "unclassified");
}

TEST(Classification, CandidatesClassifyAsThemselves) {
  auto c = gamma_candidates();
  for (const auto& g : c) {
    Classification r = classify_gl3z(g.theta, g.delta, c);
    EXPECT_EQ(r.label, g.label);
    ASSERT_TRUE(r.conjugator.has_value());
    EXPECT_EQ(std::llabs(int_det(*r.conjugator)), 1);
  }
}

TEST(Classification, RecoversRandomConjugateOfGamma10) {
  auto c = gamma_candidates();
  const GammaCandidate& g10 = c[1];
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pos(0, 2), coef(-1, 1);
  IntMatrix v;
  for (;;) {
    v = int_identity(3);
    for (int step = 0; step < 4; ++step) {
      int i = pos(rng), j = pos(rng);
      if (i == j) continue;
      IntMatrix e = int_identity(3);
      e[i][j] = coef(rng);
      v = int_mul(e, v);
    }
    if (v != int_identity(3) && max_abs(v) <= 3 && max_abs(unimodular_inverse(v)) <= 3) break;
  }
  IntMatrix vi = unimodular_inverse(v);
  ASSERT_EQ(int_mul(v, vi), int_identity(3));
  IntMatrix theta = int_mul(int_mul(vi, g10.theta), v);
  IntMatrix delta = int_mul(int_mul(vi, g10.delta), v);
  Classification r = classify_gl3z(theta, delta, c, 3);
  EXPECT_EQ(r.label, "Gamma10");
  ASSERT_TRUE(r.conjugator.has_value());
  const IntMatrix& u = *r.conjugator;
  EXPECT_EQ(int_mul(u, theta), int_mul(g10.theta, u));
  EXPECT_EQ(int_mul(u, delta), int_mul(g10.delta, u));
}

TEST(Gamma9, RelationsHoldExactlyWhenBEqualsC) {
  EXPECT_TRUE(gamma9_relations_hold(1, 1));
  EXPECT_TRUE(gamma9_relations_hold(-1, -1));
  EXPECT_FALSE(gamma9_relations_hold(1, -1));
  EXPECT_FALSE(gamma9_relations_hold(-1, 1));
  EXPECT_TRUE(is_identity_map(compose(gamma9_theta(), compose(gamma9_theta(), gamma9_theta()))));
}

TEST(Gamma9, Normalization) {
  CycNum i = CycNum::zeta(4);
  CycNum a1 = i, a2 = i.scaled(Rational(-1)), a3 = CycNum(1);
  Gamma9Normalization n = normalize_gamma9(a1, a2, a3, CycNum(-1), CycNum(-1), CycNum(-1));
  ASSERT_TRUE(n.ok) << n.obstruction;
  ASSERT_EQ(n.lambda.size(), 3u);
  EXPECT_TRUE((n.lambda[0] * a1 * n.lambda[1].inverse()).is_one());
  EXPECT_TRUE((n.lambda[1] * a2 * n.lambda[2].inverse()).is_one());
  EXPECT_TRUE((n.lambda[2] * a3 * n.lambda[0].inverse()).is_one());
  EXPECT_TRUE((n.lambda[2] * n.lambda[2] * CycNum(-1)).is_one());
  EXPECT_EQ(n.b, CycNum(1));
  EXPECT_EQ(n.c, CycNum(-1));

  Gamma9Normalization bad = normalize_gamma9(i, i, i, CycNum(1), CycNum(1), CycNum(1));
  EXPECT_FALSE(bad.ok);
  EXPECT_FALSE(bad.obstruction.empty());
}

TEST(Gamma9, CaseChecks) {
  for (int b : {1, -1}) {
    for (const auto& c : verify_case_gamma9(b)) EXPECT_EQ(c.status, Status::Pass) << c.id << " " << c.actual;
  }
}
