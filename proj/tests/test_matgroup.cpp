#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "finvar/matgroup.hpp"
#include "finvar/split.hpp"

using namespace finvar;

namespace {

const CycNum i4 = CycNum::zeta(4);

Mat q_i() { return Mat::diag({i4, -i4}); }
Mat q_j() { return Mat::from_rows({{CycNum(0), i4}, {i4, CycNum(0)}}); }

// Coordinates of a 2x2 matrix in the basis E, I, J, K.
Vec quat_coords(const Mat& v) {
  const CycNum half(Rational(1, 2));
  CycNum p = v.at(0, 0), q = v.at(0, 1), r = v.at(1, 0), s = v.at(1, 1);
  CycNum inv_2i = (CycNum(2) * i4).inverse();
  return {(p + s) * half, (p - s) * inv_2i, (q + r) * inv_2i, (r - q) * half};
}

Mat rho(const Mat& a, const Mat& b) {
  const Mat basis[4] = {Mat::identity(2, 4), q_i(), q_j(), q_i() * q_j()};
  Mat out(4, 4);
  Mat binv = b.inverse();
  for (int c = 0; c < 4; ++c) {
    Vec col = quat_coords(a * basis[c] * binv);
    for (int r = 0; r < 4; ++r) out.set(r, c, col[r]);
  }
  return out;
}

std::vector<Mat> n_generators() {
  Mat e = Mat::identity(2, 4);
  return {rho(q_i(), e), rho(q_j(), e), rho(e, q_i()), rho(e, q_j()), Mat::scalar(4, i4)};
}

Mat segre_s() { return Mat::diag({i4, i4, CycNum(1), CycNum(1)}).scaled(CycNum::zeta(8)); }
Mat segre_b() { return Mat::diag({CycNum(1), CycNum(1), CycNum(1), CycNum(-1)}).scaled(CycNum::zeta(8)); }

std::set<std::string> element_strings(const MatGroup& g) {
  std::set<std::string> s;
  for (std::size_t i = 0; i < g.order(); ++i) s.insert(g.element(i).str());
  return s;
}

}  // namespace

TEST(MatGroup, QuaternionAndTrivial) {
  EXPECT_EQ(MatGroup::closure({q_i(), q_j()}).order(), 8u);
  EXPECT_EQ(MatGroup::closure({Mat::identity(3)}).order(), 1u);
}

TEST(MatGroup, GroupNOrderAndScalars) {
  MatGroup n = MatGroup::closure(n_generators());
  EXPECT_EQ(n.order(), 64u);
  ScalarInfo si = scalar_subgroup(n);
  EXPECT_EQ(si.scalar_order, 4u);
  EXPECT_EQ(si.quotient_order, 16u);
  for (const auto& g : n_generators()) EXPECT_TRUE(g.det().is_one());
  // rho alone: order 32
  auto gens = n_generators();
  gens.pop_back();
  EXPECT_EQ(MatGroup::closure(gens).order(), 32u);
}

TEST(MatGroup, ModularStorageAgreesWithExact) {
  ClosureOptions ex, mo;
  ex.storage = Storage::Exact;
  mo.storage = Storage::Modular;
  MatGroup a = MatGroup::closure(n_generators(), ex);
  MatGroup b = MatGroup::closure(n_generators(), mo);
  ASSERT_EQ(a.order(), b.order());
  for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(a.element(i), b.element(i));
  EXPECT_EQ(b.index_of(segre_s() * segre_s()), a.index_of(segre_s() * segre_s()));
}

TEST(MatGroup, NormalizerElements) {
  MatGroup n = MatGroup::closure(n_generators());
  EXPECT_TRUE(segre_s().det().is_one());
  EXPECT_TRUE(segre_b().det().is_one());
  EXPECT_TRUE(normalizes(segre_s(), n));
  EXPECT_TRUE(normalizes(segre_b(), n));
  Mat shear = Mat::from_ints({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 1}, {0, 0, 1, 1}});
  EXPECT_FALSE(normalizes(shear, n));
  // Brute-force oracle: conjugate every element.
  Mat inv = shear.inverse();
  bool all_inside = true;
  for (std::size_t i = 0; i < n.order(); ++i) all_inside = all_inside && n.contains(shear * n.element(i) * inv);
  EXPECT_FALSE(all_inside);
}

TEST(MatGroup, ExteriorSquare) {
  EXPECT_TRUE(exterior_square(Mat::identity(4)).is_identity());
  MatGroup n = MatGroup::closure(n_generators());
  for (std::size_t i = 0; i < n.order(); ++i) EXPECT_TRUE(exterior_square(n.element(i)).is_diagonal());
  Mat s2 = exterior_square(segre_s());
  // columns: images of w12+, w12-, w13+, w13-, w14+, w14-
  EXPECT_EQ(s2.at(1, 0), -i4);
  EXPECT_EQ(s2.at(0, 1), -i4);
  EXPECT_TRUE(s2.at(0, 0).is_zero());
  for (int k = 2; k < 6; ++k) EXPECT_EQ(s2.at(k, k), CycNum(-1));
  Mat g = segre_s() * n_generators()[1];
  Mat h = segre_b() * n_generators()[2];
  EXPECT_EQ(exterior_square(g * h), exterior_square(g) * exterior_square(h));
}

TEST(MatGroup, LinePermutationHom) {
  auto gens = n_generators();
  gens.push_back(segre_s());
  gens.push_back(segre_b());
  MatGroup g = MatGroup::closure(gens);
  PermHom hom = line_permutation_hom(g);
  EXPECT_EQ(hom.degree, 6);
  EXPECT_EQ(hom.images[*g.index_of(segre_s())].str(), "(1,2)");
  EXPECT_EQ(hom.images[*g.index_of(segre_b())].str(), "(1,2)(3,4)(5,6)");
  MatGroup n = MatGroup::closure(n_generators());
  for (std::size_t i = 0; i < n.order(); ++i) EXPECT_TRUE(hom.images[*g.index_of(n.element(i))].is_identity());
  EXPECT_EQ(hom.kernel.order(), 64u);
  EXPECT_EQ(hom.image_order, 4u);
  // homomorphism on all pairs of generators
  for (const auto& a : g.generators()) {
    for (const auto& b : g.generators()) {
      auto ia = *g.index_of(a), ib = *g.index_of(b), iab = *g.index_of(a * b);
      EXPECT_EQ(hom.images[iab], hom.images[ia] * hom.images[ib]);
    }
  }
}

TEST(MatGroup, LagrangeAndGeneratorOrder) {
  auto gens = n_generators();
  MatGroup n = MatGroup::closure(gens);
  std::reverse(gens.begin(), gens.end());
  MatGroup n2 = MatGroup::closure(gens);
  EXPECT_EQ(element_strings(n), element_strings(n2));
  for (std::size_t i = 0; i < n.order(); ++i) EXPECT_EQ(n.element(i), n2.element(i));
  MatGroup sub = MatGroup::closure({gens[0], gens[2]});
  EXPECT_EQ(n.order() % sub.order(), 0u);
  EXPECT_EQ(n.order() % scalar_subgroup(n).scalar_order, 0u);
}

TEST(MatGroup, InfiniteGroupHitsCap) {
  ClosureOptions o;
  o.cap = 500;
  EXPECT_THROW(MatGroup::closure({Mat::from_ints({{1, 1}, {0, 1}})}, o), GroupTooLarge);
  try {
    MatGroup::closure({Mat::from_ints({{2, 0}, {0, 1}})}, o);
    FAIL();
  } catch (const GroupTooLarge& e) {
    EXPECT_STREQ(e.what(), "group too large or infinite");
  }
}

TEST(MatGroup, ParallelClosureMatchesSequential) {
  auto gens = n_generators();
  gens.push_back(segre_s());
  ClosureOptions par;
  par.jobs = 3;
  MatGroup a = MatGroup::closure(gens);
  MatGroup b = MatGroup::closure(gens, par);
  ASSERT_EQ(a.order(), b.order());
  for (std::size_t i = 0; i < a.order(); ++i) EXPECT_EQ(a.element(i), b.element(i));
}

TEST(Split, PermutationModuleOfS3) {
  Mat t = Mat::from_ints({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  Mat c = Mat::from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  MatGroup g = MatGroup::closure({t, c});
  auto pieces = equivariant_split(g);
  ASSERT_EQ(pieces.size(), 2u);
  std::vector<int> dims{pieces[0].dim(), pieces[1].dim()};
  std::sort(dims.begin(), dims.end());
  EXPECT_EQ(dims, (std::vector<int>{1, 2}));
  Rows all;
  for (const auto& p : pieces) {
    EXPECT_TRUE(is_invariant_subspace(g, p.basis));
    all.insert(all.end(), p.basis.begin(), p.basis.end());
  }
  EXPECT_EQ(rank(all), 3);
}

TEST(Split, IrreducibleQuaternionReportsNotFound) {
  MatGroup q = MatGroup::closure({q_i(), q_j()});
  try {
    equivariant_split(q);
    FAIL();
  } catch (const SplitNotFound& e) {
    EXPECT_STREQ(e.what(), "irreducible or splitting not found");
  }
}

TEST(Split, IsotypicPiecesViaSpinning) {
  // Q8 acting on C^2 (x) C^2 through the first factor: two copies of one irreducible.
  Mat e = Mat::identity(2, 4);
  MatGroup g = MatGroup::closure({q_i().kron(e), q_j().kron(e)});
  auto pieces = equivariant_split(g);
  ASSERT_EQ(pieces.size(), 2u);
  for (const auto& p : pieces) {
    EXPECT_EQ(p.dim(), 2);
    EXPECT_TRUE(acts_faithfully(g, p.basis));
  }
}
