#include <gtest/gtest.h>

#include <random>

#include "finvar/binaryforms.hpp"
#include "finvar/catalog.hpp"

using namespace finvar;

namespace {

const MatGroup& group_of(Polyhedral kind) {
  static const CatalogEntry t = binary_polyhedral(Polyhedral::Tetrahedral);
  static const CatalogEntry o = binary_polyhedral(Polyhedral::Octahedral);
  static const CatalogEntry i = binary_polyhedral(Polyhedral::Icosahedral);
  switch (kind) {
    case Polyhedral::Tetrahedral: return t.group;
    case Polyhedral::Octahedral: return o.group;
    default: return i.group;
  }
}

BinaryForm random_form(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::vector<CycNum> coeffs;
  for (int k = 0; k <= n; ++k) coeffs.emplace_back(Rational(c(rng)));
  return BinaryForm(n, coeffs);
}

}  // namespace

TEST(BinaryForms, NamedFormsPrint) {
  EXPECT_EQ(octahedral_sextic().coeffs.size(), 7u);
  EXPECT_EQ(icosahedral_form().degree, 12);
  // x6 = t1 t2 (t1^4 - t2^4)
  SparsePoly t1 = SparsePoly::variable(2, 0), t2 = SparsePoly::variable(2, 1);
  EXPECT_EQ(octahedral_sextic().to_poly(), t1 * t2 * (t1.pow(4) - t2.pow(4)));
  EXPECT_EQ(BinaryForm::from_poly(icosahedral_form().to_poly()), icosahedral_form());
}

TEST(BinaryForms, IdentityAndCompositionLaw) {
  std::mt19937_64 rng(11);
  const MatGroup& o = group_of(Polyhedral::Octahedral);
  std::uniform_int_distribution<std::size_t> pick(0, o.order() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    BinaryForm f = random_form(rng, 4 + trial % 3);
    EXPECT_EQ(sl2_act(Mat::identity(2), f), f);
    Mat g = o.element(pick(rng)), h = o.element(pick(rng));
    EXPECT_EQ(sl2_act(g * h, f), sl2_act(g, sl2_act(h, f)));
  }
}

TEST(BinaryForms, DiagonalOnSextic) {
  CycNum z8 = CycNum::zeta(8);
  BinaryForm moved = sl2_act(Mat::diag({z8, z8.inverse()}), octahedral_sextic());
  // Each monomial t1^(6-i) t2^i picks up zeta8^(2i-6); only i = 1, 5 occur, giving -1 both times.
  EXPECT_EQ(moved, octahedral_sextic().scaled(CycNum(-1)));
}

TEST(BinaryForms, IcosahedralFormIsInvariant) {
  const MatGroup& i = group_of(Polyhedral::Icosahedral);
  for (std::size_t k = 0; k < i.order(); ++k) EXPECT_EQ(sl2_act(i.element(k), icosahedral_form()), icosahedral_form());
}

TEST(SemiInvariants, CharacterOrders) {
  SemiInvariance t = semi_invariant_character(group_of(Polyhedral::Tetrahedral), tetrahedral_quartic(1));
  ASSERT_TRUE(t.ok);
  EXPECT_EQ(t.order, 3);
  SemiInvariance t2 = semi_invariant_character(group_of(Polyhedral::Tetrahedral), tetrahedral_quartic(-1));
  ASSERT_TRUE(t2.ok);
  EXPECT_EQ(t2.order, 3);
  SemiInvariance o = semi_invariant_character(group_of(Polyhedral::Octahedral), octahedral_sextic());
  ASSERT_TRUE(o.ok);
  EXPECT_EQ(o.order, 2);
  SemiInvariance i = semi_invariant_character(group_of(Polyhedral::Icosahedral), icosahedral_form());
  ASSERT_TRUE(i.ok);
  EXPECT_EQ(i.order, 1);
}

TEST(SemiInvariants, FailureNamesAnElement) {
  BinaryForm f(4, {CycNum(1), CycNum(0), CycNum(0), CycNum(0), CycNum(0)});
  SemiInvariance r = semi_invariant_character(group_of(Polyhedral::Tetrahedral), f);
  EXPECT_FALSE(r.ok);
  ASSERT_TRUE(r.violating_element.has_value());
  const MatGroup& t = group_of(Polyhedral::Tetrahedral);
  BinaryForm moved = sl2_act(t.element(*r.violating_element), f);
  // Not proportional: t1^4 is not moved to a multiple of itself.
  EXPECT_FALSE(moved == f || moved == f.scaled(CycNum(-1)));
}

TEST(SemiInvariants, CharacterIsMultiplicative) {
  const MatGroup& t = group_of(Polyhedral::Tetrahedral);
  SemiInvariance r = semi_invariant_character(t, tetrahedral_quartic(1));
  ASSERT_TRUE(r.ok);
  for (std::size_t a = 0; a < t.generators().size(); ++a) {
    for (std::size_t b = 0; b < t.generators().size(); ++b) {
      auto ia = t.index_of(t.generators()[a]);
      auto ib = t.index_of(t.generators()[b]);
      auto iab = t.index_of(t.generators()[a] * t.generators()[b]);
      ASSERT_TRUE(ia && ib && iab);
      EXPECT_EQ(r.values[*iab], r.values[*ia] * r.values[*ib]);
    }
  }
}

TEST(ApolarPairing, Examples) {
  BinaryForm t1_4(4, {CycNum(1), CycNum(0), CycNum(0), CycNum(0), CycNum(0)});
  BinaryForm t2_4(4, {CycNum(0), CycNum(0), CycNum(0), CycNum(0), CycNum(1)});
  BinaryForm mid(4, {CycNum(0), CycNum(0), CycNum(1), CycNum(0), CycNum(0)});
  EXPECT_EQ(apolar_pairing(t1_4, t2_4), CycNum(1));
  EXPECT_EQ(apolar_pairing(mid, mid), CycNum(Rational(1, 6)));
  // 1*1 + (2 sqrt(-3))^2 / 6 + 1*1 = 2 - 2 = 0.
  EXPECT_TRUE(apolar_pairing(tetrahedral_quartic(1), tetrahedral_quartic(1)).is_zero());
  EXPECT_TRUE(apolar_pairing(tetrahedral_quartic(-1), tetrahedral_quartic(-1)).is_zero());
}

TEST(ApolarPairing, InvariantOnRandomTriples) {
  std::mt19937_64 rng(2024);
  const Polyhedral kinds[] = {Polyhedral::Tetrahedral, Polyhedral::Octahedral, Polyhedral::Icosahedral};
  for (int trial = 0; trial < 100; ++trial) {
    const MatGroup& g = group_of(kinds[trial % 3]);
    std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
    Mat m = g.element(pick(rng));
    BinaryForm f = random_form(rng, 4), h = random_form(rng, 4);
    EXPECT_EQ(apolar_pairing(sl2_act(m, f), sl2_act(m, h)), apolar_pairing(f, h)) << trial;
    EXPECT_EQ(apolar_pairing(f, h), apolar_pairing(h, f));
  }
}
