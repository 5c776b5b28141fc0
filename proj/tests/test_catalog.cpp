#include <gtest/gtest.h>

#include <set>

#include "finvar/catalog.hpp"

using namespace finvar;

TEST(Catalog, IndexListsEveryEntry) {
  const auto& idx = catalog_index();
  EXPECT_GE(idx.size(), 15u);
  std::set<std::string> names;
  for (const auto& info : idx) {
    EXPECT_TRUE(names.insert(info.name).second) << info.name;
    EXPECT_GT(info.expected_order, 0u) << info.name;
  }
  EXPECT_TRUE(names.count("group_n"));
  EXPECT_TRUE(names.count("binary_icosahedral"));
}

TEST(Catalog, UnknownName) { EXPECT_THROW(build_catalog_entry("no_such_group"), UnknownCatalogName); }

TEST(Catalog, BinaryPolyhedralOrders) {
  EXPECT_EQ(binary_polyhedral(Polyhedral::Tetrahedral).group.order(), 24u);
  EXPECT_EQ(binary_polyhedral(Polyhedral::Octahedral).group.order(), 48u);
  EXPECT_EQ(binary_polyhedral(Polyhedral::Icosahedral).group.order(), 120u);
  EXPECT_EQ(quaternion_q8().group.order(), 8u);
}

TEST(Catalog, QuickEntriesPassTheirChecks) {
  for (const char* name : {"quaternion_q8", "binary_tetrahedral", "binary_octahedral", "binary_icosahedral",
                           "psi_tt", "rho_q8xq8", "group_n", "standard_s5_4dim", "imprimitive_a4_1_4"}) {
    CatalogEntry e = build_catalog_entry(name);
    EXPECT_TRUE(e.ok()) << name;
    EXPECT_EQ(e.group.order(), e.expected_order) << name;
    for (const auto& c : e.checks) EXPECT_EQ(c.status, Status::Pass) << name << " " << c.id;
  }
}

TEST(Catalog, GroupNAndFriends) {
  GroupN g = group_n_and_friends();
  EXPECT_EQ(g.n.group.order(), 64u);
  EXPECT_TRUE(g.s.det().is_one());
  EXPECT_TRUE(g.b.det().is_one());
  EXPECT_TRUE(normalizes(g.s, g.n.group));
  EXPECT_TRUE(normalizes(g.b, g.n.group));
}

TEST(Catalog, ExportRoundTrip) {
  CatalogEntry e = build_catalog_entry("psi_tt");
  GroupFile f = parse_group_text(format_group_file(to_group_file(e)));
  EXPECT_EQ(MatGroup::closure(f.generators).order(), e.group.order());
}

TEST(Catalog, CapIsEnforced) {
  CatalogOptions small;
  small.cap = 10;
  EXPECT_THROW(binary_polyhedral(Polyhedral::Icosahedral, small), std::exception);
}

TEST(Catalog, ReflectionDegrees) {
  auto d = reflection_degrees("st32");
  long long prod = 1;
  for (int x : d) prod *= x;
  EXPECT_EQ(d.size(), 4u);
  EXPECT_EQ(prod, 155520);
}
