#include <gtest/gtest.h>

#include <algorithm>

#include "finvar/segre.hpp"

using namespace finvar;

namespace {

const SegreGeometry& geo() {
  static const SegreGeometry g = enumerate_geometry();
  return g;
}

int plane_index(const Perm& p) {
  const auto& labels = geo().plane_labels;
  auto it = std::find(labels.begin(), labels.end(), p);
  return it == labels.end() ? -1 : static_cast<int>(it - labels.begin());
}

const PlanePair* find_pair(const Incidence& inc, int a, int b) {
  if (a > b) std::swap(a, b);
  for (const auto& p : inc.pairs)
    if (p.a == a && p.b == b) return &p;
  return nullptr;
}

}  // namespace

TEST(Segre, Counts) {
  EXPECT_EQ(geo().nodes.size(), 10u);
  EXPECT_EQ(geo().planes.size(), 15u);
  for (const auto& p : geo().plane_labels) EXPECT_EQ(p.cycle_type(), (std::vector<int>{2, 2, 2}));
}

TEST(Segre, NodeLabels) {
  EXPECT_EQ(NodeLabel::from_sets({4, 5, 6}, {3, 2, 1}).str(), "<123|456>");
  NodeLabel n = NodeLabel::from_sets({1, 2, 3}, {4, 5, 6});
  EXPECT_EQ(n.moved(Perm::from_cycles(6, {{1, 4}})).str(), "<156|234>");
  Vec p = node_point(n);
  EXPECT_EQ(p[0], CycNum(1));
  EXPECT_EQ(p[5], CycNum(-1));
}

TEST(Segre, NodesAreSingularAndPlanesLieOnCubic) {
  for (const auto& p : geo().nodes) EXPECT_TRUE(node_is_singular(p));
  for (const auto& pl : geo().planes) EXPECT_TRUE(plane_on_cubic(pl));
  // A smooth point: (1, -1, 0, 0, 0, 0) has s1 = s3 = 0 but gradients (1,...) and (3, 3, 0, ...) differ.
  Vec smooth{CycNum(1), CycNum(-1), CycNum(0), CycNum(0), CycNum(0), CycNum(0)};
  EXPECT_FALSE(node_is_singular(smooth));
}

TEST(Segre, Incidence) {
  Incidence inc = incidence(geo());
  for (const auto& ns : inc.nodes_on_plane) EXPECT_EQ(ns.size(), 4u);
  for (const auto& ps : inc.planes_through_node) EXPECT_EQ(ps.size(), 6u);
  ASSERT_EQ(inc.pairs.size(), 105u);
  int points = 0, lines = 0;
  for (const auto& p : inc.pairs) {
    EXPECT_TRUE(p.criteria_hold);
    if (p.intersection_dim == 0) ++points;
    if (p.intersection_dim == 1) ++lines;
  }
  EXPECT_EQ(points, 60);
  EXPECT_EQ(lines, 45);
}

TEST(Segre, IntersectionExamples) {
  Incidence inc = incidence(geo());
  int a = plane_index(Perm::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
  int b = plane_index(Perm::from_cycles(6, {{1, 5}, {2, 6}, {3, 4}}));
  int c = plane_index(Perm::from_cycles(6, {{1, 4}, {2, 6}, {3, 5}}));
  ASSERT_GE(a, 0);
  ASSERT_GE(b, 0);
  ASSERT_GE(c, 0);
  const PlanePair* ab = find_pair(inc, a, b);
  const PlanePair* ac = find_pair(inc, a, c);
  ASSERT_TRUE(ab && ac);
  EXPECT_EQ(ab->intersection_dim, 0);
  EXPECT_EQ(ac->intersection_dim, 1);
}

TEST(Segre, SylowCorrespondence) {
  Sylow3Report r = sylow3_correspondence(geo());
  EXPECT_EQ(r.sylow_count, 10u);
  EXPECT_TRUE(r.bijective);
  EXPECT_TRUE(r.equivariant);
  EXPECT_EQ(r.node_stabilizer, 72u);
  EXPECT_EQ(r.plane_stabilizer, 48u);
  EXPECT_TRUE(r.plane_stabilizer_is_centralizer);
  EXPECT_TRUE(r.geometry_equivariant);
}

TEST(Segre, OuterAutomorphism) {
  OuterAutomorphism lambda = outer_automorphism();
  EXPECT_EQ(lambda.transitive_s5.size(), 120u);
  OuterChecks c = check_outer_automorphism(lambda);
  EXPECT_TRUE(c.homomorphism);
  EXPECT_TRUE(c.bijective);
  EXPECT_EQ(c.transposition_image_type, (std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(c.square_inner);
}

TEST(Segre, S5Orbits) {
  auto standard = standard_s5();
  EXPECT_EQ(standard.size(), 120u);
  OrbitAnalysis s = s5_orbit_analysis(geo(), standard);
  EXPECT_FALSE(s.transitive);
  EXPECT_EQ(s.orbit_sizes, (std::vector<std::size_t>{15}));
  EXPECT_EQ(s.plane_stabilizer, 8u);

  OuterAutomorphism lambda = outer_automorphism();
  OrbitAnalysis t = s5_orbit_analysis(geo(), image_under(lambda, standard));
  EXPECT_TRUE(t.transitive);
  EXPECT_EQ(t.orbit_sizes, (std::vector<std::size_t>{10, 5}));
  EXPECT_TRUE(t.membership_rule);
  EXPECT_TRUE(t.small_orbit_meets_in_nodes);
}

TEST(Segre, ResiduePencil) {
  PencilReport r = residue_pencil_check(geo().plane_labels.front());
  EXPECT_TRUE(r.plane_in_every_member);
  EXPECT_EQ(r.base_points, 4u);
  EXPECT_TRUE(r.base_points_are_plane_nodes);
  EXPECT_TRUE(r.discriminant_nonzero);
  EXPECT_FALSE(r.discriminant.is_zero());
}
