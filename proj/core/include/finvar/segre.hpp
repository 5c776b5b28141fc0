#pragma once

#include <array>
#include <string>
#include <vector>

#include "finvar/linalg.hpp"
#include "finvar/perm.hpp"
#include "finvar/poly.hpp"
#include "finvar/report.hpp"

namespace finvar {

// Unordered pair of complementary 3-subsets of {1..6}; first holds 1.
struct NodeLabel {
  std::array<int, 3> first{};
  std::array<int, 3> second{};

  static NodeLabel from_sets(std::array<int, 3> a, std::array<int, 3> b);
  NodeLabel moved(const Perm& g) const;
  std::string str() const;  // "<123|456>"
  friend bool operator==(const NodeLabel& a, const NodeLabel& b) {
    return a.first == b.first && a.second == b.second;
  }
};

struct SegreGeometry {
  std::vector<NodeLabel> node_labels;  // 10
  std::vector<Vec> nodes;              // +-1 coordinates in P^5, sum zero
  std::vector<Perm> plane_labels;      // 15 fixed-point-free involutions
  std::vector<Rows> planes;            // x_j + x_sigma(j) = 0, one row per transposition
};

// All ten nodes and fifteen planes, by enumeration.
SegreGeometry enumerate_geometry();

// Node coordinates: +1 on the first set, -1 on the second.
Vec node_point(const NodeLabel& n);
Rows plane_equations(const Perm& sigma);
bool point_on_plane(const Vec& p, const Rows& plane);
// Exact identity: the cubic vanishes on a parametrization of the plane.
bool plane_on_cubic(const Rows& plane);
// On both equations, and the gradient of s3 is proportional to that of s1.
bool node_is_singular(const Vec& p);

struct PlanePair {
  int a = 0;
  int b = 0;
  int intersection_dim = 0;  // projective dimension of the intersection
  bool criteria_hold = false;
};

struct Incidence {
  std::vector<std::vector<int>> nodes_on_plane;  // indices into node_labels
  std::vector<std::vector<int>> planes_through_node;
  std::vector<PlanePair> pairs;  // all 105 unordered pairs
};

Incidence incidence(const SegreGeometry& geo);

struct Sylow3Report {
  std::size_t sylow_count = 0;
  bool bijective = false;      // each node matched to exactly one Sylow subgroup
  bool equivariant = false;    // for all 720 elements and all nodes
  std::size_t node_stabilizer = 0;
  std::size_t plane_stabilizer = 0;
  bool plane_stabilizer_is_centralizer = false;
  bool geometry_equivariant = false;  // coordinates move with the labels
};

Sylow3Report sylow3_correspondence(const SegreGeometry& geo);

// Outer automorphism from the action on the cosets of a transitive S5.
struct OuterAutomorphism {
  std::vector<Perm> transitive_s5;  // sorted elements
  std::pair<Perm, Perm> generators;  // lexicographically first pair found
  std::vector<Perm> domain;          // all_perms(6)
  std::vector<Perm> image;           // image[i] = lambda(domain[i])

  Perm operator()(const Perm& g) const;
};

OuterAutomorphism outer_automorphism();

struct OuterChecks {
  bool homomorphism = false;
  bool bijective = false;
  std::vector<int> transposition_image_type;  // cycle type of lambda((1,2))
  bool square_inner = false;
};

OuterChecks check_outer_automorphism(const OuterAutomorphism& lambda);

std::vector<Perm> standard_s5();  // fixing 6
std::vector<Perm> image_under(const OuterAutomorphism& lambda, const std::vector<Perm>& h);

struct OrbitAnalysis {
  bool transitive = false;
  std::vector<std::size_t> orbit_sizes;  // on the 15 planes, sorted decreasing
  std::size_t plane_stabilizer = 0;      // |H cap St(Pi)| for the first plane
  bool membership_rule = false;          // transitive: Pi(s) in the big orbit iff s in H
  bool small_orbit_meets_in_nodes = false;
};

OrbitAnalysis s5_orbit_analysis(const SegreGeometry& geo, const std::vector<Perm>& h);

struct PencilReport {
  bool plane_in_every_member = false;
  std::size_t base_points = 0;
  bool base_points_are_plane_nodes = false;
  bool discriminant_nonzero = false;
  SparsePoly discriminant;  // in the pencil parameter
};

PencilReport residue_pencil_check(const Perm& sigma);

// s_k = sum x_i^k on six variables.
SparsePoly segre_cubic();

// The printed node label <123|345> repeats 3, so it is not a node; <123|456> is used instead.
inline constexpr const char* kMisprintedNodeLabel = "<123|345>";

std::vector<Check> segre_checks();

}  // namespace finvar
