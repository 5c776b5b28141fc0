#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finvar/groupfile.hpp"
#include "finvar/matgroup.hpp"
#include "finvar/report.hpp"
#include "finvar/split.hpp"

namespace finvar {

struct CatalogOptions {
  std::size_t cap = 1000000;
  int jobs = 1;
};

struct CatalogEntry {
  std::string name;
  std::string provenance;
  std::vector<Mat> generators;
  std::size_t expected_order = 0;
  std::size_t expected_scalar_quotient = 0;  // 0 when not asserted
  bool special_linear = false;
  MatGroup group;
  std::size_t scalar_quotient = 0;
  // Order, scalar quotient, determinant and entry-specific checks.
  std::vector<Check> checks;

  bool ok() const { return all_pass(checks); }
};

struct UnknownCatalogName : std::invalid_argument {
  explicit UnknownCatalogName(const std::string& name) : std::invalid_argument("unknown catalog entry: " + name) {}
};

struct CatalogInfo {
  std::string name;
  std::size_t expected_order = 0;
  std::size_t expected_scalar_quotient = 0;
  std::string summary;
};

const std::vector<CatalogInfo>& catalog_index();
CatalogEntry build_catalog_entry(const std::string& name, const CatalogOptions& opts = {});
GroupFile to_group_file(const CatalogEntry& e);

// Closes the generators and records order, scalar-quotient and determinant checks.
CatalogEntry make_entry(std::string name, std::vector<Mat> gens, std::size_t expected_order,
                        std::size_t expected_scalar_quotient, bool special_linear, std::string provenance,
                        const CatalogOptions& opts, ClosureOptions closure = {});

// Quaternion units in SL(2): I = diag(i, -i), J = [[0, i], [i, 0]].
Mat quaternion_i();
Mat quaternion_j();
CatalogEntry quaternion_q8(const CatalogOptions& opts = {});

enum class Polyhedral { Tetrahedral, Octahedral, Icosahedral };
CatalogEntry binary_polyhedral(Polyhedral kind, const CatalogOptions& opts = {});

// v -> a v b^{-1} on 2x2 matrices (row-major coordinates).
Mat psi_matrix(const Mat& a, const Mat& b);
CatalogEntry psi(const CatalogEntry& a, const CatalogEntry& b, const std::string& name,
                 const CatalogOptions& opts = {});

// v -> a v b^{-1} in the basis E, I, J, K of the quaternions.
Mat quaternion_rho(const Mat& a, const Mat& b);
CatalogEntry rho_q8xq8(const CatalogOptions& opts = {});

struct GroupN {
  CatalogEntry n;
  Mat s;  // zeta8 * diag(i, i, 1, 1)
  Mat b;  // zeta8 * diag(1, 1, 1, -1)
};
GroupN group_n_and_friends(const CatalogOptions& opts = {});

enum class SchurKind { S6_4dim, A7_8dim };
struct SchurCover {
  CatalogEntry entry;
  std::vector<Mat> m;  // anticommuting square roots of -E
  std::vector<Mat> t;  // lifts of the adjacent transpositions
};
// The entry's checks include every anticommutation and braid relation; for
// the 8-dimensional case also the parity count inside the full double cover.
SchurCover schur_cover(SchurKind kind, const CatalogOptions& opts = {});

struct A7Projective {
  Mat s;
  Mat w;
  CatalogEntry entry;  // closure of {s, w}; checks cover the permutation correspondence
};
A7Projective a7_projective_generators(const CatalogOptions& opts = {});

// SL(2, F7) on functions on F7^2 \ 0 that transform by the quadratic character.
CatalogEntry sl2_f7_via_functions(const CatalogOptions& opts = {}, bool split = true);

// st32, st32_sl4, a5_pm_e_3dim, klein_pm_e_3dim.
std::vector<CatalogEntry> reflection_groups_3d_4d(const CatalogOptions& opts = {});
// Degrees of the reflection groups, by entry name.
std::vector<int> reflection_degrees(const std::string& name);
// Embedded data file contents by file name.
std::string embedded_group_text(const std::string& file_name);

// Generators on P^1 x P^1 x P^1 in Segre coordinates, for the order-3 and order-2 generators of A4.
std::pair<Mat, Mat> gamma9_segre_generators();

// imprimitive_a4_1_4, imprimitive_2_2, gamma9_bminus1_8dim.
std::vector<CatalogEntry> imprimitive_examples(const CatalogOptions& opts = {});

Mat permutation_matrix(const Perm& p);  // row i has its 1 in column p(i)
Mat standard_sn_matrix(const Perm& p);  // action on the hyperplane, basis e_i - e_n
CatalogEntry standard_s5_4dim(const CatalogOptions& opts = {});
CatalogEntry s6_perm_6dim(const CatalogOptions& opts = {});

}  // namespace finvar
