#pragma once

#include <vector>

#include "finvar/catalog.hpp"
#include "finvar/mat.hpp"
#include "finvar/poly.hpp"
#include "finvar/report.hpp"

namespace finvar {

// The five degree-4 invariants of the order-64 group, in x, y, z, u.
std::vector<SparsePoly> igusa_forms();
// The quartic relation among them, as a polynomial in five variables.
SparsePoly igusa_relation();

// A with f_i(g x) = sum_j A_ij f_j(x); throws if g does not preserve the span.
Mat induced_form_action(const Mat& g, const std::vector<SparsePoly>& forms);

// Determinant-one matrices normalizing the order-64 group and acting on the
// six lines of the exterior square through all of S6 (Clifford-type
// generators, conjugated into the quaternion basis E, I, J, K).
std::vector<Mat> normalizer_generators();

struct IgusaOptions {
  CatalogOptions catalog;
  int spanning_bound = 16;
};

std::vector<Check> igusa_checks(const IgusaOptions& opts = {});

}  // namespace finvar
