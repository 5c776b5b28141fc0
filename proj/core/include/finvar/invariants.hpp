#pragma once

#include <string>
#include <vector>

#include "finvar/matgroup.hpp"
#include "finvar/poly.hpp"
#include "finvar/report.hpp"

namespace finvar {

// Power series truncated after degree size()-1.
struct TruncSeries {
  std::vector<Rational> coeffs;

  int bound() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str() const;  // "[c0, c1, ...]"
  // Coefficients of prod 1/(1 - t^d).
  static TruncSeries weighted_hilbert(const std::vector<int>& degrees, int bound);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs == b.coeffs; }
};

// det(t - g) for every element, lowest degree first; element order.
std::vector<std::vector<CycNum>> element_char_polys(const MatGroup& g, int jobs = 1);

TruncSeries molien(const MatGroup& g, int bound, int jobs = 1);
TruncSeries molien_from_char_polys(const std::vector<std::vector<CycNum>>& polys, int bound);

// Average of f(g x) over the group.
SparsePoly reynolds(const MatGroup& g, const SparsePoly& f);
// Reduced echelon basis (graded-lex pivots, leading coefficient 1) of the
// degree-d invariants.
std::vector<SparsePoly> invariant_basis(const MatGroup& g, int d);

struct WeightedPoly {
  int degree = 0;
  SparsePoly poly;
};

struct GeneratorSearch {
  std::vector<WeightedPoly> generators;
  // False when products of the generators fall short of the Molien
  // coefficient at some degree in (dmax, check_until].
  bool exhausted = true;
  std::string warning;
};

// check_until < 0 means 2 * dmax.
GeneratorSearch algebra_generators(const MatGroup& g, int dmax, int check_until = -1);

// Products of generators of weighted degree d, with the exponent vectors used.
struct WeightedMonomials {
  std::vector<std::vector<int>> exponents;
  std::vector<SparsePoly> products;
};
WeightedMonomials weighted_products(const std::vector<WeightedPoly>& gens, int d);

// Basis of the weighted-degree-d relations, as polynomials in one symbol per
// generator (reduced echelon, leading coefficient 1).
std::vector<SparsePoly> relation_space(const std::vector<WeightedPoly>& gens, int d);

bool is_reflection(const Mat& g);
std::size_t count_reflections(const MatGroup& g);

struct StDegreeReport {
  std::size_t order = 0;
  std::size_t reflections = 0;
  TruncSeries molien;
  std::vector<Check> checks;
};

StDegreeReport verify_st_degrees(const MatGroup& g, const std::vector<int>& degrees, int bound, int jobs = 1);

// Dimension of the degree-d part of (R / (modded))^G for invariant homogeneous modded.
int quotient_invariant_dims(const MatGroup& g, const std::vector<SparsePoly>& modded, int d);

}  // namespace finvar
