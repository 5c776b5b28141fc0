#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "finvar/mat.hpp"

namespace finvar {

// Packed exponent vector: total degree in the top byte, then one byte per
// variable with x1 most significant. Integer order is graded lex.
using Mono = uint64_t;
constexpr int kMaxVars = 7;
constexpr int kMaxDegree = 255;

Mono mono_make(const std::vector<int>& exps);
std::vector<int> mono_exps(Mono m, int nvars);
int mono_degree(Mono m);
int mono_exp(Mono m, int var);
Mono mono_var(int var);
// Monomials of total degree d, descending graded-lex.
std::vector<Mono> monomials_of_degree(int nvars, int d);

class SparsePoly {
 public:
  using Terms = std::map<Mono, CycNum, std::greater<>>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars);
  static SparsePoly constant(int nvars, const CycNum& c);
  static SparsePoly variable(int nvars, int var);  // 0-based
  static SparsePoly monomial(int nvars, Mono m, const CycNum& c = CycNum(1));
  static SparsePoly power_sum(int nvars, int k);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  bool is_homogeneous() const;
  CycNum coeff(Mono m) const;
  // Leading term in graded-lex order.
  Mono leading() const { return terms_.begin()->first; }

  void add_term(Mono m, const CycNum& c);
  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly operator-() const;
  SparsePoly scaled(const CycNum& c) const;
  SparsePoly pow(int e) const;
  // Divide by the leading coefficient.
  SparsePoly monic() const;

  // x_i -> images[i].
  SparsePoly substitute(const std::vector<SparsePoly>& images) const;
  // x_i -> sum_j g(i, j) x_j.
  SparsePoly substitute_linear(const Mat& g) const;
  CycNum eval(const Vec& point) const;
  SparsePoly derivative(int var) const;

  // Terms in descending graded-lex order as "coef * x1^a1*x2^a2 + ...".
  std::string str(const std::vector<std::string>& names = {}) const;
  friend bool operator==(const SparsePoly& a, const SparsePoly& b);

 private:
  int nvars_ = 0;
  Terms terms_;
};

// Linear substitution x -> g x with memoized monomial images.
class LinearSubstitution {
 public:
  explicit LinearSubstitution(const Mat& g);
  SparsePoly apply(const SparsePoly& f);
  SparsePoly image(Mono m);

 private:
  Mat g_;
  int n_;
  bool monomial_;
  std::vector<int> target_;      // monomial case: x_i -> c_i x_target
  std::vector<CycNum> scale_;
  std::vector<SparsePoly> forms_;
  std::map<Mono, SparsePoly> memo_;
};

// Coefficient rows of polys over the union of their monomials, columns in
// descending graded-lex order.
struct PolyMatrix {
  std::vector<Mono> columns;
  Rows rows;
};
PolyMatrix poly_matrix(const std::vector<SparsePoly>& polys);
int poly_rank(const std::vector<SparsePoly>& polys);
// Reduced echelon basis of the span, as polynomials with leading coefficient 1.
std::vector<SparsePoly> poly_echelon_basis(const std::vector<SparsePoly>& polys, int nvars);

}  // namespace finvar
