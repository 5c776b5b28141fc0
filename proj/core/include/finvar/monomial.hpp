#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finvar/matgroup.hpp"
#include "finvar/perm.hpp"
#include "finvar/poly.hpp"
#include "finvar/report.hpp"

namespace finvar {

using IntMatrix = std::vector<std::vector<long long>>;

IntMatrix int_identity(int n);
IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b);
long long int_det(const IntMatrix& a);
std::string int_str(const IntMatrix& a);  // "[[0,1,0],[0,0,1],[1,0,0]]"

// Hermite-style basis (rows) of the integer kernel { v : M v = 0 }.
IntMatrix integer_kernel(const IntMatrix& m);
// Diagonal of the Smith normal form (nonzero elementary divisors, positive).
std::vector<long long> smith_divisors(const IntMatrix& m);

// Diagonal action of an abelian group on Laurent variables y_1..y_n.
struct DiagAction {
  int n = 0;
  std::vector<std::vector<CycNum>> elements;  // generators suffice
};

struct MonomialLattice {
  IntMatrix basis;  // rows: exponent vectors of a basis of invariant monomials
  long long index_det = 0;
  long long index_smith = 0;
  long long character_group_order = 0;
  bool indices_agree() const {
    return index_det == index_smith && index_smith == character_group_order;
  }
};

MonomialLattice invariant_monomial_lattice(const DiagAction& a);

struct IntRep {
  std::vector<std::string> generator_names;
  std::vector<IntMatrix> matrices;
};

// Row i is the exponent vector of the image of y_i = x_i / x_{n+1}
// under x_i -> x_{sigma(i)}.
IntMatrix pi0_of_perm(const Perm& sigma);
// Column of the nonzero entry in each row of a monomial matrix.
Perm monomial_permutation(const Mat& g);

struct ImprimitiveReduction {
  std::vector<Perm> gamma;  // distinct line permutations, sorted
  DiagAction a;             // kernel, acting on y
  std::size_t a_order = 0;
  MonomialLattice lattice;
  IntRep pi0;  // on the images of the group's generators
  IntRep pi;
  bool lattice_stable = false;
  bool traces_agree = false;  // over every element of gamma
};

// G must be monomial (imprimitive of type 1^n in the given coordinates).
ImprimitiveReduction induced_integer_rep(const MatGroup& g);

// B pi0 B^{-1} for the lattice basis B (rows); nullopt if not integral.
std::optional<IntMatrix> restrict_to_lattice(const IntMatrix& pi0, const IntMatrix& basis);

bool a4_presentation_check(const IntMatrix& theta, const IntMatrix& delta);

struct GammaCandidate {
  std::string label;
  IntMatrix theta;
  IntMatrix delta;
};
std::vector<GammaCandidate> gamma_candidates();

struct Classification {
  std::string label = "unclassified";
  std::optional<IntMatrix> conjugator;  // U with U pi(g) = Gamma(g) U
};

// Searches integer intertwiners with entries in [-bound, bound] and det +-1.
Classification classify_gl3z(const IntMatrix& theta, const IntMatrix& delta,
                             const std::vector<GammaCandidate>& candidates, int entry_bound = 2);

// Rational function in a fixed number of variables, compared by cross-multiplication.
struct RatFunc {
  SparsePoly num;
  SparsePoly den;

  static RatFunc poly(const SparsePoly& p);
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc substitute(const std::vector<RatFunc>& images) const;
  bool equals(const RatFunc& o) const;
};

// Action (z1, z2, z3) -> images on three variables.
using RationalMap = std::vector<RatFunc>;
RationalMap compose(const RationalMap& outer, const RationalMap& inner);  // outer(inner(z))
bool is_identity_map(const RationalMap& m);

RationalMap gamma9_theta();
RationalMap gamma9_delta(const CycNum& b, const CycNum& c);

// A4 relations for the normalized action hold exactly when b = c, over b, c in {1, -1}.
bool gamma9_relations_hold(int b, int c);

struct Gamma9Normalization {
  bool ok = false;
  std::string obstruction;
  std::vector<CycNum> lambda;  // z_i -> lambda_i z_i
  CycNum b;
  CycNum c;
};

// Rescales (a1 z2, a2 z3, a3 z1) <- z -> (b/z1, c z2, b'/z3) to a1 = a2 = a3 = b' = 1.
Gamma9Normalization normalize_gamma9(const CycNum& a1, const CycNum& a2, const CycNum& a3, const CycNum& b,
                                     const CycNum& c, const CycNum& b_prime);

std::vector<Check> verify_case_gamma9(int b);

// Dimension-4 case with Gamma = A4: theta = (1,2,3), delta = (1,2)(3,4) taken from the image.
struct A4Reduction {
  IntMatrix pi0_theta, pi0_delta, pi_theta, pi_delta;
  bool pi0_presentation = false;
  bool pi_presentation = false;
  Classification pi_class;
  Classification pi0_class;
};

std::optional<A4Reduction> a4_reduction(const ImprimitiveReduction& r, int entry_bound = 2);

// Lattice examples, the A4 reduction of the type (1^4) catalog witness, and both Gamma9 cases.
std::vector<Check> monomial_checks(int entry_bound = 2);

}  // namespace finvar
