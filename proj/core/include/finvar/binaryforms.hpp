#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finvar/matgroup.hpp"
#include "finvar/poly.hpp"
#include "finvar/report.hpp"

namespace finvar {

// Binary form of degree n; coeffs[i] multiplies t1^(n-i) t2^i.
struct BinaryForm {
  int degree = 0;
  std::vector<CycNum> coeffs;

  BinaryForm() = default;
  BinaryForm(int n, std::vector<CycNum> c);
  static BinaryForm from_poly(const SparsePoly& p);
  SparsePoly to_poly() const;
  std::string str() const;  // polynomial text in t1, t2
  BinaryForm scaled(const CycNum& c) const;
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
};

// Forms with a one-dimensional orbit under the binary polyhedral groups.
BinaryForm tetrahedral_quartic(int sign);  // t1^4 + sign*2*sqrt(-3) t1^2 t2^2 + t2^4
BinaryForm octahedral_sextic();            // t1 t2 (t1^4 - t2^4)
BinaryForm icosahedral_form();             // t1 t2 (t1^10 + 11 t1^5 t2^5 - t2^10)

// (g.f)(t) = f(g^{-1} t).
BinaryForm sl2_act(const Mat& g, const BinaryForm& f);

struct SemiInvariance {
  bool ok = false;
  std::vector<CycNum> values;  // chi(g) per group element, when ok
  int order = 0;               // order of the character's image
  std::optional<std::size_t> violating_element;
};

SemiInvariance semi_invariant_character(const MatGroup& g, const BinaryForm& f);

// sum_i (-1)^i a_i b_{n-i} / C(n, i)
CycNum apolar_pairing(const BinaryForm& f, const BinaryForm& h);

// Character orders on the binary polyhedral groups and invariance of the
// pairing on `trials` random (group element, form, form) triples.
std::vector<Check> binaryforms_checks(int trials = 100, std::uint64_t seed = 20240601);

}  // namespace finvar
