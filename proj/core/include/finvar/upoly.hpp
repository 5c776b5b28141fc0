#pragma once

#include <vector>

#include "finvar/cycnum.hpp"

namespace finvar {

// Univariate polynomial over a cyclotomic field, lowest degree first.
using UPoly = std::vector<CycNum>;

void upoly_trim(UPoly& p);
int upoly_degree(const UPoly& p);  // -1 for zero
UPoly upoly_derivative(const UPoly& p);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
// Quotient and remainder; b nonzero.
std::pair<UPoly, UPoly> upoly_divmod(UPoly a, const UPoly& b);
UPoly upoly_monic(const UPoly& p);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_squarefree(const UPoly& p);
CycNum upoly_eval(const UPoly& p, const CycNum& x);

// Roots of p lying in Q(zeta_n), found from numerical approximations of all
// Galois conjugates and confirmed exactly. Distinct, in a deterministic order.
std::vector<CycNum> roots_in_field(const UPoly& p, int n);

}  // namespace finvar
