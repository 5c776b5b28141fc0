#pragma once

#include <optional>
#include <vector>

#include "finvar/cycnum.hpp"

namespace finvar {

using Vec = std::vector<CycNum>;
using Rows = std::vector<Vec>;

int common_conductor(const Rows& rows);
int common_conductor(const Vec& v);
void embed_all(Rows& rows, int conductor);
void embed_all(Vec& v, int conductor);

struct Echelon {
  Rows rows;                // nonzero rows of the reduced row echelon form
  std::vector<int> pivots;  // pivot column of each row, increasing
};

// Reduced row echelon form; pivots are taken left to right.
Echelon rref(Rows rows);
int rank(const Rows& rows);
// Basis of { x : A x = 0 } for A with ncols columns.
Rows nullspace(const Rows& a, int ncols);
// Some solution of A x = b, if one exists.
std::optional<Vec> solve(const Rows& a, const Vec& b);
// Is v in the row space of the echelon form?
bool in_row_space(const Echelon& e, const Vec& v);

Rows transpose(const Rows& a, int ncols);

}  // namespace finvar
