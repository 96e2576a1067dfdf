#pragma once

#include <vector>

#include "flagtoric/numbers.hpp"

namespace flagtoric {

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;

long rank_of(IntMat m);

// Exact determinant of a square integer matrix (fraction-free elimination).
Int det_of(IntMat m);

// Diagonal of the Smith normal form, nonzero entries only.
std::vector<Int> smith_invariants(IntMat m);

// Rows of `rows` form a lattice basis of the integer kernel of `map`
// (each row must already lie in the kernel).
bool is_kernel_lattice_basis(const IntMat& rows, const IntMat& map);

// Unique rational solution x of a.x = rhs when a is square nonsingular;
// empty vector if singular.
RatVec solve_square(const IntMat& a, const RatVec& rhs);

} // namespace flagtoric
