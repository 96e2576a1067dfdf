#pragma once

#include <vector>

#include "flagtoric/paths.hpp"

namespace flagtoric {

struct MirrorTerm {
    int coeff_edge = -1; // symbolic coefficient c_f, indexed by the edge f
    IntVec exponent;     // delta(f) over the dot lattice
};

struct MirrorEquation {
    std::vector<MirrorTerm> terms; // the constant 1 is implicit
};

struct BoxConstraint {
    int f1 = -1, f2 = -1; // corner pair
    int f3 = -1, f4 = -1; // opposite pair; c_f1 c_f2 = c_f3 c_f4
};

struct MirrorSystem {
    std::vector<std::vector<std::vector<int>>> segments; // [i-1][j] roof edge ids
    std::vector<MirrorEquation> equations;               // one per j = 1..r
    std::vector<BoxConstraint> box_constraints;
    std::vector<std::vector<IntVec>> newton;             // per j, exponent vectors incl. 0
};

// Roof edges assigned to segments consecutively in roof orientation order,
// |R_{i,j}| = d_j^(i); throws PartitionSizeMismatch when the degrees do not
// partition the roofs.
MirrorSystem mirror_system(const LadderGraph& g, const std::vector<std::vector<long>>& degrees);

} // namespace flagtoric
