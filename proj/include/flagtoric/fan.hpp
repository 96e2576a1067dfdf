#pragma once

#include <vector>

#include "flagtoric/paths.hpp"

namespace flagtoric {

struct SimplicialCone {
    std::vector<int> generators; // edge ids: E minus one edge per roof and per corner
    Int det;                     // +-1
    int meander = -1;            // containing facet cone
};

// The simplicial refinement: one maximal cone per choice of omitted roof edge
// and omitted corner edge per box; count = prod(k_i + k_{i+1}) * 2^|B|.
// Each cone comes with a unimodularity certificate and its containing
// meander; throws UnimodularityFailure / ContainmentFailure.
std::vector<SimplicialCone> refined_fan(const LadderGraph& g);

struct ConifoldStratum {
    int box = -1;
    std::vector<IntVec> rays;    // the four delta-images, corner pair first
    IntMat basis_rows;           // rows u, u', a mapping rays to the normal form
};

// One stratum per box with a verified lattice normal form
// {(0,0,1),(1,0,1),(0,1,1),(1,1,1)} padded with zeros.
// Throws NormalFormFailure.
std::vector<ConifoldStratum> singular_strata(const LadderGraph& g);

} // namespace flagtoric
