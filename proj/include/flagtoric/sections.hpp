#pragma once

#include <vector>

#include "flagtoric/paths.hpp"

namespace flagtoric {

// Nonnegative integer functional over E annihilating Ker(partial).
struct ConeFunctional {
    IntVec values;
    Int weight() const;
};

bool in_dual_cone(const LadderGraph& g, const IntVec& values);

// Greedy path peeling: repeatedly peel a positive path whose crossed edges
// all carry positive values (lowest roof first, leftward corner edge
// preferred), until zero. Returns the peeled paths; their functionals re-sum
// to the input. Throws NotInCone for invalid input, ConsistencyError if the
// peeling ever sticks.
std::vector<PositivePath> greedy_decompose(const LadderGraph& g, const ConeFunctional& f);

// All lattice points of the dual cone with weight <= bound, via free values
// on the complement of the dependent corner edges. Deterministic order.
std::vector<ConeFunctional> enumerate_cone_points(const LadderGraph& g, long weight_bound);

struct HilbertReport {
    long weight_bound = 0;
    long points = 0;
    bool all_decompose = false;
    Int min_positive_weight;   // over enumerated nonzero points
    bool none_below_n = false; // no nonzero functional of weight < n found
    bool generators_minimal = false; // no lambda_pi decomposes into the others
};

HilbertReport check_hilbert_basis(const LadderGraph& g, long weight_bound);

// Lattice points of the section polytope of a roof edge, as value vectors
// over E (the composition with delta). Equals {pi[e] : pi in Pi_i}.
std::vector<IntVec> section_polytope_points(const LadderGraph& g, int edge);

struct QuadraticRelation {
    int a = -1, b = -1;     // global path ids, incomparable pair
    int min = -1, max = -1; // global path ids of the lattice resolution
};

// One relation per unordered incomparable pair, each verified against the
// functional identity lambda_a + lambda_b = lambda_min + lambda_max.
// Throws FunctionalMismatch when the identity fails.
std::vector<QuadraticRelation> quadratic_relations(const LadderGraph& g, const PathTable& paths);

} // namespace flagtoric
