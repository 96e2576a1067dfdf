#pragma once

#include <vector>

#include "flagtoric/paths.hpp"

namespace flagtoric {

struct Facet {
    int meander = -1;         // index into enumerate_meanders
    IntVec normal;            // integral functional over the dot lattice, level 1
    std::vector<int> incident; // edge ids e with normal . delta(e) = 1
};

struct ReflexivePolytope {
    long dim = 0;                  // |D|
    std::vector<IntVec> points;    // delta(e), indexed by edge id
    std::vector<Facet> facets;     // one per meander
    std::vector<int> hull_vertices; // edges whose delta(e) is a hull vertex (dim <= 6 only)
    bool hull_checked = false;
    long interior_lattice_points = 0; // strictly interior count, should be 1
};

// Vertices delta(e), facets from meanders, reflexivity certificate
// (integral facet functionals at level 1, origin the unique interior lattice
// point). Throws ReflexivityFailure if any certificate fails.
ReflexivePolytope build_polytope_with_facets(const LadderGraph& g);

struct HullFacet {
    RatVec normal; // y with y.p <= 1 for all points, equality on incident
    std::vector<int> incident;
};

// Exact rational convex hull facets for small point sets with the origin in
// the interior. Independent oracle; throws DegenerateInput when the points do
// not affinely span.
std::vector<HullFacet> brute_force_facets(const std::vector<IntVec>& points);

// Indices of points that are vertices of their convex hull.
std::vector<int> hull_vertex_indices(const std::vector<IntVec>& points);

} // namespace flagtoric
