#pragma once

#include <string>
#include <vector>

#include "flagtoric/graph.hpp"

namespace flagtoric {

// Monotone lattice path from O_i = (n_i, n-n_i) to O_0 = (0,0), n steps,
// each 'D' (down) or 'L' (left).
struct PositivePath {
    int origin = 0;            // roof index i, 1-based
    std::string steps;         // from O_i, 'D'/'L', length n
    std::vector<int> crossed;  // graph edges crossed, in path order
    std::vector<int> subset;   // positions of L-steps counted from the O_0 end
    std::vector<int> heights;  // h(c) for columns c = 1..n_i (non-decreasing)

    friend bool operator==(const PositivePath& a, const PositivePath& b) {
        return a.origin == b.origin && a.steps == b.steps;
    }
};

// All of Pi_i, lexicographic by step string ('D' < 'L'). |Pi_i| = C(n, n_i).
std::vector<PositivePath> enumerate_positive_paths(const LadderGraph& g, int i);

// Path with the given L-positions-from-the-end subset.
PositivePath path_from_subset(const LadderGraph& g, int i, const std::vector<int>& subset);

// lambda_pi over E: 1 on crossed edges, 0 elsewhere. Annihilates Ker(partial).
IntVec path_functional(const LadderGraph& g, const PositivePath& p);

enum class Cmp { Less, Equal, Greater, Incomparable };

// Order of the distributive path lattice. For origins i <= j the Pi_i element
// can only sit below the Pi_j element.
Cmp path_compare(const PositivePath& a, const PositivePath& b);

struct MinMax {
    bool comparable = false;
    PositivePath min, max;
};

// Lattice meet/join; for comparable pairs returns the pair itself. min lies
// in Pi_min(i,j) and bounds the intersection of the under-regions, max lies
// in Pi_max(i,j) and bounds their union.
MinMax path_min_max(const LadderGraph& g, const PositivePath& a, const PositivePath& b);

struct Meander {
    std::vector<int> path_index; // index into enumerate_positive_paths(g, i) per i
    IntVec lambda;               // facet functional over E
};

// All l-tuples whose union is a tree (edge count = vertex count - 1 and
// connected). Deterministic order.
std::vector<Meander> enumerate_meanders(const LadderGraph& g);

// lambda_m(e) = 1 - sum of |R_i| over paths of m crossing e. Checks the
// roof-sum and corner-balance relations; throws ConsistencyError on failure.
IntVec meander_functional(const LadderGraph& g, const std::vector<const PositivePath*>& paths);

// U(e) for a roof edge: e plus the parallel edges directly below (horizontal)
// or directly left (vertical). Throws NotARoofEdge otherwise.
std::vector<int> upper_set(const LadderGraph& g, int edge);

// 0/1 indicator of U(e) over E.
IntVec upper_indicator(const LadderGraph& g, int edge);

// pi[e] over E, the section lattice point of the path: 0/0/-1/+1 by
// membership in U(e) times crossing. lambda_pi = pi[e] + v[e] for pi in Pi_i.
IntVec section_functional(const LadderGraph& g, int edge, const PositivePath& p);

// All paths of all roofs with a stable global index.
struct PathTable {
    std::vector<std::vector<PositivePath>> by_roof; // [i-1]
    std::vector<std::pair<int, int>> flat;          // global id -> (i, index)

    const PositivePath& at(int global) const {
        auto [i, k] = flat[global];
        return by_roof[i - 1][k];
    }
    int global_id(int i, int k) const;
    long size() const { return static_cast<long>(flat.size()); }
};

PathTable all_paths(const LadderGraph& g);

} // namespace flagtoric
