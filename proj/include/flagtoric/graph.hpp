#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagtoric/linalg.hpp"
#include "flagtoric/shape.hpp"

namespace flagtoric {

// Doubled coordinates keep half-integer dot/star positions exact: a grid
// corner has both coordinates even, a dot or star has both odd.
struct GridPoint {
    int x2 = 0;
    int y2 = 0;
    friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

enum class Dir { Horizontal, Vertical };

struct Vertex {
    bool is_star = false;
    // Dots: the cell (col, row) whose center they occupy, 1-based, row 1 at
    // the bottom. Stars: index 1..l+1.
    int col = 0, row = 0;
    int star_index = 0;
    GridPoint pos;
};

struct GraphEdge {
    int id = -1;
    int tail = -1, head = -1; // vertex ids
    Dir dir = Dir::Horizontal;
    bool is_roof = false;
    int roof = 0;             // 1..l when is_roof
    int corner_of = -1;       // box id when !is_roof
    int opposite_of = -1;     // box id whose opposite corner contains this edge, or -1
    GridPoint mid;            // doubled midpoint, unique per edge
};

struct Box {
    int id = -1;
    GridPoint center;          // even/even, center of the enclosed unit square
    int corner_v = -1, corner_h = -1; // left vertical, bottom horizontal
    int opp_h = -1, opp_v = -1;       // top horizontal, right vertical
};

enum class RegionType { Outside, Roof, Box };

struct Region {
    RegionType type = RegionType::Outside;
    int index = 0; // roof 1..l or box id; 0 for Outside
    friend bool operator==(const Region&, const Region&) = default;
};

// One record per graph edge: the two half-sides of the unique ladder wall
// crossing it, wall oriented up (edge horizontal) or right (edge vertical).
struct DualEdge {
    int edge = -1;
    Region head, tail;
};

struct LadderGraph {
    FlagShape shape;
    std::vector<std::pair<int, int>> cells; // (col,row), row asc then col asc
    std::vector<Vertex> vertices;           // dots first (cell order), then stars
    int num_dots = 0;
    std::vector<GraphEdge> edges;
    std::vector<Box> boxes;
    std::vector<std::vector<int>> roofs; // roofs[i-1] = edge ids in path order
    std::vector<DualEdge> dual;          // indexed like edges

    int n() const { return shape.ambient; }
    int l() const { return shape.l(); }
    const Vertex& star(int i) const { return vertices[num_dots + i - 1]; }

    // dot id at doubled position, -1 if absent
    int dot_at(int x2, int y2) const;
    // edge id with the given doubled midpoint, -1 if absent
    int edge_at_mid(int x2, int y2) const;

    // delta(e) in Z^D: +1 at the head dot, -1 at the tail dot.
    IntVec delta_vector(int edge) const;
    // boundary over D + S (dots first, stars after)
    IntVec partial_vector(int edge) const;

    long roof_size(int i) const { return static_cast<long>(roofs[i - 1].size()); }

  private:
    std::unordered_map<long long, int> dot_pos_, mid_pos_;
    friend LadderGraph build_graph(const FlagShape&);
};

LadderGraph build_graph(const FlagShape& shape);

struct KernelBases {
    std::vector<IntVec> rho_boxes; // over E, one per box: corner - opposite
    std::vector<IntVec> rho_roofs; // over E, one per roof: sum of roof edges
};

// Verified Z-bases of Ker(partial) and Ker(delta); throws ConsistencyError
// if the rank or lattice-basis certificates fail.
KernelBases kernel_bases(const LadderGraph& g);

// (edge id, head region, tail region) triples, one per edge.
const std::vector<DualEdge>& build_dual_graph(const LadderGraph& g);

} // namespace flagtoric
