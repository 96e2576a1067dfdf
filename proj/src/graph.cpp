#include "flagtoric/graph.hpp"

#include <algorithm>
#include <queue>

#include "flagtoric/errors.hpp"

namespace flagtoric {

namespace {
long long pos_key(int x2, int y2) { return (static_cast<long long>(x2) << 24) ^ y2; }
} // namespace

int LadderGraph::dot_at(int x2, int y2) const {
    auto it = dot_pos_.find(pos_key(x2, y2));
    return it == dot_pos_.end() ? -1 : it->second;
}

int LadderGraph::edge_at_mid(int x2, int y2) const {
    auto it = mid_pos_.find(pos_key(x2, y2));
    return it == mid_pos_.end() ? -1 : it->second;
}

IntVec LadderGraph::delta_vector(int edge) const {
    IntVec v(num_dots, 0);
    const auto& e = edges[edge];
    if (!vertices[e.head].is_star) v[e.head] += 1;
    if (!vertices[e.tail].is_star) v[e.tail] -= 1;
    return v;
}

IntVec LadderGraph::partial_vector(int edge) const {
    IntVec v(vertices.size(), 0);
    const auto& e = edges[edge];
    v[e.head] += 1;
    v[e.tail] -= 1;
    return v;
}

LadderGraph build_graph(const FlagShape& shape) {
    LadderGraph g;
    g.shape = shape;
    const int n = shape.ambient, l = shape.l();

    // block of a column c: smallest j with c <= n_j
    auto block_of = [&](int c) {
        int j = 1;
        while (c > shape.n_at(j)) ++j;
        return j;
    };

    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c)
            if (r <= n - shape.n_at(block_of(c))) g.cells.emplace_back(c, r);
    if (static_cast<long>(g.cells.size()) != shape.dimension())
        throw ConsistencyError("cell count does not match the flag dimension");

    for (auto [c, r] : g.cells) {
        Vertex v;
        v.col = c;
        v.row = r;
        v.pos = {2 * c - 1, 2 * r - 1};
        g.vertices.push_back(v);
    }
    g.num_dots = static_cast<int>(g.vertices.size());
    for (int i = 1; i <= l + 1; ++i) {
        Vertex v;
        v.is_star = true;
        v.star_index = i;
        // (1/2,1/2)-shift of the lower-left corner of the diagonal square Q_i
        v.pos = {2 * shape.n_at(i - 1) + 1, 2 * (n - shape.n_at(i)) + 1};
        g.vertices.push_back(v);
    }

    std::unordered_map<long long, int> at; // vertex lookup by doubled position
    for (size_t i = 0; i < g.vertices.size(); ++i) {
        auto [it, fresh] = at.emplace(pos_key(g.vertices[i].pos.x2, g.vertices[i].pos.y2),
                                      static_cast<int>(i));
        if (!fresh) throw ConsistencyError("two vertices share a position");
        if (!g.vertices[i].is_star) g.dot_pos_.emplace(it->first, static_cast<int>(i));
    }

    // edges: unit-distance pairs, vertical oriented down, horizontal right
    std::vector<GraphEdge> raw;
    for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
        const auto& v = g.vertices[vi];
        if (auto it = at.find(pos_key(v.pos.x2, v.pos.y2 - 2)); it != at.end()) {
            GraphEdge e;
            e.tail = static_cast<int>(vi);
            e.head = it->second;
            e.dir = Dir::Vertical;
            e.mid = {v.pos.x2, v.pos.y2 - 1};
            raw.push_back(e);
        }
        if (auto it = at.find(pos_key(v.pos.x2 + 2, v.pos.y2)); it != at.end()) {
            GraphEdge e;
            e.tail = static_cast<int>(vi);
            e.head = it->second;
            e.dir = Dir::Horizontal;
            e.mid = {v.pos.x2 + 1, v.pos.y2};
            raw.push_back(e);
        }
    }
    for (const auto& e : raw)
        if (g.vertices[e.tail].is_star && g.vertices[e.head].is_star)
            throw ConsistencyError("adjacent stars");

    std::sort(raw.begin(), raw.end(), [&](const GraphEdge& a, const GraphEdge& b) {
        const auto& ta = g.vertices[a.tail].pos;
        const auto& tb = g.vertices[b.tail].pos;
        if (ta.y2 != tb.y2) return ta.y2 > tb.y2;
        if (ta.x2 != tb.x2) return ta.x2 < tb.x2;
        return a.dir < b.dir;
    });
    for (size_t i = 0; i < raw.size(); ++i) {
        raw[i].id = static_cast<int>(i);
        g.mid_pos_.emplace(pos_key(raw[i].mid.x2, raw[i].mid.y2), static_cast<int>(i));
    }
    g.edges = std::move(raw);

    // boxes: unit 4-cycles, i.e. even/even centers whose four diagonal
    // neighbours are all vertices
    for (int cy = 0; cy <= 2 * n; cy += 2) {
        for (int cx = 0; cx <= 2 * n; cx += 2) {
            bool all = at.count(pos_key(cx - 1, cy - 1)) && at.count(pos_key(cx + 1, cy - 1)) &&
                       at.count(pos_key(cx - 1, cy + 1)) && at.count(pos_key(cx + 1, cy + 1));
            if (!all) continue;
            Box b;
            b.id = static_cast<int>(g.boxes.size());
            b.center = {cx, cy};
            b.corner_v = g.edge_at_mid(cx - 1, cy);
            b.corner_h = g.edge_at_mid(cx, cy - 1);
            b.opp_h = g.edge_at_mid(cx, cy + 1);
            b.opp_v = g.edge_at_mid(cx + 1, cy);
            if (b.corner_v < 0 || b.corner_h < 0 || b.opp_h < 0 || b.opp_v < 0)
                throw ConsistencyError("box with a missing side");
            g.boxes.push_back(b);
        }
    }
    for (const auto& b : g.boxes) {
        for (int e : {b.corner_v, b.corner_h}) {
            if (g.edges[e].corner_of >= 0) throw ConsistencyError("edge in two corners");
            g.edges[e].corner_of = b.id;
        }
        for (int e : {b.opp_h, b.opp_v}) {
            if (g.edges[e].opposite_of >= 0)
                throw ConsistencyError("edge in two opposite corners");
            g.edges[e].opposite_of = b.id;
        }
    }

    // roofs: oriented components of the non-corner edges, one per star 1..l
    std::vector<int> out_non_corner(g.vertices.size(), -1);
    for (const auto& e : g.edges) {
        if (e.corner_of >= 0) continue;
        if (out_non_corner[e.tail] >= 0)
            throw ConsistencyError("vertex with two non-corner out-edges");
        out_non_corner[e.tail] = e.id;
    }
    g.roofs.resize(l);
    for (int i = 1; i <= l; ++i) {
        int v = g.num_dots + i - 1;
        while (true) {
            int e = out_non_corner[v];
            if (e < 0) throw ConsistencyError("roof path stuck");
            g.edges[e].is_roof = true;
            g.edges[e].roof = i;
            g.roofs[i - 1].push_back(e);
            v = g.edges[e].head;
            if (g.vertices[v].is_star) {
                if (g.vertices[v].star_index != i + 1)
                    throw ConsistencyError("roof does not end at the next star");
                break;
            }
        }
        auto k = shape.blocks();
        if (static_cast<int>(g.roofs[i - 1].size()) != k[i - 1] + k[i])
            throw ConsistencyError("roof size != k_i + k_{i+1}");
    }
    for (const auto& e : g.edges)
        if (e.is_roof == (e.corner_of >= 0))
            throw ConsistencyError("edge not in exactly one roof or corner");

    if (static_cast<long>(g.boxes.size()) !=
        static_cast<long>(g.edges.size()) - g.num_dots - (l + 1) + 1)
        throw ConsistencyError("box count violates |B| = |E| - |D| - |S| + 1");

    // connectivity of the underlying graph
    {
        std::vector<char> seen(g.vertices.size(), 0);
        std::queue<int> q;
        q.push(0);
        seen[0] = 1;
        size_t cnt = 1;
        std::vector<std::vector<int>> adj(g.vertices.size());
        for (const auto& e : g.edges) {
            adj[e.tail].push_back(e.head);
            adj[e.head].push_back(e.tail);
        }
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    q.push(w);
                }
        }
        if (cnt != g.vertices.size()) throw ConsistencyError("graph not connected");
    }

    // dual crossings: the wall through an edge is oriented up (horizontal
    // edge) or right (vertical edge); each half-side sits in the unit square
    // centred at an even/even point
    std::unordered_map<long long, int> box_center;
    for (const auto& b : g.boxes) box_center.emplace(pos_key(b.center.x2, b.center.y2), b.id);
    auto region_of = [&](int cx, int cy, const GraphEdge& e, bool head_side) {
        if (auto it = box_center.find(pos_key(cx, cy)); it != box_center.end())
            return Region{RegionType::Box, it->second};
        if (!head_side) return Region{RegionType::Outside, 0};
        if (!e.is_roof)
            throw ConsistencyError("non-roof edge with an outside head region");
        return Region{RegionType::Roof, e.roof};
    };
    for (const auto& e : g.edges) {
        DualEdge d;
        d.edge = e.id;
        if (e.dir == Dir::Horizontal) {
            d.tail = region_of(e.mid.x2, e.mid.y2 - 1, e, false);
            d.head = region_of(e.mid.x2, e.mid.y2 + 1, e, true);
        } else {
            d.tail = region_of(e.mid.x2 - 1, e.mid.y2, e, false);
            d.head = region_of(e.mid.x2 + 1, e.mid.y2, e, true);
        }
        g.dual.push_back(d);
    }
    return g;
}

KernelBases kernel_bases(const LadderGraph& g) {
    KernelBases kb;
    const size_t ne = g.edges.size();
    for (const auto& b : g.boxes) {
        IntVec rho(ne, 0);
        rho[b.corner_v] += 1;
        rho[b.corner_h] += 1;
        rho[b.opp_h] -= 1;
        rho[b.opp_v] -= 1;
        kb.rho_boxes.push_back(std::move(rho));
    }
    for (const auto& roof : g.roofs) {
        IntVec rho(ne, 0);
        for (int e : roof) rho[e] += 1;
        kb.rho_roofs.push_back(std::move(rho));
    }

    IntMat partial(g.vertices.size(), IntVec(ne, 0));
    for (const auto& e : g.edges) {
        partial[e.head][e.id] += 1;
        partial[e.tail][e.id] -= 1;
    }
    IntMat delta(partial.begin(), partial.begin() + g.num_dots);

    if (!is_kernel_lattice_basis(kb.rho_boxes, partial))
        throw ConsistencyError("box vectors are not a lattice basis of Ker(partial)");
    IntMat both = kb.rho_roofs;
    both.insert(both.end(), kb.rho_boxes.begin(), kb.rho_boxes.end());
    if (!is_kernel_lattice_basis(both, delta))
        throw ConsistencyError("roof+box vectors are not a lattice basis of Ker(delta)");
    return kb;
}

const std::vector<DualEdge>& build_dual_graph(const LadderGraph& g) { return g.dual; }

} // namespace flagtoric
