#include "flagtoric/sections.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flagtoric/errors.hpp"

namespace flagtoric {

Int ConeFunctional::weight() const {
    Int w = 0;
    for (const auto& v : values) w += v;
    return w;
}

bool in_dual_cone(const LadderGraph& g, const IntVec& values) {
    for (const auto& v : values)
        if (v < 0) return false;
    for (const auto& b : g.boxes)
        if (values[b.corner_v] + values[b.corner_h] != values[b.opp_h] + values[b.opp_v])
            return false;
    return true;
}

std::vector<PositivePath> greedy_decompose(const LadderGraph& g, const ConeFunctional& f) {
    if (f.values.size() != g.edges.size() || !in_dual_cone(g, f.values))
        throw NotInCone("functional is not a lattice point of the dual cone");
    IntVec lam = f.values;
    std::vector<std::vector<PositivePath>> pool(g.l());

    std::vector<PositivePath> out;
    auto nonzero = [&]() {
        for (const auto& v : lam)
            if (v != 0) return true;
        return false;
    };
    while (nonzero()) {
        int start = -1, roof = -1;
        for (int i = 1; i <= g.l() && start < 0; ++i)
            for (int e : g.roofs[i - 1])
                if (lam[e] > 0) {
                    start = e;
                    roof = i;
                    break;
                }
        if (start < 0)
            throw ConsistencyError("positive functional with no positive roof edge");
        // crossing chain: leave every box through a positive corner edge,
        // leftward (vertical) first
        std::set<int> chain{start};
        int cur = start;
        while (true) {
            int b = g.edges[cur].opposite_of;
            if (b < 0) break;
            int v = g.boxes[b].corner_v, h = g.boxes[b].corner_h;
            if (lam[v] > 0) cur = v;
            else if (lam[h] > 0) cur = h;
            else throw ConsistencyError("peeling stuck inside a box");
            chain.insert(cur);
        }
        if (pool[roof - 1].empty()) pool[roof - 1] = enumerate_positive_paths(g, roof);
        const PositivePath* match = nullptr;
        for (const auto& p : pool[roof - 1]) {
            std::set<int> c(p.crossed.begin(), p.crossed.end());
            if (c == chain) {
                if (match) throw ConsistencyError("crossing chain matches two paths");
                match = &p;
            }
        }
        if (!match) throw ConsistencyError("crossing chain matches no path");
        for (int e : match->crossed) {
            lam[e] -= 1;
            if (lam[e] < 0) throw ConsistencyError("peeling went negative");
        }
        out.push_back(*match);
    }
    return out;
}

std::vector<ConeFunctional> enumerate_cone_points(const LadderGraph& g, long weight_bound) {
    const size_t ne = g.edges.size();
    std::vector<char> dependent(ne, 0);
    for (const auto& b : g.boxes) dependent[b.corner_v] = 1;
    std::vector<int> free_edges;
    for (size_t e = 0; e < ne; ++e)
        if (!dependent[e]) free_edges.push_back(static_cast<int>(e));
    // boxes right-to-left so each left (dependent) edge is solved after the
    // box to its right
    std::vector<int> order(g.boxes.size());
    for (size_t b = 0; b < order.size(); ++b) order[b] = static_cast<int>(b);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.boxes[a].center.x2 != g.boxes[b].center.x2)
            return g.boxes[a].center.x2 > g.boxes[b].center.x2;
        return g.boxes[a].center.y2 > g.boxes[b].center.y2;
    });

    std::vector<ConeFunctional> out;
    IntVec vals(ne, 0);
    auto rec = [&](auto&& self, size_t idx, long used) -> void {
        if (idx == free_edges.size()) {
            long total = used;
            for (int bi : order) {
                const auto& b = g.boxes[bi];
                Int v = vals[b.opp_h] + vals[b.opp_v] - vals[b.corner_h];
                if (v < 0) return;
                vals[b.corner_v] = v;
                total += static_cast<long>(v);
                if (total > weight_bound) return;
            }
            out.push_back(ConeFunctional{vals});
            return;
        }
        for (long v = 0; used + v <= weight_bound; ++v) {
            vals[free_edges[idx]] = v;
            self(self, idx + 1, used + v);
        }
        vals[free_edges[idx]] = 0;
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end(),
              [](const ConeFunctional& a, const ConeFunctional& b) { return a.values < b.values; });
    return out;
}

HilbertReport check_hilbert_basis(const LadderGraph& g, long weight_bound) {
    HilbertReport rep;
    rep.weight_bound = weight_bound;
    auto points = enumerate_cone_points(g, weight_bound);
    rep.points = static_cast<long>(points.size());
    rep.all_decompose = true;
    rep.min_positive_weight = 0;
    for (const auto& p : points) {
        Int w = p.weight();
        if (w == 0) continue;
        if (rep.min_positive_weight == 0 || w < rep.min_positive_weight)
            rep.min_positive_weight = w;
        auto parts = greedy_decompose(g, p);
        IntVec sum(g.edges.size(), 0);
        for (const auto& q : parts)
            for (int e : q.crossed) sum[e] += 1;
        if (sum != p.values) rep.all_decompose = false;
    }
    rep.none_below_n = rep.min_positive_weight == 0 || rep.min_positive_weight >= g.n();

    auto table = all_paths(g);
    std::vector<IntVec> gens;
    for (long i = 0; i < table.size(); ++i)
        gens.push_back(path_functional(g, table.at(static_cast<int>(i))));
    rep.generators_minimal = true;
    for (size_t target = 0; target < gens.size() && rep.generators_minimal; ++target) {
        // nonnegative integer combination of the other generators?
        auto fits = [&](const IntVec& rem, const IntVec& gen) {
            for (size_t e = 0; e < rem.size(); ++e)
                if (gen[e] > rem[e]) return false;
            return true;
        };
        auto rec = [&](auto&& self, IntVec rem, size_t from) -> bool {
            bool zero = true;
            for (const auto& v : rem)
                if (v != 0) zero = false;
            if (zero) return true;
            for (size_t k = from; k < gens.size(); ++k) {
                if (k == target || !fits(rem, gens[k])) continue;
                IntVec next = rem;
                for (size_t e = 0; e < next.size(); ++e) next[e] -= gens[k][e];
                if (self(self, std::move(next), k)) return true;
            }
            return false;
        };
        if (rec(rec, gens[target], 0)) rep.generators_minimal = false;
    }
    return rep;
}

std::vector<IntVec> section_polytope_points(const LadderGraph& g, int edge) {
    const auto& e0 = g.edges[edge];
    if (!e0.is_roof) throw NotARoofEdge("section polytope requires a roof edge");
    const int i = e0.roof;
    auto uset = upper_set(g, edge);
    auto in_u = [&](int e) { return std::binary_search(uset.begin(), uset.end(), e); };
    auto lb = [&](int e) { return in_u(e) ? -1 : 0; };

    const size_t ne = g.edges.size();
    // boxes ordered so that a box's opposite edges are roof edges or corner
    // edges of already-processed boxes
    std::vector<int> order(g.boxes.size());
    for (size_t b = 0; b < order.size(); ++b) order[b] = static_cast<int>(b);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        int sa = g.boxes[a].center.x2 + g.boxes[a].center.y2;
        int sb = g.boxes[b].center.x2 + g.boxes[b].center.y2;
        if (sa != sb) return sa > sb;
        return g.boxes[a].center < g.boxes[b].center ? false : true;
    });

    std::vector<IntVec> out;
    IntVec vals(ne, 0);
    auto solve_boxes = [&](auto&& self, size_t k) -> void {
        if (k == order.size()) {
            out.push_back(vals);
            return;
        }
        const auto& b = g.boxes[order[k]];
        Int s = vals[b.opp_h] + vals[b.opp_v];
        for (Int v = lb(b.corner_v); v <= s - lb(b.corner_h); ++v) {
            vals[b.corner_v] = v;
            vals[b.corner_h] = s - v;
            self(self, k + 1);
        }
        vals[b.corner_v] = vals[b.corner_h] = 0;
    };

    // roof values: all zero, or -1 at e0 with +1 at one other edge of R_i
    auto with_roof = [&]() { solve_boxes(solve_boxes, 0); };
    with_roof();
    for (int other : g.roofs[i - 1]) {
        if (other == edge) continue;
        vals[edge] = -1;
        vals[other] = 1;
        with_roof();
        vals[edge] = 0;
        vals[other] = 0;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<QuadraticRelation> quadratic_relations(const LadderGraph& g, const PathTable& paths) {
    std::map<std::pair<int, std::string>, int> lookup;
    for (long k = 0; k < paths.size(); ++k) {
        const auto& p = paths.at(static_cast<int>(k));
        lookup[{p.origin, p.steps}] = static_cast<int>(k);
    }
    std::vector<QuadraticRelation> out;
    for (long a = 0; a < paths.size(); ++a) {
        for (long b = a + 1; b < paths.size(); ++b) {
            const auto& pa = paths.at(static_cast<int>(a));
            const auto& pb = paths.at(static_cast<int>(b));
            if (path_compare(pa, pb) != Cmp::Incomparable) continue;
            auto mm = path_min_max(g, pa, pb);
            QuadraticRelation rel;
            rel.a = static_cast<int>(a);
            rel.b = static_cast<int>(b);
            rel.min = lookup.at({mm.min.origin, mm.min.steps});
            rel.max = lookup.at({mm.max.origin, mm.max.steps});
            auto la = path_functional(g, pa), lb_ = path_functional(g, pb);
            auto lmin = path_functional(g, mm.min), lmax = path_functional(g, mm.max);
            for (size_t e = 0; e < la.size(); ++e)
                if (la[e] + lb_[e] != lmin[e] + lmax[e])
                    throw FunctionalMismatch("quadratic relation identity fails");
            out.push_back(rel);
        }
    }
    return out;
}

} // namespace flagtoric
