#include "flagtoric/polytope.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "flagtoric/errors.hpp"

namespace flagtoric {

namespace {

// Integral functional on the dot lattice with y . delta = lam, grounded at
// the stars; exists exactly when lam annihilates Ker(delta).
IntVec descend_to_dots(const LadderGraph& g, const IntVec& lam) {
    const size_t nv = g.vertices.size();
    std::vector<Int> y(nv, 0);
    std::vector<char> known(nv, 0);
    for (size_t v = g.num_dots; v < nv; ++v) known[v] = 1; // stars at 0
    std::queue<int> q;
    for (size_t v = g.num_dots; v < nv; ++v) q.push(static_cast<int>(v));
    std::vector<std::vector<int>> inc(nv);
    for (const auto& e : g.edges) {
        inc[e.tail].push_back(e.id);
        inc[e.head].push_back(e.id);
    }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int ei : inc[v]) {
            const auto& e = g.edges[ei];
            int w = e.tail == v ? e.head : e.tail;
            Int val = e.tail == v ? y[v] + lam[ei] : y[v] - lam[ei];
            if (!known[w]) {
                known[w] = 1;
                y[w] = val;
                q.push(w);
            } else if (y[w] != val) {
                throw ReflexivityFailure("functional does not descend to the dot lattice");
            }
        }
    }
    for (size_t v = 0; v < nv; ++v)
        if (!known[v]) throw ConsistencyError("descend: unreached vertex");
    return IntVec(y.begin(), y.begin() + g.num_dots);
}

Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

ReflexivePolytope build_polytope_with_facets(const LadderGraph& g) {
    ReflexivePolytope P;
    P.dim = g.num_dots;
    for (const auto& e : g.edges) P.points.push_back(g.delta_vector(e.id));

    {
        IntMat m(P.points.begin(), P.points.end());
        if (rank_of(m) != P.dim)
            throw ReflexivityFailure("vertex candidates do not span the dot lattice");
    }

    auto meanders = enumerate_meanders(g);
    std::map<IntVec, int> seen;
    for (size_t mi = 0; mi < meanders.size(); ++mi) {
        Facet f;
        f.meander = static_cast<int>(mi);
        f.normal = descend_to_dots(g, meanders[mi].lambda);
        if (!seen.emplace(f.normal, static_cast<int>(mi)).second)
            throw ReflexivityFailure("two meanders gave the same facet functional");
        IntMat incident_dirs;
        IntVec base;
        for (const auto& e : g.edges) {
            Int v = dot(f.normal, P.points[e.id]);
            if (v != meanders[mi].lambda[e.id])
                throw ConsistencyError("descended functional disagrees on an edge");
            if (v > 1) throw ReflexivityFailure("facet functional exceeds 1 on a vertex");
            if (v == 1) {
                f.incident.push_back(e.id);
                if (base.empty()) base = P.points[e.id];
                else {
                    IntVec d(P.dim);
                    for (long j = 0; j < P.dim; ++j) d[j] = P.points[e.id][j] - base[j];
                    incident_dirs.push_back(std::move(d));
                }
            }
        }
        if (base.empty() || rank_of(incident_dirs) != P.dim - 1)
            throw ReflexivityFailure("meander face is not codimension 1");
        P.facets.push_back(std::move(f));
    }

    // bounded scan: all vertex coordinates lie in {-1,0,1}
    const long d = P.dim;
    std::vector<int> x(d, -1);
    long interior = 0;
    while (true) {
        bool inside = true;
        for (const auto& f : P.facets) {
            Int s = 0;
            for (long j = 0; j < d; ++j)
                if (x[j]) s += x[j] > 0 ? f.normal[j] : -f.normal[j];
            if (s >= 1) {
                inside = false;
                break;
            }
        }
        if (inside) ++interior;
        long j = 0;
        while (j < d && x[j] == 1) x[j++] = -1;
        if (j == d) break;
        ++x[j];
    }
    P.interior_lattice_points = interior;
    if (interior != 1)
        throw ReflexivityFailure("origin is not the unique interior lattice point");

    if (P.dim <= 6) {
        P.hull_vertices = hull_vertex_indices(P.points);
        P.hull_checked = true;
    }
    return P;
}

std::vector<HullFacet> brute_force_facets(const std::vector<IntVec>& points) {
    if (points.empty()) throw DegenerateInput("no points");
    const size_t d = points[0].size();
    {
        IntMat dirs;
        for (size_t i = 1; i < points.size(); ++i) {
            IntVec v(d);
            for (size_t j = 0; j < d; ++j) v[j] = points[i][j] - points[0][j];
            dirs.push_back(std::move(v));
        }
        if (rank_of(dirs) != static_cast<long>(d))
            throw DegenerateInput("points do not affinely span");
    }

    std::map<RatVec, HullFacet> found;
    std::vector<size_t> pick(d);
    auto consider = [&]() {
        IntMat m;
        for (size_t i : pick) m.push_back(points[i]);
        RatVec ones(d, Rat(1));
        RatVec a = solve_square(m, ones);
        if (a.empty()) return;
        std::vector<int> incident;
        for (size_t p = 0; p < points.size(); ++p) {
            Rat s = 0;
            for (size_t j = 0; j < d; ++j) s += a[j] * Rat(points[p][j]);
            if (s > 1) return;
            if (s == 1) incident.push_back(static_cast<int>(p));
        }
        if (found.count(a)) return;
        HullFacet f;
        f.normal = a;
        f.incident = std::move(incident);
        found.emplace(a, std::move(f));
    };
    auto rec = [&](auto&& self, size_t next, size_t chosen) -> void {
        if (chosen == d) {
            consider();
            return;
        }
        if (points.size() - next < d - chosen) return;
        for (size_t i = next; i < points.size(); ++i) {
            pick[chosen] = i;
            self(self, i + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);

    std::vector<HullFacet> out;
    for (auto& [a, f] : found) out.push_back(std::move(f));
    return out;
}

std::vector<int> hull_vertex_indices(const std::vector<IntVec>& points) {
    auto facets = brute_force_facets(points);
    const size_t d = points[0].size();
    std::vector<int> out;
    for (size_t p = 0; p < points.size(); ++p) {
        IntMat normals;
        for (const auto& f : facets) {
            if (std::find(f.incident.begin(), f.incident.end(), static_cast<int>(p)) ==
                f.incident.end())
                continue;
            Int lcm = 1;
            for (const auto& c : f.normal) lcm = boost::multiprecision::lcm(lcm, denominator(c));
            IntVec row(d);
            for (size_t j = 0; j < d; ++j)
                row[j] = numerator(f.normal[j]) * (lcm / denominator(f.normal[j]));
            normals.push_back(std::move(row));
        }
        if (!normals.empty() && rank_of(normals) == static_cast<long>(d))
            out.push_back(static_cast<int>(p));
    }
    return out;
}

} // namespace flagtoric
