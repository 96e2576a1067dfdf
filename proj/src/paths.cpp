#include "flagtoric/paths.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flagtoric/errors.hpp"

namespace flagtoric {

namespace {

// Walk the step string from O_i, filling crossings, subset and heights.
PositivePath realize(const LadderGraph& g, int i, std::string steps) {
    const int n = g.n();
    PositivePath p;
    p.origin = i;
    p.steps = std::move(steps);
    int x2 = 2 * g.shape.n_at(i), y2 = 2 * (n - g.shape.n_at(i));
    for (size_t s = 0; s < p.steps.size(); ++s) {
        int e;
        if (p.steps[s] == 'D') {
            e = g.edge_at_mid(x2, y2 - 1);
            y2 -= 2;
        } else {
            e = g.edge_at_mid(x2 - 1, y2);
            if (x2 > 0) p.heights.push_back(y2 / 2); // column x2/2 crossed at height y2/2
            x2 -= 2;
        }
        if (e >= 0) p.crossed.push_back(e);
        if (p.steps[s] == 'L') p.subset.push_back(n - static_cast<int>(s));
    }
    if (x2 != 0 || y2 != 0) throw ConsistencyError("path does not reach the origin");
    std::sort(p.subset.begin(), p.subset.end());
    std::reverse(p.heights.begin(), p.heights.end()); // heights by column 1..n_i
    return p;
}

} // namespace

std::vector<PositivePath> enumerate_positive_paths(const LadderGraph& g, int i) {
    if (i < 1 || i > g.l()) throw InvalidShape("roof index out of range");
    const int n = g.n();
    const int lefts = g.shape.n_at(i);
    std::vector<PositivePath> out;
    std::string steps;
    auto rec = [&](auto&& self, int used_l, int used_d) -> void {
        if (static_cast<int>(steps.size()) == n) {
            out.push_back(realize(g, i, steps));
            return;
        }
        if (used_d < n - lefts) {
            steps.push_back('D');
            self(self, used_l, used_d + 1);
            steps.pop_back();
        }
        if (used_l < lefts) {
            steps.push_back('L');
            self(self, used_l + 1, used_d);
            steps.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

PositivePath path_from_subset(const LadderGraph& g, int i, const std::vector<int>& subset) {
    const int n = g.n();
    std::set<int> a(subset.begin(), subset.end());
    if (static_cast<int>(a.size()) != g.shape.n_at(i))
        throw ConsistencyError("subset size must be n_i");
    std::string steps(n, 'D');
    for (int pos : a) {
        if (pos < 1 || pos > n) throw ConsistencyError("subset entry out of range");
        steps[n - pos] = 'L';
    }
    return realize(g, i, std::move(steps));
}

IntVec path_functional(const LadderGraph& g, const PositivePath& p) {
    IntVec v(g.edges.size(), 0);
    for (int e : p.crossed) v[e] = 1;
    return v;
}

Cmp path_compare(const PositivePath& a, const PositivePath& b) {
    const PositivePath& lo = a.origin <= b.origin ? a : b;
    const PositivePath& hi = a.origin <= b.origin ? b : a;
    const auto& A = lo.subset; // size p <= q
    const auto& B = hi.subset;
    const size_t p = A.size(), q = B.size();
    bool head_le = true, tail_ge = true;
    for (size_t t = 0; t < p; ++t) {
        if (A[t] > B[t]) head_le = false;
        if (A[t] < B[t + q - p]) tail_ge = false;
    }
    if (head_le && tail_ge) return Cmp::Equal; // only possible when A == B
    Cmp r;
    if (head_le) r = Cmp::Less;        // lo below hi
    else if (tail_ge) r = Cmp::Greater; // lo above hi
    else return Cmp::Incomparable;
    if (&lo != &a) r = (r == Cmp::Less) ? Cmp::Greater : Cmp::Less;
    return r;
}

MinMax path_min_max(const LadderGraph& g, const PositivePath& a, const PositivePath& b) {
    MinMax r;
    Cmp c = path_compare(a, b);
    if (c != Cmp::Incomparable) {
        r.comparable = true;
        if (c == Cmp::Greater) {
            r.min = b;
            r.max = a;
        } else {
            r.min = a;
            r.max = b;
        }
        return r;
    }
    const PositivePath& lo = a.origin <= b.origin ? a : b;
    const PositivePath& hi = a.origin <= b.origin ? b : a;
    const auto& A = lo.subset;
    const auto& B = hi.subset;
    const size_t p = A.size(), q = B.size();
    std::vector<int> meet(p), join(q);
    for (size_t t = 0; t < p; ++t) {
        meet[t] = std::min(A[t], B[t]);
        join[t] = std::max(A[t], B[t]);
    }
    for (size_t t = p; t < q; ++t) join[t] = B[t];
    r.min = path_from_subset(g, lo.origin, meet);
    r.max = path_from_subset(g, hi.origin, join);
    return r;
}

std::vector<Meander> enumerate_meanders(const LadderGraph& g) {
    const int l = g.l();
    std::vector<std::vector<PositivePath>> pool;
    for (int i = 1; i <= l; ++i) pool.push_back(enumerate_positive_paths(g, i));

    std::vector<Meander> out;
    std::vector<int> pick(l, 0);
    auto tree_test = [&]() {
        std::set<std::pair<int, int>> verts;
        std::set<std::pair<int, int>> segs; // step midpoints, doubled
        for (int i = 0; i < l; ++i) {
            const auto& p = pool[i][pick[i]];
            int x2 = 2 * g.shape.n_at(i + 1), y2 = 2 * (g.n() - g.shape.n_at(i + 1));
            verts.insert({x2, y2});
            for (char s : p.steps) {
                if (s == 'D') {
                    segs.insert({x2, y2 - 1});
                    y2 -= 2;
                } else {
                    segs.insert({x2 - 1, y2});
                    x2 -= 2;
                }
                verts.insert({x2, y2});
            }
        }
        // connected by construction (every path ends at the origin), so a
        // tree iff the cycle count is zero
        return segs.size() + 1 == verts.size();
    };
    auto rec = [&](auto&& self, int i) -> void {
        if (i == l) {
            if (!tree_test()) return;
            Meander m;
            m.path_index = pick;
            std::vector<const PositivePath*> ps;
            for (int j = 0; j < l; ++j) ps.push_back(&pool[j][pick[j]]);
            m.lambda = meander_functional(g, ps);
            out.push_back(std::move(m));
            return;
        }
        for (pick[i] = 0; pick[i] < static_cast<int>(pool[i].size()); ++pick[i]) self(self, i + 1);
        pick[i] = 0;
    };
    rec(rec, 0);
    return out;
}

IntVec meander_functional(const LadderGraph& g, const std::vector<const PositivePath*>& paths) {
    IntVec lam(g.edges.size(), 1);
    for (const auto* p : paths)
        for (int e : p->crossed) lam[e] -= g.roof_size(p->origin);
    for (int i = 1; i <= g.l(); ++i) {
        Int s = 0;
        for (int e : g.roofs[i - 1]) s += lam[e];
        if (s != 0) throw ConsistencyError("meander functional violates a roof-sum relation");
    }
    for (const auto& b : g.boxes)
        if (lam[b.corner_v] + lam[b.corner_h] != lam[b.opp_h] + lam[b.opp_v])
            throw ConsistencyError("meander functional violates a corner balance");
    return lam;
}

std::vector<int> upper_set(const LadderGraph& g, int edge) {
    const auto& e = g.edges[edge];
    if (!e.is_roof) throw NotARoofEdge("upper set requires a roof edge");
    std::vector<int> u{edge};
    if (e.dir == Dir::Horizontal) {
        for (int y2 = e.mid.y2 - 2; y2 >= 0; y2 -= 2)
            if (int f = g.edge_at_mid(e.mid.x2, y2); f >= 0) u.push_back(f);
    } else {
        for (int x2 = e.mid.x2 - 2; x2 >= 0; x2 -= 2)
            if (int f = g.edge_at_mid(x2, e.mid.y2); f >= 0) u.push_back(f);
    }
    for (size_t k = 1; k < u.size(); ++k)
        if (g.edges[u[k]].is_roof)
            throw ConsistencyError("upper set swallowed another roof edge");
    std::sort(u.begin(), u.end());
    return u;
}

IntVec upper_indicator(const LadderGraph& g, int edge) {
    IntVec v(g.edges.size(), 0);
    for (int f : upper_set(g, edge)) v[f] = 1;
    return v;
}

IntVec section_functional(const LadderGraph& g, int edge, const PositivePath& p) {
    auto u = upper_indicator(g, edge);
    auto lam = path_functional(g, p);
    IntVec v(g.edges.size(), 0);
    for (size_t f = 0; f < v.size(); ++f) {
        bool in_u = u[f] == 1, crossed = lam[f] == 1;
        if (in_u && !crossed) v[f] = -1;
        else if (!in_u && crossed) v[f] = 1;
    }
    return v;
}

int PathTable::global_id(int i, int k) const {
    int base = 0;
    for (int j = 1; j < i; ++j) base += static_cast<int>(by_roof[j - 1].size());
    return base + k;
}

PathTable all_paths(const LadderGraph& g) {
    PathTable t;
    for (int i = 1; i <= g.l(); ++i) {
        t.by_roof.push_back(enumerate_positive_paths(g, i));
        for (size_t k = 0; k < t.by_roof.back().size(); ++k)
            t.flat.emplace_back(i, static_cast<int>(k));
    }
    return t;
}

} // namespace flagtoric
