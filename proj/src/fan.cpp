#include "flagtoric/fan.hpp"

#include <algorithm>

#include "flagtoric/errors.hpp"

namespace flagtoric {

std::vector<SimplicialCone> refined_fan(const LadderGraph& g) {
    const int l = g.l();
    const long nb = static_cast<long>(g.boxes.size());
    std::vector<std::vector<PositivePath>> pool;
    for (int i = 1; i <= l; ++i) pool.push_back(enumerate_positive_paths(g, i));

    std::vector<SimplicialCone> out;
    std::vector<int> roof_pick(l, 0); // position of the omitted edge within each roof
    std::vector<int> box_pick(nb, 0); // 0 = vertical corner edge, 1 = horizontal

    auto emit = [&]() {
        std::vector<int> omitted;
        for (int i = 0; i < l; ++i) omitted.push_back(g.roofs[i][roof_pick[i]]);
        std::vector<int> chosen_f(nb);
        for (long b = 0; b < nb; ++b) {
            chosen_f[b] = box_pick[b] == 0 ? g.boxes[b].corner_v : g.boxes[b].corner_h;
            omitted.push_back(chosen_f[b]);
        }
        SimplicialCone cone;
        for (const auto& e : g.edges)
            if (std::find(omitted.begin(), omitted.end(), e.id) == omitted.end())
                cone.generators.push_back(e.id);
        if (static_cast<long>(cone.generators.size()) != g.num_dots)
            throw ConsistencyError("cone generator count != |D|");
        IntMat m;
        for (int e : cone.generators) m.push_back(g.delta_vector(e));
        cone.det = det_of(m);
        if (cone.det != 1 && cone.det != -1)
            throw UnimodularityFailure("cone determinant not a unit");

        // the unique meander crossing exactly the omitted edges
        std::vector<const PositivePath*> chosen_paths;
        for (int i = 0; i < l; ++i) {
            const PositivePath* match = nullptr;
            for (const auto& p : pool[i]) {
                bool ok = false;
                for (int e : p.crossed)
                    if (e == g.roofs[i][roof_pick[i]]) ok = true;
                if (!ok) continue;
                for (int e : p.crossed) {
                    int b = g.edges[e].corner_of;
                    if (b >= 0 && e != chosen_f[b]) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (match) throw ContainmentFailure("two paths satisfy the cone choice");
                match = &p;
            }
            if (!match) throw ContainmentFailure("no path satisfies the cone choice");
            chosen_paths.push_back(match);
        }
        auto lam = meander_functional(g, chosen_paths);
        for (int e : cone.generators)
            if (lam[e] != 1)
                throw ContainmentFailure("cone generator outside its meander facet");
        cone.meander = -1;
        out.push_back(std::move(cone));
    };

    auto rec = [&](auto&& self, long level) -> void {
        if (level == l + nb) {
            emit();
            return;
        }
        if (level < l) {
            for (roof_pick[level] = 0;
                 roof_pick[level] < static_cast<int>(g.roofs[level].size()); ++roof_pick[level])
                self(self, level + 1);
            roof_pick[level] = 0;
        } else {
            long b = level - l;
            for (box_pick[b] = 0; box_pick[b] < 2; ++box_pick[b]) self(self, level + 1);
            box_pick[b] = 0;
        }
    };
    rec(rec, 0);

    long expected = 1;
    for (int i = 1; i <= l; ++i) expected *= g.roof_size(i);
    for (long b = 0; b < nb; ++b) expected *= 2;
    if (static_cast<long>(out.size()) != expected)
        throw ConsistencyError("refined fan cone count mismatch");

    // attach meander ids for reporting
    auto meanders = enumerate_meanders(g);
    std::map<IntVec, int> by_lambda;
    for (size_t i = 0; i < meanders.size(); ++i)
        by_lambda.emplace(meanders[i].lambda, static_cast<int>(i));
    for (auto& cone : out) {
        // recover the facet the cone sits in: the unique meander with
        // lambda = 1 on all generators
        for (const auto& [lam, id] : by_lambda) {
            bool all = true;
            for (int e : cone.generators)
                if (lam[e] != 1) {
                    all = false;
                    break;
                }
            if (all) {
                cone.meander = id;
                break;
            }
        }
        if (cone.meander < 0) throw ContainmentFailure("cone not inside any meander facet");
    }
    return out;
}

std::vector<ConifoldStratum> singular_strata(const LadderGraph& g) {
    std::vector<ConifoldStratum> out;
    for (const auto& b : g.boxes) {
        ConifoldStratum s;
        s.box = b.id;
        IntVec cv = g.delta_vector(b.corner_v), ch = g.delta_vector(b.corner_h);
        IntVec oh = g.delta_vector(b.opp_h), ov = g.delta_vector(b.opp_v);
        s.rays = {cv, ch, oh, ov};
        const long d = g.num_dots;
        for (long j = 0; j < d; ++j)
            if (cv[j] + ch[j] != oh[j] + ov[j])
                throw NormalFormFailure("box square relation fails");
        IntVec u(d), up(d);
        for (long j = 0; j < d; ++j) {
            u[j] = oh[j] - cv[j];
            up[j] = ov[j] - cv[j];
        }
        s.basis_rows = {u, up, cv};
        if (rank_of(s.basis_rows) != 3) throw NormalFormFailure("box rays do not span rank 3");
        auto inv = smith_invariants(s.basis_rows);
        if (inv.size() != 3 || inv[0] != 1 || inv[1] != 1 || inv[2] != 1)
            throw NormalFormFailure("box rays are not a primitive rank-3 lattice square");
        out.push_back(std::move(s));
    }
    return out;
}

} // namespace flagtoric
