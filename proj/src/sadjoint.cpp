#include "catkit/sadjoint.hpp"

#include <algorithm>

namespace catkit {

PresentedICat s_adjoint(const SSpacePtr& x) {
    if (x->outer_dim < 2)
        throw std::invalid_argument("s_adjoint: needs levels 0..2 of the simplicial space");
    PresentedICat out;
    out.source = x;
    int D = x->inner_dim();
    const SSetPtr& X0 = x->level[0];
    const SSetPtr& X1 = x->level[1];
    const SSetPtr& X2 = x->level[2];
    for (int k = 0; k <= D; ++k) {
        PresentedCat p;
        for (const Expr& e : X0->elems[k]) p.objects.push_back(X0->expr_string(e));
        for (const Expr& e : X1->elems[k])
            p.gens.push_back({X1->expr_string(e), X0->index_of(x->face[1][1](e)),
                              X0->index_of(x->face[1][0](e))});
        // degenerate edges are identities
        for (int v = 0; v < X0->elem_count(k); ++v) {
            int g = X1->index_of(x->degen[0][0](X0->elems[k][v]));
            p.rels.push_back({{g}, {}});
        }
        // each 2-simplex composes its outer faces
        for (const Expr& t : X2->elems[k]) {
            int f2 = X1->index_of(x->face[2][2](t));
            int f0 = X1->index_of(x->face[2][0](t));
            int f1 = X1->index_of(x->face[2][1](t));
            p.rels.push_back({{f2, f0}, {f1}});
        }
        out.level.push_back(std::move(p));
    }
    return out;
}

ValidationReport verify_counit_iso(const ICatPtr& c, int inner_degrees) {
    ValidationReport rep;
    SSpacePtr n = nerve(c, 2);
    PresentedICat s = s_adjoint(n);
    for (int k = 0; k <= std::min(inner_degrees, c->ob->trunc_dim); ++k) {
        FinCat expected = level_cat(*c, k);
        // generators are named by the arrow simplices, objects by the object
        // simplices; match by name
        std::vector<int> obj_map, gen_map;
        for (const auto& o : s.level[k].objects) {
            auto i = expected.find_object(o);
            if (!i) {
                rep.fail("degree " + std::to_string(k) + ": object " + o + " not in the target");
                return rep;
            }
            obj_map.push_back(*i);
        }
        for (const auto& g : s.level[k].gens) {
            auto i = expected.find_arrow(g.id);
            if (!i) {
                rep.fail("degree " + std::to_string(k) + ": generator " + g.id +
                         " not in the target");
                return rep;
            }
            gen_map.push_back(*i);
        }
        auto r = presentation_matches(s.level[k], expected, obj_map, gen_map);
        if (!r.ok)
            rep.fail("degree " + std::to_string(k) + ": " + r.violations[0]);
    }
    return rep;
}

ValidationReport verify_s_of_cell(int p, int q, int inner_degrees) {
    ValidationReport rep;
    int D = std::max(inner_degrees, q);
    SSpaceProduct fp_dq =
        sspace_product(make_F(p, 2, D), constant_sspace(standard_simplex(q, D), 2));
    PresentedICat s = s_adjoint(fp_dq.obj);
    FinCat base = poset_cat(p);
    auto dq = standard_simplex(q, D);
    for (int k = 0; k <= inner_degrees; ++k) {
        // expected: one copy of [p] per k-simplex of Delta[q]
        FinCat expected;
        std::vector<std::string> simplex_names;
        for (const Expr& e : dq->elems[k]) simplex_names.push_back(dq->expr_string(e));
        for (const auto& s_name : simplex_names)
            for (const auto& o : base.objects) expected.objects.push_back(o + "@" + s_name);
        int nb = static_cast<int>(base.objects.size());
        for (size_t si = 0; si < simplex_names.size(); ++si)
            for (const auto& f : base.arrows)
                expected.arrows.push_back({f.id + "@" + simplex_names[si],
                                           f.src + static_cast<int>(si) * nb,
                                           f.dst + static_cast<int>(si) * nb});
        int na = static_cast<int>(base.arrows.size());
        for (size_t si = 0; si < simplex_names.size(); ++si)
            for (int o = 0; o < nb; ++o) expected.ident.push_back(base.ident[o] + static_cast<int>(si) * na);
        for (size_t si = 0; si < simplex_names.size(); ++si)
            for (auto& [fg, h] : base.comp)
                expected.comp[{fg.first + static_cast<int>(si) * na,
                               fg.second + static_cast<int>(si) * na}] =
                    h + static_cast<int>(si) * na;
        // identify generators and objects through the product projections
        auto simplex_index = [&](const Expr& e) {
            return dq->index_of(e);
        };
        std::vector<int> obj_map, gen_map;
        const SSetPtr& X0 = fp_dq.obj->level[0];
        const SSetPtr& X1 = fp_dq.obj->level[1];
        for (const Expr& e : X0->elems[k]) {
            Expr a = fp_dq.levels[0].p1(e);  // a degenerate point of F(p) level 0
            Expr b = fp_dq.levels[0].p2(e);
            int digit = std::stoi(fp_dq.levels[0].lhs->ids[0][a.base]);
            obj_map.push_back(simplex_index(b) * nb + digit);
        }
        for (const Expr& e : X1->elems[k]) {
            Expr a = fp_dq.levels[1].p1(e);
            Expr b = fp_dq.levels[1].p2(e);
            std::string mono = fp_dq.levels[1].lhs->ids[0][a.base];
            std::string arrow_name = std::string(1, mono[0]) + "<" + std::string(1, mono[1]);
            gen_map.push_back(simplex_index(b) * na + *base.find_arrow(arrow_name));
        }
        auto r = presentation_matches(s.level[k], expected, obj_map, gen_map);
        if (!r.ok) rep.fail("degree " + std::to_string(k) + ": " + r.violations[0]);
    }
    return rep;
}

SXMaps enumerate_maps_out_of_s(const SSpacePtr& x, const ICatPtr& c, std::uint64_t budget) {
    SXMaps out;
    const SSetPtr& X0 = x->level[0];
    const SSetPtr& X1 = x->level[1];
    const SSetPtr& X2 = x->level[2];
    int D = x->inner_dim();
    auto obs = enumerate_smaps(X0, c->ob, budget);
    if (!obs.complete) out.complete = false;
    std::uint64_t visited = 0;
    bool aborted = false;
    for (const SMap& u : obs.maps) {
        if (aborted) break;
        // arrow assignments: forced on degenerate edges, constrained by
        // endpoints and inner faces, then checked against the 2-simplices
        std::vector<std::vector<std::optional<Expr>>> forced(D + 1);
        for (int d = 0; d <= D; ++d) forced[d].assign(X1->dim_count(d), std::nullopt);
        bool consistent = true;
        for (int d = 0; d <= D && consistent; ++d)
            for (const Expr& w : X0->elems[d]) {
                Expr z = x->degen[0][0](w);
                if (z.is_degenerate()) continue;
                Expr img = c->unit(u(w));
                auto& slot = forced[z.dim()][z.base];
                if (slot && !(*slot == img)) consistent = false;
                slot = img;
            }
        if (!consistent) continue;
        SMap v{X1, c->ar, {}};
        v.assign.resize(D + 1);
        for (int d = 0; d <= D; ++d) v.assign[d].resize(X1->dim_count(d));
        std::vector<std::pair<int, int>> slots;
        for (int d = 0; d <= D; ++d)
            for (int j = 0; j < X1->dim_count(d); ++j) slots.push_back({d, j});
        std::function<void(size_t)> rec = [&](size_t s) {
            if (aborted) return;
            if (s == slots.size()) {
                for (int d = 0; d <= D; ++d)
                    for (const Expr& t : X2->elems[d]) {
                        Expr a = v(x->face[2][2](t));
                        Expr bb = v(x->face[2][0](t));
                        if (!(c->comp(c->comp_dom.pair(a, bb)) == v(x->face[2][1](t)))) return;
                    }
                out.maps.push_back({u, v});
                return;
            }
            auto [d, j] = slots[s];
            Expr nd{d, j, {}};
            auto try_candidate = [&](const Expr& cand) {
                if (++visited > budget) {
                    aborted = true;
                    return;
                }
                for (int i = 0; d >= 1 && i <= d; ++i)
                    if (v(X1->nd_face[d][j][i]) != c->ar->face_of(cand, i)) return;
                if (!(c->src(cand) == u(x->face[1][1](nd)))) return;
                if (!(c->tgt(cand) == u(x->face[1][0](nd)))) return;
                v.assign[d][j] = cand;
                rec(s + 1);
            };
            if (forced[d][j]) {
                try_candidate(*forced[d][j]);
            } else {
                for (const Expr& cand : c->ar->elems[d]) {
                    try_candidate(cand);
                    if (aborted) return;
                }
            }
        };
        rec(0);
    }
    if (aborted) out.complete = false;
    return out;
}

SSMap transpose_to_nerve(const SSpacePtr& x, const ICatPtr& c, const SSpacePtr& nc,
                         const SMap& u, const SMap& v) {
    SSMap out{x, nc, {}};
    SMap u2 = u;
    u2.dst = nc->level[0];
    out.level.push_back(u2);
    for (int n = 1; n <= x->outer_dim; ++n) {
        std::vector<SMap> comps;
        for (int i = 1; i <= n; ++i) comps.push_back(compose(v, outer_op(*x, {i - 1, i}, n)));
        SMap lvl = into_nerve_level(c, nc, n, comps);
        lvl.src = x->level[n];
        out.level.push_back(lvl);
    }
    return out;
}

}  // namespace catkit
