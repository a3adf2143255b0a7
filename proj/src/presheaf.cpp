#include "catkit/presheaf.hpp"

#include <algorithm>
#include <set>

namespace catkit {

Presheaf make_presheaf(const ICatPtr& c, const SSetPtr& carrier, const SMap& projection,
                       Variance v, const std::function<SMap(const FiberProduct&)>& action_fn) {
    Presheaf f;
    f.over = c;
    f.carrier = carrier;
    f.projection = projection;
    f.variance = v;
    f.action_dom = v == Variance::Right ? fiber_product(projection, c->src)
                                        : fiber_product(c->tgt, projection);
    f.action = action_fn(f.action_dom);
    return f;
}

ValidationReport validate_presheaf(const Presheaf& f) {
    ValidationReport rep;
    auto r = validate_smap(f.projection);
    if (!r.ok) rep.fail("projection is not simplicial: " + r.violations[0]);
    r = validate_smap(f.action);
    if (!r.ok) rep.fail("action is not simplicial: " + r.violations[0]);
    if (!rep.ok) return rep;
    const ICatPtr& c = f.over;
    bool right = f.variance == Variance::Right;
    const SMap& arrow_proj = right ? f.action_dom.p2 : f.action_dom.p1;
    const SMap& elt_proj = right ? f.action_dom.p1 : f.action_dom.p2;
    // projection compatibility; the remaining laws presuppose it
    {
        SMap lhs = compose(f.projection, f.action);
        SMap rhs = right ? compose(c->tgt, arrow_proj) : compose(c->src, arrow_proj);
        if (!(lhs == rhs)) {
            rep.fail("projection incompatible with the action");
            return rep;
        }
    }
    // unitality
    {
        SMap unit_arrow = compose(c->unit, f.projection);
        SMap into = right ? f.action_dom.tuple(identity_map(f.carrier), unit_arrow)
                          : f.action_dom.tuple(unit_arrow, identity_map(f.carrier));
        if (!(compose(f.action, into) == identity_map(f.carrier))) rep.fail("unit law fails");
    }
    // associativity against composition
    {
        // T = pairs of an action pair with one more composable arrow
        FiberProduct t = right
            ? fiber_product(compose(c->tgt, arrow_proj), c->src)
            : fiber_product(c->tgt, compose(c->src, arrow_proj));
        if (right) {
            // ((x, a), b): act then b, against x acted by (a.b)
            SMap act1 = compose(f.action, t.p1);
            SMap route1 = compose(f.action, f.action_dom.tuple(act1, t.p2));
            SMap comp_ab = compose(
                c->comp, c->comp_dom.tuple(compose(arrow_proj, t.p1), t.p2));
            SMap route2 = compose(
                f.action, f.action_dom.tuple(compose(elt_proj, t.p1), comp_ab));
            if (!(route1 == route2)) rep.fail("action is not associative");
        } else {
            // (b, (a, x)): a acts then b, against (b.a) acting
            SMap act1 = compose(f.action, t.p2);
            SMap route1 = compose(f.action, f.action_dom.tuple(t.p1, act1));
            SMap comp_ba = compose(
                c->comp, c->comp_dom.tuple(t.p1, compose(arrow_proj, t.p2)));
            SMap route2 = compose(
                f.action, f.action_dom.tuple(comp_ba, compose(elt_proj, t.p2)));
            if (!(route1 == route2)) rep.fail("action is not associative");
        }
    }
    return rep;
}

Presheaf terminal_presheaf(const ICatPtr& c, Variance v) {
    SMap id_ob = identity_map(c->ob);
    return make_presheaf(c, c->ob, id_ob, v, [&](const FiberProduct& fp) {
        return v == Variance::Right ? compose(c->tgt, fp.p2) : compose(c->src, fp.p1);
    });
}

Presheaf representable(const ICatPtr& c, const Expr& vertex) {
    if (vertex.dim() != 0) throw std::invalid_argument("representable: not a vertex");
    auto pt = discrete_sset({"*"}, c->ob->trunc_dim);
    SMap vmap = constant_map(pt, c->ob, vertex);
    FiberProduct fib = fiber_product(c->tgt, vmap);  // arrows with target v
    SMap proj = compose(c->src, fib.p1);
    return make_presheaf(c, fib.obj, proj, Variance::Left, [&](const FiberProduct& dom) {
        // (g, x) with tgt g = src (arrow of x); compose
        return map_from_elem_images(dom.obj, fib.obj, [&](int d, const Expr& nd) {
            Expr g = dom.p1.assign[d][nd.base];
            Expr x = dom.p2.assign[d][nd.base];
            Expr a = fib.p1(x);
            Expr ptp = fib.p2(x);
            Expr composed = c->comp(c->comp_dom.pair(g, a));
            return fib.pair(composed, ptp);
        });
    });
}

Presheaf corepresentable(const ICatPtr& c, const Expr& vertex) {
    if (vertex.dim() != 0) throw std::invalid_argument("corepresentable: not a vertex");
    auto pt = discrete_sset({"*"}, c->ob->trunc_dim);
    SMap vmap = constant_map(pt, c->ob, vertex);
    FiberProduct fib = fiber_product(vmap, c->src);  // arrows with source p
    SMap proj = compose(c->tgt, fib.p2);
    return make_presheaf(c, fib.obj, proj, Variance::Right, [&](const FiberProduct& dom) {
        return map_from_elem_images(dom.obj, fib.obj, [&](int d, const Expr& nd) {
            Expr x = dom.p1.assign[d][nd.base];
            Expr g = dom.p2.assign[d][nd.base];
            Expr ptp = fib.p1(x);
            Expr a = fib.p2(x);
            Expr composed = c->comp(c->comp_dom.pair(a, g));
            return fib.pair(ptp, composed);
        });
    });
}

ValidationReport validate_presheaf_map(const PresheafMap& h) {
    ValidationReport rep;
    const Presheaf& f = *h.src;
    const Presheaf& g = *h.dst;
    auto r = validate_smap(h.map);
    if (!r.ok) {
        rep.fail("underlying map is not simplicial: " + r.violations[0]);
        return rep;
    }
    if (!(compose(g.projection, h.map) == f.projection)) rep.fail("map is not over Ob(C)");
    bool right = f.variance == Variance::Right;
    SMap induced = right
        ? g.action_dom.tuple(compose(h.map, f.action_dom.p1), f.action_dom.p2)
        : g.action_dom.tuple(f.action_dom.p1, compose(h.map, f.action_dom.p2));
    if (!(compose(g.action, induced) == compose(h.map, f.action)))
        rep.fail("map does not commute with the action");
    return rep;
}

PresheafMapEnumeration enumerate_presheaf_maps(const Presheaf& f, const Presheaf& g,
                                               std::uint64_t budget) {
    PresheafMapEnumeration out;
    int D = f.carrier->trunc_dim;
    SMap h{f.carrier, g.carrier, {}};
    h.assign.resize(D + 1);
    for (int d = 0; d <= D; ++d) h.assign[d].resize(f.carrier->dim_count(d));
    std::vector<std::pair<int, int>> slots;
    for (int d = 0; d <= D; ++d)
        for (int j = 0; j < f.carrier->dim_count(d); ++j) slots.push_back({d, j});
    std::uint64_t visited = 0;
    bool aborted = false;
    bool right = f.variance == Variance::Right;
    std::function<void(size_t)> rec = [&](size_t s) {
        if (aborted) return;
        if (s == slots.size()) {
            // action compatibility on every simplex of the action domain
            for (int d = 0; d <= D; ++d)
                for (const Expr& p : f.action_dom.obj->elems[d]) {
                    Expr x = f.action_dom.p1(p), y = f.action_dom.p2(p);
                    Expr lhs = h(f.action(p));
                    Expr rhs = right ? g.action(g.action_dom.pair(h(x), y))
                                     : g.action(g.action_dom.pair(x, h(y)));
                    if (lhs != rhs) return;
                }
            out.maps.push_back(h);
            return;
        }
        auto [d, j] = slots[s];
        for (const Expr& cand : g.carrier->elems[d]) {
            if (++visited > budget) {
                aborted = true;
                return;
            }
            bool ok = true;
            for (int i = 0; d >= 1 && i <= d && ok; ++i)
                if (h(f.carrier->nd_face[d][j][i]) != g.carrier->face_of(cand, i)) ok = false;
            if (ok && !(g.projection(cand) == f.projection.assign[d][j])) ok = false;
            if (!ok) continue;
            h.assign[d][j] = cand;
            rec(s + 1);
            if (aborted) return;
        }
    };
    rec(0);
    out.complete = !aborted;
    return out;
}

// --- derived Yoneda ----------------------------------------------------------------

YonedaReport yoneda_check(const ICatPtr& c, const Expr& vertex, const Presheaf& f, int levels,
                          int probe_dim) {
    YonedaReport rep;
    if (f.variance != Variance::Left)
        throw std::invalid_argument("yoneda_check: expects a presheaf in S^{C^op}");
    if (levels > c->ob->trunc_dim)
        throw std::invalid_argument("yoneda_check: levels exceed the truncation");
    auto probe = kan_fibration_probe(f.projection, probe_dim);
    if (!probe.pass) rep.advisory = true;
    Presheaf hv = representable(c, vertex);
    auto pt = discrete_sset({"*"}, c->ob->trunc_dim);
    SMap vmap = constant_map(pt, c->ob, vertex);
    FiberProduct strict = fiber_product(vmap, f.projection);
    // the universal element of h_v: the identity arrow at v
    FiberProduct hv_fib = fiber_product(c->tgt, vmap);
    Expr universal = hv_fib.pair(c->unit(vertex), Expr{0, 0, {}});
    for (int n = 0; n <= levels; ++n) {
        auto dn = standard_simplex(n, c->ob->trunc_dim);
        Product tensor = product(hv.carrier, dn);
        SMap proj = compose(hv.projection, tensor.p1);
        Presheaf hvn = make_presheaf(c, tensor.obj, proj, Variance::Left,
                                     [&](const FiberProduct& dom) {
            return map_from_elem_images(dom.obj, tensor.obj, [&](int d, const Expr& nd) {
                Expr g = dom.p1.assign[d][nd.base];
                Expr xs = dom.p2.assign[d][nd.base];
                Expr acted = hv.action(hv.action_dom.pair(g, tensor.p1(xs)));
                return tensor.pair(acted, tensor.p2(xs));
            });
        });
        auto maps = enumerate_presheaf_maps(hvn, f);
        if (!maps.complete) {
            rep.ok = false;
            rep.failures.push_back("level " + std::to_string(n) + ": enumeration budget exhausted");
            return rep;
        }
        // evaluation at (identity of v, top simplex)
        int d_top = n;
        Word w(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) w[i] = n - 1 - i;
        Expr univ_n{universal.base_dim, universal.base, w};
        Expr top = dn->nondeg_expr(n, 0);
        Expr xi = tensor.pair(univ_n, top);
        std::set<Expr> images;
        for (const SMap& m : maps.maps) images.insert(m(xi));
        rep.map_counts.push_back(static_cast<int>(maps.maps.size()));
        rep.fiber_counts.push_back(strict.obj->elem_count(d_top));
        if (images.size() != maps.maps.size()) {
            rep.ok = false;
            rep.failures.push_back("level " + std::to_string(n) +
                                   ": evaluation is not injective");
        }
        if (static_cast<int>(maps.maps.size()) != strict.obj->elem_count(d_top)) {
            rep.ok = false;
            rep.failures.push_back("level " + std::to_string(n) + ": |Map| = " +
                                   std::to_string(maps.maps.size()) + " but |fiber| = " +
                                   std::to_string(strict.obj->elem_count(d_top)));
        }
    }
    return rep;
}

// --- the equivalence arrow map ---------------------------------------------------------

ArrowMapResult equivalence_arrow_map(const ICatPtr& c, const Expr& arrow_vertex) {
    if (arrow_vertex.dim() != 0)
        throw std::invalid_argument("equivalence_arrow_map: not a vertex of Ar(C)");
    ArrowMapResult out;
    Expr sv = c->src(arrow_vertex);
    Expr tv = c->tgt(arrow_vertex);
    out.source = representable(c, sv);
    out.target = representable(c, tv);
    // carriers are fiber products (arrows, point); postcompose with f
    FiberProduct sfib = fiber_product(c->tgt, constant_map(discrete_sset({"*"}, c->ob->trunc_dim),
                                                           c->ob, sv));
    FiberProduct tfib = fiber_product(c->tgt, constant_map(discrete_sset({"*"}, c->ob->trunc_dim),
                                                           c->ob, tv));
    out.map = map_from_elem_images(out.source.carrier, out.target.carrier,
                                   [&](int d, const Expr& nd) {
        Expr g = sfib.p1.assign[d][nd.base];
        Expr ptp = sfib.p2.assign[d][nd.base];
        Word w(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
        Expr fd{arrow_vertex.base_dim, arrow_vertex.base, w};
        Expr composed = c->comp(c->comp_dom.pair(g, fd));
        return tfib.pair(composed, ptp);
    });
    return out;
}

std::map<std::string, Certificate> fiberwise_certificates(const Presheaf& f, const Presheaf& g,
                                                          const SMap& map,
                                                          const std::vector<Expr>& vertices,
                                                          int hom_bound) {
    std::map<std::string, Certificate> out;
    auto pt = discrete_sset({"*"}, f.over->ob->trunc_dim);
    for (const Expr& v : vertices) {
        SMap vmap = constant_map(pt, f.over->ob, v);
        FiberProduct fa = fiber_product(vmap, f.projection);
        FiberProduct fb = fiber_product(vmap, g.projection);
        SMap cand = map_from_elem_images(fa.obj, fb.obj, [&](int d, const Expr& nd) {
            Expr ptp = fa.p1.assign[d][nd.base];
            Expr x = fa.p2.assign[d][nd.base];
            return fb.pair(ptp, map(x));
        });
        CertOptions opts;
        opts.hom_bound = hom_bound;
        opts.candidate = cand;
        out[f.over->ob->expr_string(v)] = certify_equivalence(fa.obj, fb.obj, opts);
    }
    return out;
}

// --- bar construction ---------------------------------------------------------------------

namespace {

struct BarLevel {
    SSetPtr obj;
    SMap projF;
    std::vector<SMap> projA;
    SMap projG;
    std::vector<FiberProduct> steps;
};

BarLevel build_bar_level(const Presheaf& f, const Presheaf& g, int q) {
    const ICatPtr& c = f.over;
    BarLevel lv;
    if (q == 0) {
        FiberProduct fp = fiber_product(f.projection, g.projection);
        lv.projF = fp.p1;
        lv.projG = fp.p2;
        lv.obj = fp.obj;
        lv.steps.push_back(std::move(fp));
        return lv;
    }
    FiberProduct fp0 = fiber_product(f.projection, c->src);
    lv.projF = fp0.p1;
    lv.projA = {fp0.p2};
    lv.obj = fp0.obj;
    lv.steps.push_back(std::move(fp0));
    for (int i = 2; i <= q; ++i) {
        FiberProduct fp = fiber_product(compose(c->tgt, lv.projA.back()), c->src);
        lv.projF = compose(lv.projF, fp.p1);
        for (SMap& pa : lv.projA) pa = compose(pa, fp.p1);
        lv.projA.push_back(fp.p2);
        lv.obj = fp.obj;
        lv.steps.push_back(std::move(fp));
    }
    FiberProduct fpg = fiber_product(compose(c->tgt, lv.projA.back()), g.projection);
    lv.projF = compose(lv.projF, fpg.p1);
    for (SMap& pa : lv.projA) pa = compose(pa, fpg.p1);
    lv.projG = fpg.p2;
    lv.obj = fpg.obj;
    lv.steps.push_back(std::move(fpg));
    return lv;
}

SMap into_bar(const BarLevel& lv, const SMap& compF, const std::vector<SMap>& compAs,
              const SMap& compG) {
    SMap cur = compF;
    for (size_t i = 0; i < compAs.size(); ++i) cur = lv.steps[i].tuple(cur, compAs[i]);
    cur = lv.steps.back().tuple(cur, compG);
    return cur;
}

}  // namespace

Presheaf arrows_as_left_module(const ICatPtr& c) {
    return make_presheaf(c, c->ar, c->src, Variance::Left, [&](const FiberProduct& dom) {
        return map_from_elem_images(dom.obj, c->ar, [&](int d, const Expr& nd) {
            Expr gmap = dom.p1.assign[d][nd.base];
            Expr a = dom.p2.assign[d][nd.base];
            return c->comp(c->comp_dom.pair(gmap, a));
        });
    });
}

BarObject bar_two_sided(const Presheaf& f, const Presheaf& g, int levels) {
    if (f.variance != Variance::Right || g.variance != Variance::Left)
        throw std::invalid_argument("bar_two_sided: need a right and a left module");
    const ICatPtr& c = f.over;
    BarObject bar;
    bar.f = f;
    bar.g = g;
    std::vector<BarLevel> lv;
    for (int q = 0; q <= levels; ++q) lv.push_back(build_bar_level(f, g, q));
    auto sp = std::make_shared<SSpace>();
    sp->outer_dim = levels;
    sp->face.resize(levels + 1);
    sp->degen.resize(levels + 1);
    for (int q = 0; q <= levels; ++q) sp->level.push_back(lv[q].obj);
    for (int q = 1; q <= levels; ++q) {
        for (int i = 0; i <= q; ++i) {
            SMap compF = lv[q].projF;
            std::vector<SMap> compAs;
            SMap compG = lv[q].projG;
            if (i == 0) {
                compF = compose(f.action, f.action_dom.tuple(lv[q].projF, lv[q].projA[0]));
                for (int j = 1; j < q; ++j) compAs.push_back(lv[q].projA[j]);
            } else if (i == q) {
                compG = compose(g.action, g.action_dom.tuple(lv[q].projA[q - 1], lv[q].projG));
                for (int j = 0; j < q - 1; ++j) compAs.push_back(lv[q].projA[j]);
            } else {
                for (int j = 0; j < q - 1; ++j) {
                    if (j < i - 1)
                        compAs.push_back(lv[q].projA[j]);
                    else if (j == i - 1)
                        compAs.push_back(compose(
                            c->comp, c->comp_dom.tuple(lv[q].projA[i - 1], lv[q].projA[i])));
                    else
                        compAs.push_back(lv[q].projA[j + 1]);
                }
            }
            sp->face[q].push_back(into_bar(lv[q - 1], compF, compAs, compG));
        }
    }
    for (int q = 0; q < levels; ++q) {
        for (int i = 0; i <= q; ++i) {
            std::vector<SMap> compAs;
            SMap einsert = (i == 0)
                ? compose(c->unit, compose(f.projection, lv[q].projF))
                : compose(c->unit, compose(c->tgt, lv[q].projA[i - 1]));
            for (int j = 0; j < i; ++j) compAs.push_back(lv[q].projA[j]);
            compAs.push_back(einsert);
            for (int j = i; j < q; ++j) compAs.push_back(lv[q].projA[j]);
            sp->degen[q].push_back(into_bar(lv[q + 1], lv[q].projF, compAs, lv[q].projG));
        }
        // the extra degeneracy also inserts at the front
        std::vector<SMap> compAs;
        compAs.push_back(compose(c->unit, compose(f.projection, lv[q].projF)));
        for (int j = 0; j < q; ++j) compAs.push_back(lv[q].projA[j]);
        bar.extra.push_back(into_bar(lv[q + 1], lv[q].projF, compAs, lv[q].projG));
    }
    bar.space = sp;
    // augmentation to F when the coefficient is the arrows: (x, a) -> x.a
    if (g.carrier == c->ar) {
        bar.augment = compose(f.action, f.action_dom.tuple(lv[0].projF, lv[0].projG));
    }
    return bar;
}

BarObject bar_resolution(const Presheaf& f, int levels) {
    return bar_two_sided(f, arrows_as_left_module(f.over), levels);
}

ValidationReport verify_extra_degeneracy(const BarObject& bar) {
    ValidationReport rep;
    const SSpacePtr& sp = bar.space;
    for (size_t q = 0; q < bar.extra.size(); ++q) {
        if (!(compose(sp->face[q + 1][0], bar.extra[q]) == identity_map(sp->level[q])))
            rep.fail("d_0 after the extra degeneracy is not the identity at level " +
                     std::to_string(q));
        for (size_t i = 1; i <= q; ++i)
            if (!(compose(sp->face[q + 1][i + 1], bar.extra[q]) ==
                  compose(bar.extra[q - 1], sp->face[q][i])))
                rep.fail("extra degeneracy fails d_{i+1} s = s d_i at level " + std::to_string(q));
    }
    if (bar.g.carrier == bar.f.over->ar) {
        // the augmentation is split by inserting the unit
        const ICatPtr& c = bar.f.over;
        BarLevel lv0 = build_bar_level(bar.f, bar.g, 0);
        SMap section = into_bar(lv0, identity_map(bar.f.carrier), {},
                                compose(c->unit, bar.f.projection));
        if (!(compose(bar.augment, section) == identity_map(bar.f.carrier)))
            rep.fail("the augmentation is not split by the unit insertion");
        if (!(compose(bar.augment, bar.space->face[1][0]) ==
              compose(bar.augment, bar.space->face[1][1])))
            rep.fail("the augmentation does not coequalize the two faces");
    }
    return rep;
}

// --- base change ------------------------------------------------------------------------------

Presheaf pullback_presheaf(const ICatMap& alpha, const Presheaf& g) {
    if (g.variance != Variance::Right)
        throw std::invalid_argument("pullback_presheaf: right modules only");
    const ICatPtr& c = alpha.src;
    FiberProduct carrier = fiber_product(g.projection, alpha.on_ob);  // G x_Q P
    SMap proj = carrier.p2;
    return make_presheaf(c, carrier.obj, proj, Variance::Right, [&](const FiberProduct& dom) {
        return map_from_elem_images(dom.obj, carrier.obj, [&](int d, const Expr& nd) {
            Expr pair = dom.p1.assign[d][nd.base];
            Expr a = dom.p2.assign[d][nd.base];
            Expr x = carrier.p1(pair);
            Expr acted = g.action(g.action_dom.pair(x, alpha.on_ar(a)));
            return carrier.pair(acted, c->tgt(a));
        });
    });
}

Presheaf pushforward_corepresentable(const ICatMap& alpha, const Expr& p_vertex) {
    // {p} x_Q Ar(D): the formula value of alpha_! on h^p
    return corepresentable(alpha.dst, alpha.on_ob(p_vertex));
}

KanExtension homotopy_left_kan(const ICatMap& alpha, const Presheaf& f, int levels,
                               int probe_dim) {
    KanExtension out;
    const ICatPtr& c = alpha.src;
    const ICatPtr& d = alpha.dst;
    auto sc = strongly_segal_check(c, probe_dim, 2);
    auto sd = strongly_segal_check(d, probe_dim, 2);
    if (!sc.pass || !sd.pass) {
        out.advisory = true;
        out.note = "strongly-Segal gatekeeper probes failed; derived output is advisory";
    }
    // coefficient: P x_Q Ar(D) as a left module over C
    FiberProduct coeff = fiber_product(alpha.on_ob, d->src);
    Presheaf g = make_presheaf(c, coeff.obj, coeff.p1, Variance::Left,
                               [&](const FiberProduct& dom) {
        return map_from_elem_images(dom.obj, coeff.obj, [&](int dd, const Expr& nd) {
            Expr a = dom.p1.assign[dd][nd.base];
            Expr pr = dom.p2.assign[dd][nd.base];
            Expr h = coeff.p2(pr);
            Expr composed = d->comp(d->comp_dom.pair(alpha.on_ar(a), h));
            return coeff.pair(c->src(a), composed);
        });
    });
    out.bar = bar_two_sided(f, g, levels);
    DiagonalResult diag = diagonal_with_provenance(out.bar.space);
    // rebuild the level data for elementwise reassembly
    std::vector<BarLevel> lv;
    for (int q = 0; q <= levels; ++q) lv.push_back(build_bar_level(f, g, q));
    // projection to Ob(D): the target of the coefficient arrow
    SMap proj = map_from_elem_images(diag.obj, d->ob, [&](int dd, const Expr& nd) {
        // nondegenerate diagonal simplices come from level-dd elements
        int e = -1;
        for (int k = 0; k < static_cast<int>(diag.expr_of_level_elem[dd].size()); ++k)
            if (diag.expr_of_level_elem[dd][k] == Expr{dd, nd.base, {}}) e = k;
        Expr belem = lv[dd].obj->elems[dd][e];
        Expr h = coeff.p2(lv[dd].projG(belem));
        return d->tgt(h);
    });
    out.result = make_presheaf(d, diag.obj, proj, Variance::Right, [&](const FiberProduct& dom) {
        return map_from_elem_images(dom.obj, diag.obj, [&](int dd, const Expr& nd) {
            Expr xi = dom.p1.assign[dd][nd.base];
            Expr k = dom.p2.assign[dd][nd.base];
            // xi is a dd-simplex of the diagonal: strip to its level element
            int q = xi.dim();
            int e = -1;
            for (int t = 0; t < static_cast<int>(diag.expr_of_level_elem[q].size()); ++t)
                if (diag.expr_of_level_elem[q][t] == xi) e = t;
            Expr belem = lv[q].obj->elems[q][e];
            Expr gpart = lv[q].projG(belem);
            Expr p = coeff.p1(gpart);
            Expr h = coeff.p2(gpart);
            Expr acted = d->comp(d->comp_dom.pair(h, k));
            Expr new_g = coeff.pair(p, acted);
            // reassemble the bar element with the new coefficient
            Expr cur = lv[q].projF(belem);
            for (size_t i = 0; i + 1 < lv[q].steps.size(); ++i)
                cur = lv[q].steps[i].pair(cur, lv[q].projA[i](belem));
            cur = lv[q].steps.back().pair(cur, new_g);
            return diag.expr_of_level_elem[q][lv[q].obj->index_of(cur)];
        });
    });
    return out;
}

// --- equivalences over components ------------------------------------------------------------------

OverComponentsReport equivalence_over_components(const Presheaf& f, const Presheaf& g,
                                                 const SMap& map,
                                                 const std::vector<int>& component_sample,
                                                 int hom_bound, int probe_dim) {
    OverComponentsReport rep;
    const ICatPtr& c = f.over;
    Pi0ModEquiv pme = pi0_mod_equiv(nerve(c, 2));
    std::vector<char> covered(pme.count, 0);
    for (int comp : component_sample) {
        if (comp < 0 || comp >= pme.vertex_pi0.count)
            throw std::invalid_argument("equivalence_over_components: bad component id");
        covered[pme.class_of_component[comp]] = 1;
    }
    for (int cls = 0; cls < pme.count; ++cls)
        if (!covered[cls]) {
            rep.rejection = "sample misses equivalence class " + std::to_string(cls) +
                            " of pi0 mod hoequiv";
            return rep;
        }
    auto pf = kan_fibration_probe(f.projection, probe_dim);
    auto pg = kan_fibration_probe(g.projection, probe_dim);
    if (!pf.pass || !pg.pass) rep.advisory = true;
    // one representative vertex per sampled component
    std::vector<Expr> reps;
    for (int comp : component_sample)
        for (int v = 0; v < c->ob->elem_count(0); ++v)
            if (pme.vertex_pi0.component_of_vertex[v] == comp) {
                reps.push_back(c->ob->elems[0][v]);
                break;
            }
    rep.fibers = fiberwise_certificates(f, g, map, reps, hom_bound);
    rep.accepted = true;
    for (auto& [vname, cert] : rep.fibers)
        if (!cert.passed()) rep.accepted = false;
    return rep;
}

}  // namespace catkit
