#include "catkit/icat.hpp"

#include <algorithm>

namespace catkit {

namespace {

/// The n-fold fiber power of arrows over objects together with the arrow
/// projections and the fiber products used to assemble it.
struct Chain {
    SSetPtr obj;
    std::vector<SMap> proj;            // proj[k]: obj -> ar (arrow k+1 of the chain)
    std::vector<FiberProduct> steps;   // steps[k] built power k+2
};

Chain build_chain(const ICat& c, int n) {
    Chain ch;
    if (n == 0) {
        ch.obj = c.ob;
        return ch;
    }
    ch.obj = c.ar;
    ch.proj = {identity_map(c.ar)};
    for (int k = 2; k <= n; ++k) {
        FiberProduct fp = fiber_product(compose(c.tgt, ch.proj.back()), c.src);
        for (SMap& pj : ch.proj) pj = compose(pj, fp.p1);
        ch.proj.push_back(fp.p2);
        ch.obj = fp.obj;
        ch.steps.push_back(std::move(fp));
    }
    return ch;
}

/// Induced map into an n-chain from compatible arrow components.
SMap into_chain(const Chain& ch, const std::vector<SMap>& comps) {
    SMap cur = comps[0];
    for (size_t k = 1; k < comps.size(); ++k) cur = ch.steps[k - 1].tuple(cur, comps[k]);
    return cur;
}

}  // namespace

ICatPtr make_icat(const SSetPtr& ob, const SSetPtr& ar, const SMap& src, const SMap& tgt,
                  const SMap& unit, const std::function<SMap(const FiberProduct&)>& comp_fn) {
    auto c = std::make_shared<ICat>();
    c->ob = ob;
    c->ar = ar;
    c->src = src;
    c->tgt = tgt;
    c->unit = unit;
    c->comp_dom = fiber_product(tgt, src);
    c->comp = comp_fn(c->comp_dom);
    return c;
}

ValidationReport validate_icat(const ICat& c) {
    ValidationReport rep;
    for (auto [m, name] : {std::pair<const SMap*, const char*>{&c.src, "source"},
                           {&c.tgt, "target"},
                           {&c.unit, "unit"},
                           {&c.comp, "composition"}}) {
        auto r = validate_smap(*m);
        if (!r.ok) rep.fail(std::string(name) + " is not simplicial: " + r.violations[0]);
    }
    if (!rep.ok) return rep;
    SMap id_ob = identity_map(c.ob);
    SMap id_ar = identity_map(c.ar);
    if (!(compose(c.src, c.unit) == id_ob)) rep.fail("source of a unit is not the object");
    if (!(compose(c.tgt, c.unit) == id_ob)) rep.fail("target of a unit is not the object");
    if (!(compose(c.src, c.comp) == compose(c.src, c.comp_dom.p1)))
        rep.fail("source of a composite differs from the source of the first factor");
    if (!(compose(c.tgt, c.comp) == compose(c.tgt, c.comp_dom.p2)))
        rep.fail("target of a composite differs from the target of the second factor");
    // unit laws
    {
        SMap left = c.comp_dom.tuple(compose(c.unit, c.src), id_ar);
        if (!(compose(c.comp, left) == id_ar)) rep.fail("left unit law fails");
        SMap right = c.comp_dom.tuple(id_ar, compose(c.unit, c.tgt));
        if (!(compose(c.comp, right) == id_ar)) rep.fail("right unit law fails");
    }
    // associativity on the triple fiber power
    {
        Chain ch3 = build_chain(c, 3);
        SMap p1 = ch3.proj[0], p2 = ch3.proj[1], p3 = ch3.proj[2];
        SMap m12 = compose(c.comp, c.comp_dom.tuple(p1, p2));
        SMap m23 = compose(c.comp, c.comp_dom.tuple(p2, p3));
        SMap lhs = compose(c.comp, c.comp_dom.tuple(m12, p3));
        SMap rhs = compose(c.comp, c.comp_dom.tuple(p1, m23));
        for (int d = 0; d <= c.ar->trunc_dim; ++d)
            if (lhs.assign[d] != rhs.assign[d]) {
                int j = 0;
                while (lhs.assign[d][j] == rhs.assign[d][j]) ++j;
                rep.fail("associativity fails on the composable triple " +
                         ch3.obj->ids[d][j]);
                break;
            }
    }
    return rep;
}

ICatPtr discrete_icat(const SSetPtr& k) {
    SMap idk = identity_map(k);
    return make_icat(k, k, idk, idk, idk, [&](const FiberProduct& fp) { return fp.p1; });
}

ICatPtr icat_from_fincat(const FinCat& c, int D) {
    std::vector<std::string> onames = c.objects;
    std::vector<std::string> anames;
    for (const auto& f : c.arrows) anames.push_back(f.id);
    SSetPtr ob = discrete_sset(onames, D);
    SSetPtr ar = discrete_sset(anames, D);
    auto vob = [&](int o) { return Expr{0, o, {}}; };
    auto var = [&](int f) { return Expr{0, f, {}}; };
    SMap src = map_from_elem_images(ar, ob, [&](int, const Expr& nd) {
        return vob(c.arrows[nd.base].src);
    });
    SMap tgt = map_from_elem_images(ar, ob, [&](int, const Expr& nd) {
        return vob(c.arrows[nd.base].dst);
    });
    SMap unit = map_from_elem_images(ob, ar, [&](int, const Expr& nd) {
        return var(c.ident[nd.base]);
    });
    return make_icat(ob, ar, src, tgt, unit, [&](const FiberProduct& fp) {
        return map_from_elem_images(fp.obj, ar, [&](int d, const Expr& nd) {
            Expr f = fp.p1.assign[d][nd.base];
            Expr g = fp.p2.assign[d][nd.base];
            return var(c.compose(f.base, g.base));
        });
    });
}

ValidationReport validate_icat_map(const ICatMap& f) {
    ValidationReport rep;
    auto r1 = validate_smap(f.on_ob);
    if (!r1.ok) rep.fail("object map not simplicial: " + r1.violations[0]);
    auto r2 = validate_smap(f.on_ar);
    if (!r2.ok) rep.fail("arrow map not simplicial: " + r2.violations[0]);
    if (!rep.ok) return rep;
    if (!(compose(f.dst->src, f.on_ar) == compose(f.on_ob, f.src->src)))
        rep.fail("map does not commute with source");
    if (!(compose(f.dst->tgt, f.on_ar) == compose(f.on_ob, f.src->tgt)))
        rep.fail("map does not commute with target");
    if (!(compose(f.on_ar, f.src->unit) == compose(f.dst->unit, f.on_ob)))
        rep.fail("map does not commute with units");
    if (rep.ok) {
        for (int d = 0; d <= f.src->ar->trunc_dim; ++d)
            for (int j = 0; j < f.src->comp_dom.obj->dim_count(d); ++j) {
                Expr p{d, j, {}};
                Expr a = f.on_ar(f.src->comp_dom.p1.assign[d][j]);
                Expr b = f.on_ar(f.src->comp_dom.p2.assign[d][j]);
                Expr lhs = f.on_ar(f.src->comp.assign[d][j]);
                Expr rhs = f.dst->comp(f.dst->comp_dom.pair(a, b));
                if (lhs != rhs) {
                    rep.fail("map does not commute with composition at " +
                             f.src->comp_dom.obj->ids[d][j]);
                    return rep;
                }
                (void)p;
            }
    }
    return rep;
}

ICatMap identity_icat_map(const ICatPtr& c) {
    return ICatMap{c, c, identity_map(c->ob), identity_map(c->ar)};
}

ICatMap compose(const ICatMap& g, const ICatMap& f) {
    return ICatMap{f.src, g.dst, compose(g.on_ob, f.on_ob), compose(g.on_ar, f.on_ar)};
}

ICatPtr icat_product(const ICatPtr& a, const ICatPtr& b) {
    Product pob = product(a->ob, b->ob);
    Product par = product(a->ar, b->ar);
    SMap src = pob.tuple(compose(a->src, par.p1), compose(b->src, par.p2));
    SMap tgt = pob.tuple(compose(a->tgt, par.p1), compose(b->tgt, par.p2));
    SMap unit = par.tuple(compose(a->unit, pob.p1), compose(b->unit, pob.p2));
    return make_icat(pob.obj, par.obj, src, tgt, unit, [&](const FiberProduct& fp) {
        return map_from_elem_images(fp.obj, par.obj, [&](int d, const Expr& nd) {
            Expr f = fp.p1.assign[d][nd.base];
            Expr g = fp.p2.assign[d][nd.base];
            Expr fa = par.p1(f), fb = par.p2(f);
            Expr ga = par.p1(g), gb = par.p2(g);
            Expr ca = a->comp(a->comp_dom.pair(fa, ga));
            Expr cb = b->comp(b->comp_dom.pair(fb, gb));
            return par.pair(ca, cb);
        });
    });
}

namespace {

ICatMap product_proj(const ICatPtr& prod, const ICatPtr& a, const ICatPtr& b, bool first) {
    Product pob = product(a->ob, b->ob);
    Product par = product(a->ar, b->ar);
    ICatMap f;
    f.src = prod;
    f.dst = first ? a : b;
    f.on_ob = first ? pob.p1 : pob.p2;
    f.on_ar = first ? par.p1 : par.p2;
    f.on_ob.src = prod->ob;
    f.on_ar.src = prod->ar;
    return f;
}

}  // namespace

ICatMap icat_proj1(const ICatPtr& prod, const ICatPtr& a, const ICatPtr& b) {
    return product_proj(prod, a, b, true);
}
ICatMap icat_proj2(const ICatPtr& prod, const ICatPtr& a, const ICatPtr& b) {
    return product_proj(prod, a, b, false);
}

ICatPtr icat_coproduct(const ICatPtr& a, const ICatPtr& b) {
    Pushout pob = coproduct(a->ob, b->ob);
    Pushout par = coproduct(a->ar, b->ar);
    auto piecewise = [&](const Pushout& dom, const Pushout& cod, const SMap& fa, const SMap& fb) {
        return map_from_elem_images(dom.obj, cod.obj, [&](int d, const Expr& nd) {
            const auto& [side, e] = dom.rep[d][nd.base];
            return side == 0 ? cod.class_of_a[d].at(fa(e)) : cod.class_of_b[d].at(fb(e));
        });
    };
    SMap src = piecewise(par, pob, a->src, b->src);
    SMap tgt = piecewise(par, pob, a->tgt, b->tgt);
    SMap unit = piecewise(pob, par, a->unit, b->unit);
    return make_icat(pob.obj, par.obj, src, tgt, unit, [&](const FiberProduct& fp) {
        return map_from_elem_images(fp.obj, par.obj, [&](int d, const Expr& nd) {
            Expr f = fp.p1.assign[d][nd.base];
            Expr g = fp.p2.assign[d][nd.base];
            // composable pairs never cross the two summands
            for (int side = 0; side < 2; ++side) {
                const auto& cls = side == 0 ? par.class_of_a[d] : par.class_of_b[d];
                const ICatPtr& cc = side == 0 ? a : b;
                std::optional<Expr> fe, ge;
                for (const auto& [orig, img] : cls) {
                    if (img == f) fe = orig;
                    if (img == g) ge = orig;
                }
                if (fe && ge)
                    return cls.at(cc->comp(cc->comp_dom.pair(*fe, *ge)));
            }
            throw std::logic_error("icat_coproduct: cross-summand composable pair");
        });
    });
}

FinCat level_cat(const ICat& c, int k) {
    FinCat out;
    for (const Expr& e : c.ob->elems[k]) out.objects.push_back(c.ob->expr_string(e));
    for (const Expr& e : c.ar->elems[k]) {
        out.arrows.push_back({c.ar->expr_string(e), c.ob->index_of(c.src(e)),
                              c.ob->index_of(c.tgt(e))});
    }
    for (const Expr& e : c.ob->elems[k]) out.ident.push_back(c.ar->index_of(c.unit(e)));
    for (int f = 0; f < c.ar->elem_count(k); ++f)
        for (int g = 0; g < c.ar->elem_count(k); ++g) {
            const Expr& fe = c.ar->elems[k][f];
            const Expr& ge = c.ar->elems[k][g];
            if (!(c.tgt(fe) == c.src(ge))) continue;
            out.comp[{f, g}] = c.ar->index_of(c.comp(c.comp_dom.pair(fe, ge)));
        }
    return out;
}

SSpacePtr nerve(const ICatPtr& c, int M) {
    auto sp = std::make_shared<SSpace>();
    sp->outer_dim = M;
    std::vector<Chain> chains;
    for (int n = 0; n <= M; ++n) chains.push_back(build_chain(*c, n));
    for (int n = 0; n <= M; ++n) sp->level.push_back(chains[n].obj);
    sp->face.resize(M + 1);
    sp->degen.resize(M + 1);
    for (int n = 1; n <= M; ++n) {
        for (int i = 0; i <= n; ++i) {
            if (n == 1) {
                sp->face[n].push_back(i == 0 ? c->tgt : c->src);
                continue;
            }
            std::vector<SMap> comps;
            if (i == 0) {
                for (int j = 1; j < n; ++j) comps.push_back(chains[n].proj[j]);
            } else if (i == n) {
                for (int j = 0; j < n - 1; ++j) comps.push_back(chains[n].proj[j]);
            } else {
                for (int j = 1; j <= n - 1; ++j) {
                    if (j < i)
                        comps.push_back(chains[n].proj[j - 1]);
                    else if (j == i)
                        comps.push_back(compose(
                            c->comp, c->comp_dom.tuple(chains[n].proj[i - 1], chains[n].proj[i])));
                    else
                        comps.push_back(chains[n].proj[j]);
                }
            }
            sp->face[n].push_back(into_chain(chains[n - 1], comps));
        }
    }
    for (int n = 0; n < M; ++n) {
        for (int i = 0; i <= n; ++i) {
            if (n == 0) {
                sp->degen[n].push_back(c->unit);
                continue;
            }
            SMap vert = (i == 0) ? compose(c->src, chains[n].proj[0])
                                 : compose(c->tgt, chains[n].proj[i - 1]);
            std::vector<SMap> comps;
            for (int j = 1; j <= n + 1; ++j) {
                if (j <= i)
                    comps.push_back(chains[n].proj[j - 1]);
                else if (j == i + 1)
                    comps.push_back(compose(c->unit, vert));
                else
                    comps.push_back(chains[n].proj[j - 2]);
            }
            sp->degen[n].push_back(into_chain(chains[n + 1], comps));
        }
    }
    return sp;
}

SMap into_nerve_level(const ICatPtr& c, const SSpacePtr& nc, int n,
                      const std::vector<SMap>& comps) {
    Chain ch = build_chain(*c, n);
    SMap out = into_chain(ch, comps);
    out.dst = nc->level[n];
    return out;
}

SSMap nerve_map(const ICatMap& f, int M) {
    SSpacePtr nx = nerve(f.src, M);
    SSpacePtr ny = nerve(f.dst, M);
    SSMap out{nx, ny, {}};
    std::vector<Chain> cx, cy;
    for (int n = 0; n <= M; ++n) {
        cx.push_back(build_chain(*f.src, n));
        cy.push_back(build_chain(*f.dst, n));
    }
    out.level.push_back(f.on_ob);
    for (int n = 1; n <= M; ++n) {
        std::vector<SMap> comps;
        for (int j = 0; j < n; ++j) comps.push_back(compose(f.on_ar, cx[n].proj[j]));
        SMap lvl = into_chain(cy[n], comps);
        lvl.src = nx->level[n];
        lvl.dst = ny->level[n];
        out.level.push_back(lvl);
    }
    return out;
}

ICatMapEnumeration enumerate_icat_maps(const ICatPtr& c, const ICatPtr& d,
                                       std::uint64_t budget) {
    ICatMapEnumeration out;
    auto obs = enumerate_smaps(c->ob, d->ob, budget);
    if (!obs.complete) out.complete = false;
    std::uint64_t visited = 0;
    bool aborted = false;
    int D = c->ar->trunc_dim;
    for (const SMap& u : obs.maps) {
        if (aborted) break;
        SMap v{c->ar, d->ar, {}};
        v.assign.resize(D + 1);
        for (int dd = 0; dd <= D; ++dd) v.assign[dd].resize(c->ar->dim_count(dd));
        std::vector<std::pair<int, int>> slots;
        for (int dd = 0; dd <= D; ++dd)
            for (int j = 0; j < c->ar->dim_count(dd); ++j) slots.push_back({dd, j});
        std::function<void(size_t)> rec = [&](size_t s) {
            if (aborted) return;
            if (s == slots.size()) {
                ICatMap f{c, d, u, v};
                if (!(compose(f.on_ar, c->unit) == compose(d->unit, u))) return;
                for (int dd = 0; dd <= D; ++dd)
                    for (int j = 0; j < c->comp_dom.obj->dim_count(dd); ++j) {
                        Expr a = v(c->comp_dom.p1.assign[dd][j]);
                        Expr bb = v(c->comp_dom.p2.assign[dd][j]);
                        if (v(c->comp.assign[dd][j]) != d->comp(d->comp_dom.pair(a, bb))) return;
                    }
                out.maps.push_back(std::move(f));
                return;
            }
            auto [dd, j] = slots[s];
            Expr nd{dd, j, {}};
            for (const Expr& cand : d->ar->elems[dd]) {
                if (++visited > budget) {
                    aborted = true;
                    return;
                }
                bool ok = true;
                for (int i = 0; dd >= 1 && i <= dd && ok; ++i)
                    if (v(c->ar->nd_face[dd][j][i]) != d->ar->face_of(cand, i)) ok = false;
                if (ok && !(d->src(cand) == u(c->src.assign[dd][j]))) ok = false;
                if (ok && !(d->tgt(cand) == u(c->tgt.assign[dd][j]))) ok = false;
                if (!ok) continue;
                v.assign[dd][j] = cand;
                rec(s + 1);
                if (aborted) return;
            }
        };
        rec(0);
    }
    if (aborted) out.complete = false;
    return out;
}

MappingSpace icat_mapping_space(const ICatPtr& c, const ICatPtr& d, int trunc,
                                std::uint64_t budget) {
    MappingSpace out;
    int D = c->ob->trunc_dim;
    std::vector<ICatPtr> cxd;  // C x Delta[n]
    std::vector<ICatPtr> deltas;
    for (int n = 0; n <= trunc; ++n) {
        deltas.push_back(discrete_icat(standard_simplex(n, D)));
        cxd.push_back(icat_product(c, deltas[n]));
    }
    out.cells.resize(trunc + 1);
    for (int n = 0; n <= trunc; ++n) {
        auto en = enumerate_icat_maps(cxd[n], d, budget);
        if (!en.complete) out.complete = false;
        out.cells[n] = std::move(en.maps);
    }
    // simplicial operators by precomposition with id_C x Delta[phi]
    auto op_precompose = [&](int n, const std::vector<int>& phi, const ICatMap& f) {
        int m = static_cast<int>(phi.size()) - 1;
        // the product is built over identical constructions, so assignments
        // can be transported through pair lookups
        Product pob_m = product(c->ob, deltas[m]->ob);
        Product par_m = product(c->ar, deltas[m]->ar);
        Product pob_n = product(c->ob, deltas[n]->ob);
        Product par_n = product(c->ar, deltas[n]->ar);
        SMap dmap = map_from_elem_images(deltas[m]->ob, deltas[n]->ob, [&](int dd, const Expr& nd) {
            // image of a simplex of Delta[m] under phi, by vertex sequences
            std::vector<int> seq = vertex_sequence(*deltas[m]->ob, Expr{dd, nd.base, {}});
            for (int& vtx : seq) vtx = phi[vtx];
            return simplex_with_vertices(*deltas[n]->ob, seq);
        });
        SMap on_ob = pob_n.tuple(pob_m.p1, compose(dmap, pob_m.p2));
        SMap on_ar = par_n.tuple(par_m.p1, compose(dmap, par_m.p2));
        ICatMap g;
        g.src = cxd[m];
        g.dst = f.dst;
        on_ob.src = cxd[m]->ob;
        on_ar.src = cxd[m]->ar;
        SMap ob2 = on_ob;
        ob2.dst = cxd[n]->ob;
        SMap ar2 = on_ar;
        ar2.dst = cxd[n]->ar;
        g.on_ob = compose(f.on_ob, ob2);
        g.on_ar = compose(f.on_ar, ar2);
        return g;
    };
    auto locate = [&](int n, const ICatMap& f) {
        for (size_t i = 0; i < out.cells[n].size(); ++i)
            if (out.cells[n][i].on_ob == f.on_ob && out.cells[n][i].on_ar == f.on_ar)
                return static_cast<int>(i);
        throw std::logic_error("icat_mapping_space: operator image not in the enumeration");
    };
    TableSSet t;
    t.trunc_dim = trunc;
    t.count.resize(trunc + 1);
    t.face.assign(trunc + 1, {});
    t.degen.assign(trunc + 1, {});
    for (int n = 0; n <= trunc; ++n) t.count[n] = static_cast<int>(out.cells[n].size());
    for (int n = 1; n <= trunc; ++n) {
        t.face[n].assign(n + 1, std::vector<int>(t.count[n]));
        for (int i = 0; i <= n; ++i) {
            std::vector<int> phi;
            for (int v = 0; v <= n; ++v)
                if (v != i) phi.push_back(v);
            for (int e = 0; e < t.count[n]; ++e)
                t.face[n][i][e] = locate(n - 1, op_precompose(n, phi, out.cells[n][e]));
        }
    }
    for (int n = 0; n < trunc; ++n) {
        t.degen[n].assign(n + 1, std::vector<int>(t.count[n]));
        for (int i = 0; i <= n; ++i) {
            std::vector<int> phi;
            for (int v = 0; v <= n + 1; ++v) phi.push_back(v <= i ? v : v - 1);
            for (int e = 0; e < t.count[n]; ++e)
                t.degen[n][i][e] = locate(n + 1, op_precompose(n, phi, out.cells[n][e]));
        }
    }
    Normalized nz = normalize_table(t, [&](int n, int e) {
        return "map" + std::to_string(n) + "_" + std::to_string(e);
    });
    out.obj = nz.sset;
    return out;
}

StronglySegalReport strongly_segal_check(const ICatPtr& c, int probe_dim, int nerve_levels) {
    StronglySegalReport rep;
    rep.src_probe = kan_fibration_probe(c->src, probe_dim);
    rep.tgt_probe = kan_fibration_probe(c->tgt, probe_dim);
    rep.ob_probe = kan_probe(c->ob, probe_dim);
    if (!rep.src_probe.pass || !rep.tgt_probe.pass || !rep.ob_probe.pass) {
        rep.pass = false;
        rep.witness = !rep.src_probe.pass   ? "source map fails the fibration probe"
                      : !rep.tgt_probe.pass ? "target map fails the fibration probe"
                                            : "object space fails the Kan probe";
        return rep;
    }
    SSpacePtr n = nerve(c, nerve_levels);
    rep.pass = true;
    for (int r = 2; r <= nerve_levels; ++r) {
        SquareOfMaps sq;
        sq.top = n->face[r][0];
        sq.left = outer_op(*n, {0, 1}, r);
        sq.right = outer_op(*n, {0}, r - 1);
        sq.bottom = n->face[1][0];
        HCResult hc = homotopy_cartesian_probe(sq, probe_dim, std::min(1, n->inner_dim() - 1));
        if (hc.status != HCStatus::Certified || !hc.cert.passed()) {
            rep.pass = false;
            rep.witness = "Segal square at level " + std::to_string(r) + " not certified";
        }
        rep.segal_squares.push_back(std::move(hc));
    }
    return rep;
}

}  // namespace catkit
