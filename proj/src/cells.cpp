#include "catkit/cells.hpp"

#include <algorithm>
#include <set>

namespace catkit {

namespace {

SSetPtr ordinal_objects(int n, int D) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back(std::to_string(i));
    return discrete_sset(names, D);
}

Expr degenerate_vertex(int vertex, int d) {
    Word w(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
    return Expr{0, vertex, w};
}

}  // namespace

ICatPtr empty_icat(int D) {
    auto e = empty_sset(D);
    SMap none{e, e, std::vector<std::vector<Expr>>(D + 1)};
    return make_icat(e, e, none, none, none, [&](const FiberProduct& fp) {
        return SMap{fp.obj, e, std::vector<std::vector<Expr>>(D + 1)};
    });
}

Attachment make_attachment(int n, const SMap& include, const ICatPtr& base,
                           const std::function<ICatMap(const ICatPtr&)>& attach_fn) {
    if (!is_injective(include))
        throw std::invalid_argument("make_attachment: K -> L is not a monomorphism");
    int D = include.src->trunc_dim;
    Attachment spec;
    spec.n = n;
    spec.include = include;
    ICatPtr ordinal = icat_from_fincat(poset_cat(n), D);
    spec.kxn = icat_product(discrete_icat(include.src), ordinal);
    spec.lxn = icat_product(discrete_icat(include.dst), ordinal);
    spec.attach = attach_fn(spec.kxn);
    if (!(spec.attach.dst == base))
        throw std::invalid_argument("make_attachment: attaching map does not land in the base");
    auto rep = validate_icat_map(spec.attach);
    if (!rep.ok)
        throw std::invalid_argument("make_attachment: attaching map invalid: " + rep.violations[0]);
    return spec;
}

ICatMap cell_inclusion(const Attachment& spec) {
    const SSetPtr& K = spec.include.src;
    const SSetPtr& L = spec.include.dst;
    int D = K->trunc_dim;
    FinCat A = poset_cat(spec.n);
    SSetPtr aob = ordinal_objects(spec.n, D);
    std::vector<std::string> anames;
    for (const auto& f : A.arrows) anames.push_back(f.id);
    SSetPtr aar = discrete_sset(anames, D);
    Product k_ob = product(K, aob), l_ob = product(L, aob);
    Product k_ar = product(K, aar), l_ar = product(L, aar);
    ICatMap inc;
    inc.src = spec.kxn;
    inc.dst = spec.lxn;
    inc.on_ob = map_from_elem_images(spec.kxn->ob, spec.lxn->ob, [&](int d, const Expr& nd) {
        return l_ob.pair(spec.include(k_ob.p1.assign[d][nd.base]), k_ob.p2.assign[d][nd.base]);
    });
    inc.on_ar = map_from_elem_images(spec.kxn->ar, spec.lxn->ar, [&](int d, const Expr& nd) {
        return l_ar.pair(spec.include(k_ar.p1.assign[d][nd.base]), k_ar.p2.assign[d][nd.base]);
    });
    return inc;
}

AttachResult attach(const ICatPtr& base, const Attachment& spec) {
    const SSetPtr& K = spec.include.src;
    const SSetPtr& L = spec.include.dst;
    int D = K->trunc_dim;
    FinCat A = poset_cat(spec.n);
    int nobj = static_cast<int>(A.objects.size());
    int narr = static_cast<int>(A.arrows.size());
    SSetPtr aob = ordinal_objects(spec.n, D);
    std::vector<std::string> anames;
    for (const auto& f : A.arrows) anames.push_back(f.id);
    SSetPtr aar = discrete_sset(anames, D);
    Product k_ob = product(K, aob), k_ar = product(K, aar);

    // Z_d: simplices of L outside the image of K, with K-preimages of the rest
    std::vector<std::vector<int>> zelems(D + 1);
    std::vector<std::vector<int>> zpos(D + 1), kpre(D + 1);
    for (int d = 0; d <= D; ++d) {
        zpos[d].assign(L->elem_count(d), -1);
        kpre[d].assign(L->elem_count(d), -1);
        for (int e = 0; e < K->elem_count(d); ++e)
            kpre[d][L->index_of(spec.include(K->elems[d][e]))] = e;
        for (int e = 0; e < L->elem_count(d); ++e)
            if (kpre[d][e] < 0) {
                zpos[d][e] = static_cast<int>(zelems[d].size());
                zelems[d].push_back(e);
            }
    }

    const SSetPtr& obC = base->ob;
    const SSetPtr& arC = base->ar;
    // object space table: C-part then Z x [n]-objects
    auto build_table = [&](const SSetPtr& cpart, int width,
                           const std::function<int(int, int, int, int)>& z_face_in_c)
        -> TableSSet {
        TableSSet t;
        t.trunc_dim = D;
        t.count.resize(D + 1);
        t.face.assign(D + 1, {});
        t.degen.assign(D + 1, {});
        for (int d = 0; d <= D; ++d)
            t.count[d] = cpart->elem_count(d) + static_cast<int>(zelems[d].size()) * width;
        for (int d = 1; d <= D; ++d) {
            t.face[d].assign(d + 1, std::vector<int>(t.count[d]));
            for (int i = 0; i <= d; ++i) {
                for (int e = 0; e < cpart->elem_count(d); ++e)
                    t.face[d][i][e] = cpart->eface[d][i][e];
                int nc = cpart->elem_count(d);
                for (size_t zp = 0; zp < zelems[d].size(); ++zp)
                    for (int a = 0; a < width; ++a) {
                        int lface = L->eface[d][i][zelems[d][zp]];
                        int idx;
                        if (zpos[d - 1][lface] >= 0)
                            idx = cpart->elem_count(d - 1) +
                                  zpos[d - 1][lface] * width + a;
                        else
                            idx = z_face_in_c(d - 1, kpre[d - 1][lface], a, i);
                        t.face[d][i][nc + static_cast<int>(zp) * width + a] = idx;
                    }
            }
        }
        for (int d = 0; d < D; ++d) {
            t.degen[d].assign(d + 1, std::vector<int>(t.count[d]));
            for (int i = 0; i <= d; ++i) {
                for (int e = 0; e < cpart->elem_count(d); ++e)
                    t.degen[d][i][e] = cpart->edegen[d][i][e];
                int nc = cpart->elem_count(d);
                for (size_t zp = 0; zp < zelems[d].size(); ++zp)
                    for (int a = 0; a < width; ++a) {
                        int lup = L->edegen[d][i][zelems[d][zp]];
                        t.degen[d][i][nc + static_cast<int>(zp) * width + a] =
                            cpart->elem_count(d + 1) + zpos[d + 1][lup] * width + a;
                    }
            }
        }
        return t;
    };

    // a Z-simplex face landing in K is sent through the attaching map
    auto ob_face_in_c = [&](int d, int kelem, int a, int) {
        Expr img = spec.attach.on_ob(
            k_ob.pair(K->elems[d][kelem], degenerate_vertex(a, d)));
        return obC->index_of(img);
    };
    auto ar_face_in_c = [&](int d, int kelem, int a, int) {
        Expr img = spec.attach.on_ar(
            k_ar.pair(K->elems[d][kelem], degenerate_vertex(a, d)));
        return arC->index_of(img);
    };
    TableSSet obT = build_table(obC, nobj, ob_face_in_c);
    TableSSet arT = build_table(arC, narr, ar_face_in_c);
    Normalized obN = normalize_table(obT, [&](int d, int e) {
        if (e < obC->elem_count(d)) return obC->expr_string(obC->elems[d][e]);
        int rest = e - obC->elem_count(d);
        return "z(" + L->expr_string(L->elems[d][zelems[d][rest / nobj]]) + "@" +
               A.objects[rest % nobj] + ")";
    });
    Normalized arN = normalize_table(arT, [&](int d, int e) {
        if (e < arC->elem_count(d)) return arC->expr_string(arC->elems[d][e]);
        int rest = e - arC->elem_count(d);
        return "z(" + L->expr_string(L->elems[d][zelems[d][rest / narr]]) + "@" +
               A.arrows[rest % narr].id + ")";
    });

    // reverse lookups: result expression -> table element
    std::vector<std::map<Expr, int>> ob_rev(D + 1), ar_rev(D + 1);
    for (int d = 0; d <= D; ++d) {
        for (int e = 0; e < obT.count[d]; ++e) ob_rev[d][obN.expr_of[d][e]] = e;
        for (int e = 0; e < arT.count[d]; ++e) ar_rev[d][arN.expr_of[d][e]] = e;
    }
    auto ar_table_of = [&](const Expr& e) { return ar_rev[e.dim()].at(e); };

    SMap src = map_from_elem_images(arN.sset, obN.sset, [&](int d, const Expr& nd) {
        int e = arN.elem_of_nondeg[d][nd.base];
        if (e < arC->elem_count(d))
            return obN.expr_of[d][obC->index_of(base->src(arC->elems[d][e]))];
        int rest = e - arC->elem_count(d);
        int zp = rest / narr, f = rest % narr;
        return obN.expr_of[d][obC->elem_count(d) + zp * nobj + A.arrows[f].src];
    });
    SMap tgt = map_from_elem_images(arN.sset, obN.sset, [&](int d, const Expr& nd) {
        int e = arN.elem_of_nondeg[d][nd.base];
        if (e < arC->elem_count(d))
            return obN.expr_of[d][obC->index_of(base->tgt(arC->elems[d][e]))];
        int rest = e - arC->elem_count(d);
        int zp = rest / narr, f = rest % narr;
        return obN.expr_of[d][obC->elem_count(d) + zp * nobj + A.arrows[f].dst];
    });
    SMap unit = map_from_elem_images(obN.sset, arN.sset, [&](int d, const Expr& nd) {
        int e = obN.elem_of_nondeg[d][nd.base];
        if (e < obC->elem_count(d))
            return arN.expr_of[d][arC->index_of(base->unit(obC->elems[d][e]))];
        int rest = e - obC->elem_count(d);
        int zp = rest / nobj, o = rest % nobj;
        return arN.expr_of[d][arC->elem_count(d) + zp * narr + A.ident[o]];
    });
    ICatPtr result =
        make_icat(obN.sset, arN.sset, src, tgt, unit, [&](const FiberProduct& fp) {
            return map_from_elem_images(fp.obj, arN.sset, [&](int d, const Expr& nd) {
                int f = ar_table_of(fp.p1.assign[d][nd.base]);
                int g = ar_table_of(fp.p2.assign[d][nd.base]);
                if (f < arC->elem_count(d) && g < arC->elem_count(d)) {
                    Expr c = base->comp(base->comp_dom.pair(arC->elems[d][f], arC->elems[d][g]));
                    return arN.expr_of[d][arC->index_of(c)];
                }
                if (f >= arC->elem_count(d) && g >= arC->elem_count(d)) {
                    int rf = f - arC->elem_count(d), rg = g - arC->elem_count(d);
                    int zf = rf / narr, za = rf % narr;
                    int zg = rg / narr, zb = rg % narr;
                    if (zf != zg)
                        throw std::logic_error("attach: composable pair across distinct cells");
                    return arN.expr_of[d][arC->elem_count(d) + zf * narr + A.compose(za, zb)];
                }
                throw std::logic_error("attach: composable pair across the coproduct");
            });
        });
    AttachResult out;
    out.result = result;
    out.from_base.src = base;
    out.from_base.dst = result;
    out.from_base.on_ob = map_from_elem_images(obC, result->ob, [&](int d, const Expr& nd) {
        return obN.expr_of[d][obC->index_of(nd)];
    });
    out.from_base.on_ar = map_from_elem_images(arC, result->ar, [&](int d, const Expr& nd) {
        return arN.expr_of[d][arC->index_of(nd)];
    });
    // L x [n] -> D: Z-part lands in the new cells, K-part through the base
    Product l_ob = product(L, aob), l_ar = product(L, aar);
    out.from_cell.src = spec.lxn;
    out.from_cell.dst = result;
    out.from_cell.on_ob =
        map_from_elem_images(spec.lxn->ob, result->ob, [&](int d, const Expr& nd) {
            Expr le = l_ob.p1.assign[d][nd.base];
            Expr ae = l_ob.p2.assign[d][nd.base];
            int li = L->index_of(le);
            int a = ae.base;  // a degenerate vertex of the ordinal objects
            if (zpos[d][li] >= 0)
                return obN.expr_of[d][obC->elem_count(d) + zpos[d][li] * nobj + a];
            Expr img = spec.attach.on_ob(k_ob.pair(K->elems[d][kpre[d][li]], ae));
            return obN.expr_of[d][obC->index_of(img)];
        });
    out.from_cell.on_ar =
        map_from_elem_images(spec.lxn->ar, result->ar, [&](int d, const Expr& nd) {
            Expr le = l_ar.p1.assign[d][nd.base];
            Expr ae = l_ar.p2.assign[d][nd.base];
            int li = L->index_of(le);
            int f = ae.base;
            if (zpos[d][li] >= 0)
                return arN.expr_of[d][arC->elem_count(d) + zpos[d][li] * narr + f];
            Expr img = spec.attach.on_ar(k_ar.pair(K->elems[d][kpre[d][li]], ae));
            return arN.expr_of[d][arC->index_of(img)];
        });
    return out;
}

bool attach_routes_agree(const ICatPtr& base, const Attachment& spec) {
    AttachResult res = attach(base, spec);
    ICatMap inc = cell_inclusion(spec);
    Pushout pob = pushout(spec.attach.on_ob, inc.on_ob);
    Pushout par = pushout(spec.attach.on_ar, inc.on_ar);
    SMap cmp_ob = pob.cotuple(res.from_base.on_ob, res.from_cell.on_ob);
    SMap cmp_ar = par.cotuple(res.from_base.on_ar, res.from_cell.on_ar);
    return is_iso(cmp_ob) && is_iso(cmp_ar) && validate_smap(cmp_ob).ok &&
           validate_smap(cmp_ar).ok;
}

namespace {

Functor apply_level_functor(const ICatMap& psi, int k, const Functor& f) {
    Functor out;
    const SSetPtr& so = psi.src->ob;
    const SSetPtr& sa = psi.src->ar;
    const SSetPtr& to = psi.dst->ob;
    const SSetPtr& ta = psi.dst->ar;
    for (int o : f.on_objects) (void)o;
    out.on_objects.resize(f.on_objects.size());
    out.on_arrows.resize(f.on_arrows.size());
    for (size_t o = 0; o < f.on_objects.size(); ++o)
        out.on_objects[o] = to->index_of(psi.on_ob(so->elems[k][f.on_objects[o]]));
    for (size_t a = 0; a < f.on_arrows.size(); ++a)
        out.on_arrows[a] = ta->index_of(psi.on_ar(sa->elems[k][f.on_arrows[a]]));
    return out;
}

}  // namespace

KeyLemmaReport verify_key_lemma(const ICatPtr& base, const Attachment& spec,
                                const std::vector<FinCat>& bs, int degree_bound) {
    KeyLemmaReport rep;
    for (const auto& b : bs) {
        int comps = pi0_fincat(b);
        if (comps != 1) {
            rep.ok = false;
            rep.failures.push_back("test category rejected: pi0 = " + std::to_string(comps));
        }
    }
    if (!rep.ok) return rep;
    AttachResult res = attach(base, spec);
    ICatMap inc = cell_inclusion(spec);
    for (int k = 0; k <= degree_bound; ++k) {
        FinCat ka = level_cat(*spec.kxn, k);
        FinCat la = level_cat(*spec.lxn, k);
        FinCat ck = level_cat(*base, k);
        FinCat dk = level_cat(*res.result, k);
        for (const auto& b : bs) {
            auto fka = enumerate_functors(b, ka);
            auto fla = enumerate_functors(b, la);
            auto fc = enumerate_functors(b, ck);
            auto fd = enumerate_functors(b, dk);
            if (!(fka.complete && fla.complete && fc.complete && fd.complete)) {
                rep.ok = false;
                rep.failures.push_back("functor enumeration budget exhausted");
                return rep;
            }
            rep.cones_checked += fka.functors.size() + fla.functors.size() + fc.functors.size();
            std::map<Functor, int> idx_c, idx_la, idx_d;
            for (size_t i = 0; i < fc.functors.size(); ++i) idx_c[fc.functors[i]] = static_cast<int>(i);
            for (size_t i = 0; i < fla.functors.size(); ++i)
                idx_la[fla.functors[i]] = static_cast<int>(i);
            for (size_t i = 0; i < fd.functors.size(); ++i) idx_d[fd.functors[i]] = static_cast<int>(i);
            // set pushout of Cat(B, C_k) <- Cat(B, (KxA)_k) -> Cat(B, (LxA)_k)
            int nC = static_cast<int>(fc.functors.size());
            int nLA = static_cast<int>(fla.functors.size());
            std::vector<int> parent(nC + nLA);
            for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
            std::function<int(int)> find = [&](int a) {
                while (parent[a] != a) a = parent[a] = parent[parent[a]];
                return a;
            };
            for (const auto& f : fka.functors) {
                int a = idx_c.at(apply_level_functor(spec.attach, k, f));
                int bb = nC + idx_la.at(apply_level_functor(inc, k, f));
                int ra = find(a), rb = find(bb);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
            // the comparison map into Cat(B, D_k)
            std::vector<int> to_d(nC + nLA);
            for (int i = 0; i < nC; ++i)
                to_d[i] = idx_d.at(apply_level_functor(res.from_base, k, fc.functors[i]));
            for (int i = 0; i < nLA; ++i)
                to_d[nC + i] = idx_d.at(apply_level_functor(res.from_cell, k, fla.functors[i]));
            // well-defined on classes, injective across classes, surjective
            std::map<int, int> class_image;
            std::set<int> images;
            bool fine = true;
            for (int i = 0; i < nC + nLA && fine; ++i) {
                int r = find(i);
                auto it = class_image.find(r);
                if (it == class_image.end()) {
                    class_image[r] = to_d[i];
                    if (!images.insert(to_d[i]).second) fine = false;  // not injective
                } else if (it->second != to_d[i]) {
                    fine = false;  // not well-defined
                }
            }
            if (fine && images.size() != fd.functors.size()) fine = false;  // not surjective
            if (!fine) {
                rep.ok = false;
                rep.failures.push_back("degree " + std::to_string(k) +
                                       ": pushout comparison is not a bijection");
            }
        }
        rep.degrees_checked = k + 1;
    }
    return rep;
}

NervePushoutReport verify_nerve_pushout(const ICatPtr& base, const Attachment& spec, int M) {
    NervePushoutReport rep;
    AttachResult res = attach(base, spec);
    ICatMap inc = cell_inclusion(spec);
    SSMap na = nerve_map(spec.attach, M);
    SSMap ni = nerve_map(inc, M);
    SSpacePushout P = sspace_pushout(na, ni);
    SSMap nb = nerve_map(res.from_base, M);
    SSMap nc = nerve_map(res.from_cell, M);
    for (int m = 0; m <= M; ++m) {
        SMap cmp = P.levels[m].cotuple(nb.level[m], nc.level[m]);
        if (!is_iso(cmp)) {
            rep.ok = false;
            rep.failure = "nerve comparison fails to be an isomorphism at level " +
                          std::to_string(m);
            return rep;
        }
    }
    return rep;
}

IsNerveResult is_nerve(const SSpacePtr& x, std::uint64_t budget) {
    IsNerveResult out;
    if (x->outer_dim < 2) {
        out.witness = "needs outer dimension >= 2";
        return out;
    }
    const SSetPtr& ob = x->level[0];
    const SSetPtr& ar = x->level[1];
    const SMap& src = x->face[1][1];
    const SMap& tgt = x->face[1][0];
    FiberProduct pairs = fiber_product(tgt, src);
    int D = ob->trunc_dim;
    SMap comp{pairs.obj, ar, {}};
    comp.assign.resize(D + 1);
    std::uint64_t visited = 0;
    for (int d = 0; d <= D; ++d) {
        comp.assign[d].resize(pairs.obj->dim_count(d));
        for (int j = 0; j < pairs.obj->dim_count(d); ++j) {
            Expr f = pairs.p1.assign[d][j];
            Expr g = pairs.p2.assign[d][j];
            std::set<Expr> composites;
            for (const Expr& t : x->level[2]->elems[d]) {
                if (++visited > budget) {
                    out.verdict = IsNerveResult::Verdict::Unknown;
                    out.witness = "filler search budget exhausted";
                    return out;
                }
                if (x->face[2][2](t) == f && x->face[2][0](t) == g)
                    composites.insert(x->face[2][1](t));
            }
            if (composites.empty()) {
                out.verdict = IsNerveResult::Verdict::No;
                out.witness = "no 2-simplex composes the pair (" + ar->expr_string(f) + ", " +
                              ar->expr_string(g) + ")";
                return out;
            }
            if (composites.size() > 1) {
                out.verdict = IsNerveResult::Verdict::No;
                out.witness = "ambiguous composite for the pair (" + ar->expr_string(f) + ", " +
                              ar->expr_string(g) + ")";
                return out;
            }
            comp.assign[d][j] = *composites.begin();
        }
    }
    if (!validate_smap(comp).ok) {
        out.verdict = IsNerveResult::Verdict::No;
        out.witness = "filler composition is not simplicial";
        return out;
    }
    // level 2 must be exactly the composable pairs
    SMap to_pairs = pairs.tuple(x->face[2][2], x->face[2][0]);
    if (!is_iso(to_pairs)) {
        out.verdict = IsNerveResult::Verdict::No;
        out.witness = "level 2 is not the fiber power of level 1";
        return out;
    }
    ICatPtr c = make_icat(ob, ar, src, tgt, x->degen[0][0], [&](const FiberProduct& fp) {
        SMap m = comp;
        m.src = fp.obj;
        return m;
    });
    auto rep = validate_icat(*c);
    if (!rep.ok) {
        out.verdict = IsNerveResult::Verdict::No;
        out.witness = "reconstruction is not a category: " + rep.violations[0];
        return out;
    }
    SSpacePtr nc = nerve(c, x->outer_dim);
    for (int m = 2; m <= x->outer_dim; ++m) {
        std::vector<SMap> comps;
        for (int i = 1; i <= m; ++i) comps.push_back(outer_op(*x, {i - 1, i}, m));
        SMap cmp = into_nerve_level(c, nc, m, comps);
        if (!is_iso(cmp)) {
            out.verdict = IsNerveResult::Verdict::No;
            out.witness = "level " + std::to_string(m) + " is not the chain power";
            return out;
        }
    }
    out.verdict = IsNerveResult::Verdict::Yes;
    out.cat = c;
    return out;
}

CellComplex empty_complex(int D) {
    CellComplex cx;
    cx.base = empty_icat(D);
    cx.result = cx.base;
    return cx;
}

CellComplex extend_complex(const CellComplex& cx, const Attachment& spec) {
    CellComplex next = cx;
    next.steps.push_back(spec);
    next.result = attach(cx.result, spec).result;
    return next;
}

}  // namespace catkit
