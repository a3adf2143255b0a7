#include "catkit/simpcat.hpp"

#include <algorithm>
#include <set>

namespace catkit {

std::optional<int> SimpCat::find_object(const std::string& name) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

SimpCatPtr make_simpcat(
    const std::vector<std::string>& objects,
    const std::function<SSetPtr(int, int)>& map_fn,
    const std::function<Expr(int)>& ident_fn,
    const std::function<SMap(int, int, int, const Product&, const SSetPtr&)>& comp_fn) {
    auto c = std::make_shared<SimpCat>();
    c->objects = objects;
    int n = static_cast<int>(objects.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) c->maps[{x, y}] = map_fn(x, y);
    for (int x = 0; x < n; ++x) c->ident[x] = ident_fn(x);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Product p = product(c->maps[{x, y}], c->maps[{y, z}]);
                c->comp[{x, y, z}] = comp_fn(x, y, z, p, c->maps[{x, z}]);
            }
    return c;
}

ValidationReport validate_simpcat(const SimpCat& c) {
    ValidationReport rep;
    int n = static_cast<int>(c.objects.size());
    for (auto& [key, m] : c.comp) {
        auto r = validate_smap(m);
        if (!r.ok) rep.fail("composition is not simplicial: " + r.violations[0]);
    }
    if (!rep.ok) return rep;
    // unit laws
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const SSetPtr& mxy = c.maps.at({x, y});
            Product left = product(c.maps.at({x, x}), mxy);
            SMap lin = left.tuple(constant_map(mxy, c.maps.at({x, x}), c.ident.at(x)),
                                  identity_map(mxy));
            if (!(compose(c.comp.at({x, x, y}), lin) == identity_map(mxy)))
                rep.fail("left unit law fails at map(" + c.objects[x] + "," + c.objects[y] + ")");
            Product right = product(mxy, c.maps.at({y, y}));
            SMap rin = right.tuple(identity_map(mxy),
                                   constant_map(mxy, c.maps.at({y, y}), c.ident.at(y)));
            if (!(compose(c.comp.at({x, y, y}), rin) == identity_map(mxy)))
                rep.fail("right unit law fails at map(" + c.objects[x] + "," + c.objects[y] + ")");
        }
    // associativity on triple products
    for (int x = 0; x < n && rep.ok; ++x)
        for (int y = 0; y < n && rep.ok; ++y)
            for (int z = 0; z < n && rep.ok; ++z)
                for (int w = 0; w < n && rep.ok; ++w) {
                    Product pxy_yz = product(c.maps.at({x, y}), c.maps.at({y, z}));
                    Product t = product(pxy_yz.obj, c.maps.at({z, w}));
                    // ((f,g),h)
                    SMap f = compose(pxy_yz.p1, t.p1);
                    SMap g = compose(pxy_yz.p2, t.p1);
                    SMap h = t.p2;
                    Product pxz_zw = product(c.maps.at({x, z}), c.maps.at({z, w}));
                    SMap lhs = compose(
                        c.comp.at({x, z, w}),
                        pxz_zw.tuple(compose(c.comp.at({x, y, z}), t.p1), h));
                    Product pyz_zw = product(c.maps.at({y, z}), c.maps.at({z, w}));
                    Product pxy_yw = product(c.maps.at({x, y}), c.maps.at({y, w}));
                    SMap rhs = compose(
                        c.comp.at({x, y, w}),
                        pxy_yw.tuple(f, compose(c.comp.at({y, z, w}), pyz_zw.tuple(g, h))));
                    if (!(lhs == rhs))
                        rep.fail("associativity fails at (" + c.objects[x] + "," + c.objects[y] +
                                 "," + c.objects[z] + "," + c.objects[w] + ")");
                }
    return rep;
}

SimpCatPtr simpcat_from_fincat(const FinCat& f, int D) {
    int n = static_cast<int>(f.objects.size());
    std::vector<std::vector<std::vector<int>>> homs(n, std::vector<std::vector<int>>(n));
    for (size_t a = 0; a < f.arrows.size(); ++a)
        homs[f.arrows[a].src][f.arrows[a].dst].push_back(static_cast<int>(a));
    return make_simpcat(
        f.objects,
        [&](int x, int y) {
            std::vector<std::string> names;
            for (int a : homs[x][y]) names.push_back(f.arrows[a].id);
            return discrete_sset(names, D);
        },
        [&](int x) {
            int pos = 0;
            for (size_t i = 0; i < homs[x][x].size(); ++i)
                if (homs[x][x][i] == f.ident[x]) pos = static_cast<int>(i);
            return Expr{0, pos, {}};
        },
        [&](int x, int y, int z, const Product& p, const SSetPtr& mxz) {
            return map_from_elem_images(p.obj, mxz, [&](int d, const Expr& nd) {
                Expr a = p.p1.assign[d][nd.base];
                Expr b = p.p2.assign[d][nd.base];
                int fa = *f.find_arrow(p.lhs->ids[0][a.base]);
                int fb = *f.find_arrow(p.rhs->ids[0][b.base]);
                const std::string& composite = f.arrows[f.comp.at({fa, fb})].id;
                Expr v{0, *mxz->find_id(0, composite), {}};
                Word w(static_cast<size_t>(d));
                for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
                return Expr{0, v.base, w};
            });
        });
}

ICatPtr internalize(const SimpCatPtr& c) {
    int n = static_cast<int>(c->objects.size());
    int D = c->maps.at({0, 0})->trunc_dim;
    // tagged unions of the object set and of the mapping spaces
    SSetPtr ob = discrete_sset(c->objects, D);
    TableSSet arT;
    arT.trunc_dim = D;
    arT.count.assign(D + 1, 0);
    arT.face.assign(D + 1, {});
    arT.degen.assign(D + 1, {});
    std::vector<std::vector<int>> offset(n, std::vector<int>(n));
    std::vector<std::vector<int>> offsets_per_dim(D + 1);
    for (int d = 0; d <= D; ++d) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (d == 0) offset[x][y] = 0;  // recomputed per dimension below
            }
    }
    std::vector<std::map<std::pair<int, int>, int>> off(D + 1);
    for (int d = 0; d <= D; ++d) {
        int cur = 0;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                off[d][{x, y}] = cur;
                cur += c->maps.at({x, y})->elem_count(d);
            }
        arT.count[d] = cur;
    }
    auto block_of = [&](int d, int e) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int base = off[d][{x, y}];
                int size = c->maps.at({x, y})->elem_count(d);
                if (e >= base && e < base + size) return std::make_tuple(x, y, e - base);
            }
        throw std::logic_error("internalize: element out of range");
    };
    for (int d = 1; d <= D; ++d) {
        arT.face[d].assign(d + 1, std::vector<int>(arT.count[d]));
        for (int i = 0; i <= d; ++i)
            for (int e = 0; e < arT.count[d]; ++e) {
                auto [x, y, local] = block_of(d, e);
                arT.face[d][i][e] = off[d - 1][{x, y}] + c->maps.at({x, y})->eface[d][i][local];
            }
    }
    for (int d = 0; d < D; ++d) {
        arT.degen[d].assign(d + 1, std::vector<int>(arT.count[d]));
        for (int i = 0; i <= d; ++i)
            for (int e = 0; e < arT.count[d]; ++e) {
                auto [x, y, local] = block_of(d, e);
                arT.degen[d][i][e] = off[d + 1][{x, y}] + c->maps.at({x, y})->edegen[d][i][local];
            }
    }
    Normalized arN = normalize_table(arT, [&](int d, int e) {
        auto [x, y, local] = block_of(d, e);
        return c->objects[x] + ">" + c->objects[y] + ":" +
               c->maps.at({x, y})->expr_string(c->maps.at({x, y})->elems[d][local]);
    });
    std::vector<std::map<Expr, int>> rev(D + 1);
    for (int d = 0; d <= D; ++d)
        for (int e = 0; e < arT.count[d]; ++e) rev[d][arN.expr_of[d][e]] = e;
    SMap src = map_from_elem_images(arN.sset, ob, [&](int d, const Expr& nd) {
        auto [x, y, local] = block_of(d, arN.elem_of_nondeg[d][nd.base]);
        (void)y;
        (void)local;
        Word w(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
        return Expr{0, x, w};
    });
    SMap tgt = map_from_elem_images(arN.sset, ob, [&](int d, const Expr& nd) {
        auto [x, y, local] = block_of(d, arN.elem_of_nondeg[d][nd.base]);
        (void)x;
        (void)local;
        Word w(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
        return Expr{0, y, w};
    });
    SMap unit = map_from_elem_images(ob, arN.sset, [&](int d, const Expr& nd) {
        // the identity vertex of map(x, x), degenerate up to dimension d
        int x = nd.base;
        Expr idx = c->ident.at(x);
        Word w(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
        Expr elem{idx.base_dim, idx.base, w};
        return arN.expr_of[d][off[d][{x, x}] + c->maps.at({x, x})->index_of(elem)];
    });
    return make_icat(ob, arN.sset, src, tgt, unit, [&](const FiberProduct& fp) {
        return map_from_elem_images(fp.obj, arN.sset, [&](int d, const Expr& nd) {
            Expr fe = fp.p1.assign[d][nd.base];
            Expr ge = fp.p2.assign[d][nd.base];
            auto [x, y, flocal] = block_of(d, rev[d].at(fe));
            auto [y2, z, glocal] = block_of(d, rev[d].at(ge));
            if (y != y2) throw std::logic_error("internalize: non-composable pair");
            Product p = product(c->maps.at({x, y}), c->maps.at({y, z}));
            Expr pair = p.pair(c->maps.at({x, y})->elems[d][flocal],
                               c->maps.at({y, z})->elems[d][glocal]);
            Expr composed = c->comp.at({x, y, z})(pair);
            return arN.expr_of[d][off[d][{x, z}] + c->maps.at({x, z})->index_of(composed)];
        });
    });
}

FinCat ho_of_simpcat(const SimpCatPtr& c) {
    FinCat out;
    out.objects = c->objects;
    int n = static_cast<int>(c->objects.size());
    std::map<std::pair<int, int>, Pi0> comps;
    std::map<std::pair<int, int>, int> arrow_base;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const SSetPtr& m = c->maps.at({x, y});
            Pi0 p = m->empty() ? Pi0{} : pi0(m);
            arrow_base[{x, y}] = static_cast<int>(out.arrows.size());
            for (int k = 0; k < p.count; ++k)
                out.arrows.push_back({c->objects[x] + ">" + c->objects[y] + "#" +
                                          std::to_string(k),
                                      x, y});
            comps[{x, y}] = std::move(p);
        }
    for (int x = 0; x < n; ++x)
        out.ident.push_back(arrow_base[{x, x}] +
                            comps[{x, x}].component_of(*c->maps.at({x, x}), c->ident.at(x)));
    // composition on representatives (well defined since pi0 is functorial)
    auto rep_vertex = [&](int x, int y, int cls) {
        const Pi0& p = comps[{x, y}];
        for (int v = 0; v < static_cast<int>(p.component_of_vertex.size()); ++v)
            if (p.component_of_vertex[v] == cls) return c->maps.at({x, y})->elems[0][v];
        throw std::logic_error("ho_of_simpcat: empty component");
    };
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Product p = product(c->maps.at({x, y}), c->maps.at({y, z}));
                for (int a = 0; a < comps[{x, y}].count; ++a)
                    for (int b = 0; b < comps[{y, z}].count; ++b) {
                        Expr composed = c->comp.at({x, y, z})(
                            p.pair(rep_vertex(x, y, a), rep_vertex(y, z, b)));
                        int cls = comps[{x, z}].component_of(*c->maps.at({x, z}), composed);
                        out.comp[{arrow_base[{x, y}] + a, arrow_base[{y, z}] + b}] =
                            arrow_base[{x, z}] + cls;
                    }
            }
    return out;
}

EquivalenceDetectionReport equivalence_detection_check(const SimpCatPtr& c, int x, int y,
                                                       const Expr& f_vertex, int probe_dim) {
    EquivalenceDetectionReport rep;
    int n = static_cast<int>(c->objects.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!c->maps.at({a, b})->empty() && !kan_probe(c->maps.at({a, b}), probe_dim).pass)
                rep.advisory = true;
    FinCat ho = ho_of_simpcat(c);
    Pi0 pxy = pi0(c->maps.at({x, y}));
    int cls = pxy.component_of(*c->maps.at({x, y}), f_vertex);
    // locate the arrow in Ho and ask for a two-sided inverse
    auto arrow_of = [&](int a, int b, int k) {
        std::string id = c->objects[a] + ">" + c->objects[b] + "#" + std::to_string(k);
        return *ho.find_arrow(id);
    };
    int f_arrow = arrow_of(x, y, cls);
    rep.ho_invertible = false;
    for (size_t g = 0; g < ho.arrows.size(); ++g)
        if (ho.arrows[g].src == y && ho.arrows[g].dst == x) {
            if (ho.compose(f_arrow, static_cast<int>(g)) == ho.ident[x] &&
                ho.compose(static_cast<int>(g), f_arrow) == ho.ident[y])
                rep.ho_invertible = true;
        }
    // the internal side
    ICatPtr ic = internalize(c);
    HoEquiv he = hoequiv(nerve(ic, 2));
    // image of f in Ar(Int c)
    std::string name = c->objects[x] + ">" + c->objects[y] + ":" +
                       c->maps.at({x, y})->expr_string(f_vertex);
    auto idx = ic->ar->find_id(0, name);
    if (!idx) throw std::logic_error("equivalence_detection_check: lost the arrow image");
    int comp = he.arrow_pi0.component_of_vertex[ic->ar->index_of(Expr{0, *idx, {}})];
    rep.in_hoequiv =
        std::find(he.components.begin(), he.components.end(), comp) != he.components.end();
    rep.agree = rep.ho_invertible == rep.in_hoequiv;
    return rep;
}

ValidationReport validate_grdata(const GrData& f) {
    ValidationReport rep;
    const SimpCatPtr& c = f.base;
    int n = static_cast<int>(c->objects.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto r = validate_smap(f.action.at({x, y}));
            if (!r.ok) {
                rep.fail("action at (" + c->objects[x] + "," + c->objects[y] +
                         ") is not simplicial: " + r.violations[0]);
                return rep;
            }
        }
    // unit law: acting by the identity does nothing
    for (int x = 0; x < n; ++x) {
        Product p = product(f.value[x], c->maps.at({x, x}));
        SMap in = p.tuple(identity_map(f.value[x]),
                          constant_map(f.value[x], c->maps.at({x, x}), c->ident.at(x)));
        if (!(compose(f.action.at({x, x}), in) == identity_map(f.value[x])))
            rep.fail("unit law fails at " + c->objects[x]);
    }
    // functor law: acting by a composite is acting twice
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Product pxy = product(f.value[x], c->maps.at({x, y}));
                Product t = product(pxy.obj, c->maps.at({y, z}));
                SMap xi = compose(pxy.p1, t.p1);
                SMap g = compose(pxy.p2, t.p1);
                SMap h = t.p2;
                Product pyz = product(f.value[y], c->maps.at({y, z}));
                SMap route1 = compose(f.action.at({y, z}),
                                      pyz.tuple(compose(f.action.at({x, y}), t.p1), h));
                Product comp_in = product(c->maps.at({x, y}), c->maps.at({y, z}));
                Product pxz = product(f.value[x], c->maps.at({x, z}));
                SMap route2 = compose(
                    f.action.at({x, z}),
                    pxz.tuple(xi, compose(c->comp.at({x, y, z}), comp_in.tuple(g, h))));
                if (!(route1 == route2))
                    rep.fail("functor law fails at (" + c->objects[x] + "," + c->objects[y] + "," +
                             c->objects[z] + ")");
            }
    return rep;
}

ICatPtr grothendieck(const GrData& f) {
    auto rep = validate_grdata(f);
    if (!rep.ok) throw std::invalid_argument("grothendieck: " + rep.violations[0]);
    const SimpCatPtr& c = f.base;
    int n = static_cast<int>(c->objects.size());
    int D = f.value[0]->trunc_dim;
    // Ob = disjoint union of the values
    auto build_union = [&](const std::function<SSetPtr(int, int)>& piece, int blocks_x,
                           int blocks_y,
                           const std::function<std::string(int, int, int, int)>& name)
        -> std::tuple<Normalized, std::vector<std::map<std::pair<int, int>, int>>, TableSSet> {
        TableSSet t;
        t.trunc_dim = D;
        t.count.assign(D + 1, 0);
        t.face.assign(D + 1, {});
        t.degen.assign(D + 1, {});
        std::vector<std::map<std::pair<int, int>, int>> off(D + 1);
        for (int d = 0; d <= D; ++d) {
            int cur = 0;
            for (int x = 0; x < blocks_x; ++x)
                for (int y = 0; y < blocks_y; ++y) {
                    off[d][{x, y}] = cur;
                    cur += piece(x, y)->elem_count(d);
                }
            t.count[d] = cur;
        }
        auto block_of = [&](int d, int e) {
            for (int x = 0; x < blocks_x; ++x)
                for (int y = 0; y < blocks_y; ++y) {
                    int base = off[d][{x, y}];
                    int size = piece(x, y)->elem_count(d);
                    if (e >= base && e < base + size) return std::make_tuple(x, y, e - base);
                }
            throw std::logic_error("grothendieck: element out of range");
        };
        for (int d = 1; d <= D; ++d) {
            t.face[d].assign(d + 1, std::vector<int>(t.count[d]));
            for (int i = 0; i <= d; ++i)
                for (int e = 0; e < t.count[d]; ++e) {
                    auto [x, y, local] = block_of(d, e);
                    t.face[d][i][e] = off[d - 1][{x, y}] + piece(x, y)->eface[d][i][local];
                }
        }
        for (int d = 0; d < D; ++d) {
            t.degen[d].assign(d + 1, std::vector<int>(t.count[d]));
            for (int i = 0; i <= d; ++i)
                for (int e = 0; e < t.count[d]; ++e) {
                    auto [x, y, local] = block_of(d, e);
                    t.degen[d][i][e] = off[d + 1][{x, y}] + piece(x, y)->edegen[d][i][local];
                }
        }
        Normalized nz = normalize_table(t, [&](int d, int e) {
            auto [x, y, local] = block_of(d, e);
            return name(x, y, d, local);
        });
        return {std::move(nz), std::move(off), std::move(t)};
    };
    auto [obN, ob_off, obT] =
        build_union([&](int x, int) { return f.value[x]; }, n, 1, [&](int x, int, int d, int l) {
            return c->objects[x] + ":" + f.value[x]->expr_string(f.value[x]->elems[d][l]);
        });
    std::vector<std::vector<Product>> pieces(n, std::vector<Product>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) pieces[x][y] = product(f.value[x], c->maps.at({x, y}));
    auto [arN, ar_off, arT] = build_union(
        [&](int x, int y) { return pieces[x][y].obj; }, n, n, [&](int x, int y, int d, int l) {
            return c->objects[x] + ">" + c->objects[y] + ":" +
                   pieces[x][y].obj->expr_string(pieces[x][y].obj->elems[d][l]);
        });
    std::vector<std::map<Expr, int>> ob_rev(D + 1), ar_rev(D + 1);
    for (int d = 0; d <= D; ++d) {
        for (int e = 0; e < obT.count[d]; ++e) ob_rev[d][obN.expr_of[d][e]] = e;
        for (int e = 0; e < arT.count[d]; ++e) ar_rev[d][arN.expr_of[d][e]] = e;
    }
    auto ar_block = [&, ar_off = ar_off](int d, int e) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                int base = ar_off[d].at({x, y});
                int size = pieces[x][y].obj->elem_count(d);
                if (e >= base && e < base + size) return std::make_tuple(x, y, e - base);
            }
        throw std::logic_error("grothendieck: arrow out of range");
    };
    auto ob_index = [&, ob_off = ob_off](int x, int d, const Expr& value_elem) {
        return ob_off[d].at({x, 0}) + f.value[x]->index_of(value_elem);
    };
    SMap src = map_from_elem_images(arN.sset, obN.sset, [&](int d, const Expr& nd) {
        auto [x, y, local] = ar_block(d, arN.elem_of_nondeg[d][nd.base]);
        (void)y;
        Expr xi = pieces[x][y].p1(pieces[x][y].obj->elems[d][local]);
        return obN.expr_of[d][ob_index(x, d, xi)];
    });
    SMap tgt = map_from_elem_images(arN.sset, obN.sset, [&](int d, const Expr& nd) {
        auto [x, y, local] = ar_block(d, arN.elem_of_nondeg[d][nd.base]);
        Expr acted = f.action.at({x, y})(pieces[x][y].obj->elems[d][local]);
        return obN.expr_of[d][ob_index(y, d, acted)];
    });
    SMap unit = map_from_elem_images(obN.sset, arN.sset, [&](int d, const Expr& nd) {
        int e = obN.elem_of_nondeg[d][nd.base];
        // locate the block of the object element
        int x = 0;
        {
            int probe = e;
            for (int b = 0; b < n; ++b) {
                int size = f.value[b]->elem_count(d);
                if (probe < size) {
                    x = b;
                    break;
                }
                probe -= size;
            }
        }
        int local = e;
        for (int b = 0; b < x; ++b) local -= f.value[b]->elem_count(d);
        Expr xi = f.value[x]->elems[d][local];
        Expr idv = c->ident.at(x);
        Word w(static_cast<size_t>(d));
        for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
        Expr id_elem{idv.base_dim, idv.base, w};
        Expr pair = pieces[x][x].pair(xi, id_elem);
        return arN.expr_of[d][ar_off[d].at({x, x}) + pieces[x][x].obj->index_of(pair)];
    });
    return make_icat(obN.sset, arN.sset, src, tgt, unit, [&](const FiberProduct& fp) {
        return map_from_elem_images(fp.obj, arN.sset, [&](int d, const Expr& nd) {
            Expr fe = fp.p1.assign[d][nd.base];
            Expr ge = fp.p2.assign[d][nd.base];
            auto [x, y, flocal] = ar_block(d, ar_rev[d].at(fe));
            auto [y2, z, glocal] = ar_block(d, ar_rev[d].at(ge));
            if (y != y2) throw std::logic_error("grothendieck: non-composable pair");
            Expr xi = pieces[x][y].p1(pieces[x][y].obj->elems[d][flocal]);
            Expr g1 = pieces[x][y].p2(pieces[x][y].obj->elems[d][flocal]);
            Expr g2 = pieces[y][z].p2(pieces[y][z].obj->elems[d][glocal]);
            Product comp_in = product(c->maps.at({x, y}), c->maps.at({y, z}));
            Expr composed = c->comp.at({x, y, z})(comp_in.pair(g1, g2));
            Expr pair = pieces[x][z].pair(xi, composed);
            return arN.expr_of[d][ar_off[d].at({x, z}) + pieces[x][z].obj->index_of(pair)];
        });
    });
}

ValidationReport validate_simpcat_map(const SimpCatMap& f) {
    ValidationReport rep;
    int n = static_cast<int>(f.src->objects.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const SMap& m = f.on_maps.at({x, y});
            auto r = validate_smap(m);
            if (!r.ok) {
                rep.fail("component is not simplicial");
                return rep;
            }
        }
    for (int x = 0; x < n; ++x) {
        const SMap& m = f.on_maps.at({x, x});
        if (!(m(f.src->ident.at(x)) == f.dst->ident.at(f.on_objects[x])))
            rep.fail("identities not preserved at " + f.src->objects[x]);
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Product ps = product(f.src->maps.at({x, y}), f.src->maps.at({y, z}));
                Product pd = product(f.dst->maps.at({f.on_objects[x], f.on_objects[y]}),
                                     f.dst->maps.at({f.on_objects[y], f.on_objects[z]}));
                SMap lhs = compose(f.on_maps.at({x, z}), f.src->comp.at({x, y, z}));
                SMap rhs = compose(
                    f.dst->comp.at({f.on_objects[x], f.on_objects[y], f.on_objects[z]}),
                    pd.tuple(compose(f.on_maps.at({x, y}), ps.p1),
                             compose(f.on_maps.at({y, z}), ps.p2)));
                if (!(lhs == rhs)) rep.fail("composition not preserved");
            }
    return rep;
}

SimpCatMap simpcat_map_from_functor(const SimpCatPtr& b, const SimpCatPtr& c, const Functor& f,
                                    const FinCat& bf, const FinCat& cf) {
    SimpCatMap out;
    out.src = b;
    out.dst = c;
    out.on_objects = f.on_objects;
    int n = static_cast<int>(b->objects.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            out.on_maps[{x, y}] = map_from_elem_images(
                b->maps.at({x, y}), c->maps.at({f.on_objects[x], f.on_objects[y]}),
                [&](int, const Expr& nd) {
                    // vertex-level arrow, transported through the functor
                    std::string id = b->maps.at({x, y})->ids[0][nd.base];
                    int arrow = *bf.find_arrow(id);
                    const std::string& img = cf.arrows[f.on_arrows[arrow]].id;
                    return Expr{0,
                                *c->maps.at({f.on_objects[x], f.on_objects[y]})->find_id(0, img),
                                {}};
                });
        }
    return out;
}

ICatMap internalize_map(const SimpCatMap& f) {
    ICatMap out;
    out.src = internalize(f.src);
    out.dst = internalize(f.dst);
    out.on_ob = map_from_elem_images(out.src->ob, out.dst->ob, [&](int, const Expr& nd) {
        return Expr{0, f.on_objects[nd.base], {}};
    });
    out.on_ar = map_from_elem_images(out.src->ar, out.dst->ar, [&](int d, const Expr& nd) {
        // names are "x>y:expr"; transport through the component map
        std::string id = out.src->ar->ids[d][nd.base];
        auto gt = id.find('>');
        auto colon = id.find(':');
        std::string xs = id.substr(0, gt), ys = id.substr(gt + 1, colon - gt - 1);
        int x = *f.src->find_object(xs), y = *f.src->find_object(ys);
        const SSetPtr& msrc = f.src->maps.at({x, y});
        // find the source simplex by name
        std::string ename = id.substr(colon + 1);
        for (const Expr& e : msrc->elems[d])
            if (msrc->expr_string(e) == ename) {
                Expr img = f.on_maps.at({x, y})(e);
                std::string img_name =
                    f.dst->objects[f.on_objects[x]] + ">" + f.dst->objects[f.on_objects[y]] +
                    ":" +
                    f.dst->maps.at({f.on_objects[x], f.on_objects[y]})->expr_string(img);
                // locate in the target union by name at the right dimension
                Expr base = img;
                for (int dd = 0; dd <= out.dst->ar->trunc_dim; ++dd)
                    if (auto j = out.dst->ar->find_id(dd, img_name))
                        return Expr{dd, *j, {}};
                // degenerate image: reconstruct through the base name
                std::string base_name =
                    f.dst->objects[f.on_objects[x]] + ">" + f.dst->objects[f.on_objects[y]] +
                    ":" +
                    f.dst->maps.at({f.on_objects[x], f.on_objects[y]})
                        ->expr_string(Expr{img.base_dim, img.base, {}});
                auto j = out.dst->ar->find_id(img.base_dim, base_name);
                if (!j) throw std::logic_error("internalize_map: lost an arrow");
                return Expr{img.base_dim, *j, img.word};
            }
        throw std::logic_error("internalize_map: lost a source arrow");
    });
    return out;
}

IntDKReport int_reflects_dk_check(const SimpCatMap& f, int hom_bound, int probe_dim) {
    IntDKReport rep;
    int n = static_cast<int>(f.src->objects.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const SSetPtr& m = f.src->maps.at({x, y});
            if (!m->empty() && !kan_probe(m, probe_dim).pass) rep.advisory = true;
        }
    // simplicial-category Dwyer-Kan data
    rep.simp_ff = true;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            CertOptions opts;
            opts.hom_bound = hom_bound;
            opts.candidate = f.on_maps.at({x, y});
            Certificate c = certify_equivalence(
                f.src->maps.at({x, y}),
                f.dst->maps.at({f.on_objects[x], f.on_objects[y]}), opts);
            if (!c.passed()) rep.simp_ff = false;
            rep.map_certs[{x, y}] = std::move(c);
        }
    FinCat hod = ho_of_simpcat(f.dst);
    FinCat hos = ho_of_simpcat(f.src);
    (void)hos;
    // essential surjectivity of Ho(f): every object of D isomorphic to an image
    int nd = static_cast<int>(f.dst->objects.size());
    std::vector<char> hit(nd, 0);
    for (int x = 0; x < n; ++x) hit[f.on_objects[x]] = 1;
    auto iso_in_ho = [&](int a, int b) {
        for (size_t g = 0; g < hod.arrows.size(); ++g) {
            if (hod.arrows[g].src != a || hod.arrows[g].dst != b) continue;
            for (size_t h = 0; h < hod.arrows.size(); ++h) {
                if (hod.arrows[h].src != b || hod.arrows[h].dst != a) continue;
                if (hod.compose(static_cast<int>(g), static_cast<int>(h)) == hod.ident[a] &&
                    hod.compose(static_cast<int>(h), static_cast<int>(g)) == hod.ident[b])
                    return true;
            }
        }
        return false;
    };
    rep.simp_es = true;
    for (int b = 0; b < nd; ++b) {
        if (hit[b]) continue;
        bool reachable = false;
        for (int a = 0; a < nd && !reachable; ++a)
            if (hit[a] && iso_in_ho(a, b)) reachable = true;
        if (!reachable) rep.simp_es = false;
    }
    rep.simp_dk = rep.simp_ff && rep.simp_es;
    // the internal computation
    ICatMap fi = internalize_map(f);
    rep.internal = dk_check(nerve_map(fi, 2), hom_bound);
    rep.agree = rep.simp_dk == rep.internal.dk;
    return rep;
}

bool int_ho_comparison_check(const SimpCatPtr& c) {
    FinCat ho = ho_of_simpcat(c);
    ICatPtr ic = internalize(c);
    Pi0ModEquiv pme = pi0_mod_equiv(nerve(ic, 2));
    // iso classes of Ho(C)
    int n = static_cast<int>(ho.objects.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t g = 0; g < ho.arrows.size(); ++g)
        for (size_t h = 0; h < ho.arrows.size(); ++h) {
            if (ho.arrows[g].src != ho.arrows[h].dst || ho.arrows[g].dst != ho.arrows[h].src)
                continue;
            if (ho.compose(static_cast<int>(g), static_cast<int>(h)) ==
                    ho.ident[ho.arrows[g].src] &&
                ho.compose(static_cast<int>(h), static_cast<int>(g)) ==
                    ho.ident[ho.arrows[h].src]) {
                int ra = find(ho.arrows[g].src), rb = find(ho.arrows[g].dst);
                if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
            }
        }
    std::set<int> classes;
    for (int i = 0; i < n; ++i) classes.insert(find(i));
    if (static_cast<int>(classes.size()) != pme.count) return false;
    // objects identified in Ho must be identified mod hoequiv and conversely
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            bool ho_same = find(a) == find(b);
            bool pme_same = pme.class_of_vertex(*ic->ob, Expr{0, a, {}}) ==
                            pme.class_of_vertex(*ic->ob, Expr{0, b, {}});
            if (ho_same != pme_same) return false;
        }
    return true;
}

}  // namespace catkit
