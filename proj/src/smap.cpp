#include "catkit/smap.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace catkit {

namespace {

std::vector<std::vector<Expr>> empty_assign(const SSetPtr& src) {
    std::vector<std::vector<Expr>> a(src->trunc_dim + 1);
    for (int d = 0; d <= src->trunc_dim; ++d) a[d].resize(src->dim_count(d));
    return a;
}

void check_compatible(const SSetPtr& a, const SSetPtr& b, const char* what) {
    if (a->trunc_dim != b->trunc_dim)
        throw std::invalid_argument(std::string(what) + ": truncation mismatch (" +
                                    std::to_string(a->trunc_dim) + " vs " +
                                    std::to_string(b->trunc_dim) + ")");
}

}  // namespace

SMap identity_map(const SSetPtr& x) {
    SMap f{x, x, empty_assign(x)};
    for (int d = 0; d <= x->trunc_dim; ++d)
        for (int j = 0; j < x->dim_count(d); ++j) f.assign[d][j] = Expr{d, j, {}};
    return f;
}

SMap compose(const SMap& g, const SMap& f) {
    check_compatible(f.dst, g.src, "compose");
    SMap h{f.src, g.dst, empty_assign(f.src)};
    for (int d = 0; d <= f.src->trunc_dim; ++d)
        for (int j = 0; j < f.src->dim_count(d); ++j) h.assign[d][j] = g(f.assign[d][j]);
    return h;
}

ValidationReport validate_smap(const SMap& f) {
    ValidationReport rep;
    const SSet& X = *f.src;
    const SSet& Y = *f.dst;
    if (X.trunc_dim != Y.trunc_dim) {
        rep.fail("truncation mismatch");
        return rep;
    }
    for (int d = 0; d <= X.trunc_dim; ++d) {
        if (static_cast<int>(f.assign[d].size()) != X.dim_count(d)) {
            rep.fail("assignment size mismatch in dimension " + std::to_string(d));
            return rep;
        }
        for (int j = 0; j < X.dim_count(d); ++j) {
            const Expr& img = f.assign[d][j];
            if (img.dim() != d) {
                rep.fail("image of " + X.ids[d][j] + " has wrong dimension");
                continue;
            }
            if (img.base < 0 || img.base >= Y.dim_count(img.base_dim)) {
                rep.fail("image of " + X.ids[d][j] + " references a missing simplex");
                continue;
            }
            for (int i = 0; d >= 1 && i <= d; ++i) {
                Expr lhs = f(X.nd_face[d][j][i]);
                Expr rhs = Y.face_of(img, i);
                if (lhs != rhs)
                    rep.fail("map does not commute with d_" + std::to_string(i) + " on " +
                             X.ids[d][j]);
            }
        }
    }
    return rep;
}

SMap terminal_map(const SSetPtr& x, const SSetPtr& point) {
    return constant_map(x, point, Expr{0, 0, {}});
}

SMap constant_map(const SSetPtr& x, const SSetPtr& dst, const Expr& vertex) {
    if (vertex.dim() != 0) throw std::invalid_argument("constant_map: not a vertex");
    SMap f{x, dst, empty_assign(x)};
    for (int d = 0; d <= x->trunc_dim; ++d)
        for (int j = 0; j < x->dim_count(d); ++j) {
            Word w(d);
            // s_{d-1} ... s_0 applied to the vertex
            for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
            f.assign[d][j] = Expr{0, vertex.base, w};
        }
    return f;
}

bool is_injective(const SMap& f) {
    for (int m = 0; m <= f.src->trunc_dim; ++m) {
        std::set<Expr> seen;
        for (const Expr& e : f.src->elems[m])
            if (!seen.insert(f(e)).second) return false;
    }
    return true;
}

bool is_iso(const SMap& f) {
    for (int m = 0; m <= f.src->trunc_dim; ++m)
        if (f.src->elem_count(m) != f.dst->elem_count(m)) return false;
    return is_injective(f);
}

SMap inverse_iso(const SMap& f) {
    if (!is_iso(f)) throw std::invalid_argument("inverse_iso: map is not an isomorphism");
    SMap g{f.dst, f.src, empty_assign(f.dst)};
    for (int d = 0; d <= f.dst->trunc_dim; ++d) {
        for (int j = 0; j < f.dst->dim_count(d); ++j) {
            Expr target{d, j, {}};
            bool found = false;
            for (int k = 0; k < f.src->dim_count(d) && !found; ++k)
                if (f.assign[d][k] == target) {
                    g.assign[d][j] = Expr{d, k, {}};
                    found = true;
                }
            if (!found) throw std::logic_error("inverse_iso: nondegenerate simplex has no preimage");
        }
    }
    return g;
}

SMapEnumeration enumerate_smaps(const SSetPtr& src, const SSetPtr& dst, std::uint64_t budget) {
    check_compatible(src, dst, "enumerate_smaps");
    SMapEnumeration out;
    int D = src->trunc_dim;
    struct Slot {
        int d, j;
    };
    std::vector<Slot> slots;
    for (int d = 0; d <= D; ++d)
        for (int j = 0; j < src->dim_count(d); ++j) slots.push_back({d, j});
    SMap f{src, dst, empty_assign(src)};
    bool aborted = false;
    std::function<void(size_t)> rec = [&](size_t s) {
        if (aborted) return;
        if (s == slots.size()) {
            out.maps.push_back(f);
            return;
        }
        auto [d, j] = slots[s];
        for (const Expr& cand : dst->elems[d]) {
            if (++out.visited > budget) {
                aborted = true;
                return;
            }
            bool ok = true;
            for (int i = 0; d >= 1 && i <= d && ok; ++i) {
                if (f(src->nd_face[d][j][i]) != dst->face_of(cand, i)) ok = false;
            }
            if (!ok) continue;
            f.assign[d][j] = cand;
            rec(s + 1);
            if (aborted) return;
        }
        f.assign[d][j] = Expr{};
    };
    rec(0);
    out.complete = !aborted;
    return out;
}

// --- normalization ----------------------------------------------------------

Normalized normalize_table(const TableSSet& t, const Namer& namer) {
    int D = t.trunc_dim;
    Normalized out;
    out.expr_of.assign(D + 1, {});
    out.elem_of_nondeg.assign(D + 1, {});
    SSetBuilder b(D);
    std::vector<std::set<std::string>> used(D + 1);
    for (int m = 0; m <= D; ++m) {
        out.expr_of[m].resize(t.count[m]);
        for (int e = 0; e < t.count[m]; ++e) {
            int strip = -1;
            for (int i = m - 1; i >= 0; --i) {
                int y = t.face[m][i][e];
                if (t.degen[m - 1][i][y] == e) {
                    strip = i;
                    break;
                }
            }
            if (strip >= 0) {
                const Expr& below = out.expr_of[m - 1][t.face[m][strip][e]];
                out.expr_of[m][e] = SSet::degen_of(below, strip);
            } else {
                std::string id = namer(m, e);
                if (used[m].count(id)) {
                    int suffix = 2;
                    while (used[m].count(id + "#" + std::to_string(suffix))) ++suffix;
                    id += "#" + std::to_string(suffix);
                }
                used[m].insert(id);
                std::vector<Expr> faces;
                for (int i = 0; m >= 1 && i <= m; ++i)
                    faces.push_back(out.expr_of[m - 1][t.face[m][i][e]]);
                int j = b.add(m, id, faces);
                out.expr_of[m][e] = Expr{m, j, {}};
                out.elem_of_nondeg[m].push_back(e);
            }
        }
    }
    out.sset = b.build();
    return out;
}

SMap map_from_elem_images(const SSetPtr& src, const SSetPtr& dst,
                          const std::function<Expr(int, const Expr&)>& image_of_nondeg) {
    SMap f{src, dst, {}};
    f.assign.resize(src->trunc_dim + 1);
    for (int d = 0; d <= src->trunc_dim; ++d) {
        f.assign[d].resize(src->dim_count(d));
        for (int j = 0; j < src->dim_count(d); ++j)
            f.assign[d][j] = image_of_nondeg(d, Expr{d, j, {}});
    }
    return f;
}

// --- product ----------------------------------------------------------------

Expr Product::pair(const Expr& a, const Expr& b) const {
    int m = a.dim();
    if (b.dim() != m) throw std::invalid_argument("Product::pair: dimension mismatch");
    return pair_index[m].at({a, b});
}

SMap Product::tuple(const SMap& f, const SMap& g) const {
    SMap h{f.src, obj, {}};
    h.assign.resize(f.src->trunc_dim + 1);
    for (int d = 0; d <= f.src->trunc_dim; ++d) {
        h.assign[d].resize(f.src->dim_count(d));
        for (int j = 0; j < f.src->dim_count(d); ++j)
            h.assign[d][j] = pair(f.assign[d][j], g.assign[d][j]);
    }
    return h;
}

Product product(const SSetPtr& x, const SSetPtr& y) {
    check_compatible(x, y, "product");
    int D = x->trunc_dim;
    TableSSet t;
    t.trunc_dim = D;
    t.count.resize(D + 1);
    t.face.assign(D + 1, {});
    t.degen.assign(D + 1, {});
    auto pack = [&](int m, int i, int j) { return i * y->elem_count(m) + j; };
    for (int m = 0; m <= D; ++m) t.count[m] = x->elem_count(m) * y->elem_count(m);
    for (int m = 1; m <= D; ++m) {
        t.face[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int a = 0; a < x->elem_count(m); ++a)
                for (int bI = 0; bI < y->elem_count(m); ++bI)
                    t.face[m][i][pack(m, a, bI)] =
                        pack(m - 1, x->eface[m][i][a], y->eface[m][i][bI]);
    }
    for (int m = 0; m < D; ++m) {
        t.degen[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int a = 0; a < x->elem_count(m); ++a)
                for (int bI = 0; bI < y->elem_count(m); ++bI)
                    t.degen[m][i][pack(m, a, bI)] =
                        pack(m + 1, x->edegen[m][i][a], y->edegen[m][i][bI]);
    }
    Normalized n = normalize_table(t, [&](int m, int e) {
        int a = e / y->elem_count(m), bI = e % y->elem_count(m);
        return "(" + x->expr_string(x->elems[m][a]) + "|" + y->expr_string(y->elems[m][bI]) + ")";
    });
    Product P;
    P.obj = n.sset;
    P.lhs = x;
    P.rhs = y;
    P.pair_index.resize(D + 1);
    for (int m = 0; m <= D; ++m)
        for (int e = 0; e < t.count[m]; ++e) {
            int a = e / y->elem_count(m), bI = e % y->elem_count(m);
            P.pair_index[m][{x->elems[m][a], y->elems[m][bI]}] = n.expr_of[m][e];
        }
    P.p1 = map_from_elem_images(P.obj, x, [&](int d, const Expr& nd) {
        int e = n.elem_of_nondeg[d][nd.base];
        return x->elems[d][e / y->elem_count(d)];
    });
    P.p2 = map_from_elem_images(P.obj, y, [&](int d, const Expr& nd) {
        int e = n.elem_of_nondeg[d][nd.base];
        return y->elems[d][e % y->elem_count(d)];
    });
    return P;
}

// --- fiber product ----------------------------------------------------------

Expr FiberProduct::pair(const Expr& a, const Expr& b) const {
    int m = a.dim();
    auto it = pair_index[m].find({a, b});
    if (it == pair_index[m].end())
        throw std::invalid_argument("FiberProduct::pair: pair does not satisfy the constraint");
    return it->second;
}

SMap FiberProduct::tuple(const SMap& u, const SMap& v) const {
    if (!(compose(f, u) == compose(g, v)))
        throw std::invalid_argument("FiberProduct::tuple: cone does not commute");
    SMap h{u.src, obj, {}};
    h.assign.resize(u.src->trunc_dim + 1);
    for (int d = 0; d <= u.src->trunc_dim; ++d) {
        h.assign[d].resize(u.src->dim_count(d));
        for (int j = 0; j < u.src->dim_count(d); ++j)
            h.assign[d][j] = pair(u.assign[d][j], v.assign[d][j]);
    }
    return h;
}

FiberProduct fiber_product(const SMap& f, const SMap& g) {
    check_compatible(f.src, g.src, "fiber_product");
    check_compatible(f.dst, g.dst, "fiber_product");
    const SSetPtr& A = f.src;
    const SSetPtr& B = g.src;
    int D = A->trunc_dim;
    // collect matching pairs per dimension
    std::vector<std::vector<std::pair<int, int>>> pairs(D + 1);
    std::vector<std::map<std::pair<int, int>, int>> where(D + 1);
    for (int m = 0; m <= D; ++m) {
        std::map<Expr, std::vector<int>> by_image;
        for (int bI = 0; bI < B->elem_count(m); ++bI) by_image[g(B->elems[m][bI])].push_back(bI);
        for (int a = 0; a < A->elem_count(m); ++a) {
            auto it = by_image.find(f(A->elems[m][a]));
            if (it == by_image.end()) continue;
            for (int bI : it->second) {
                where[m][{a, bI}] = static_cast<int>(pairs[m].size());
                pairs[m].push_back({a, bI});
            }
        }
    }
    TableSSet t;
    t.trunc_dim = D;
    t.count.resize(D + 1);
    t.face.assign(D + 1, {});
    t.degen.assign(D + 1, {});
    for (int m = 0; m <= D; ++m) t.count[m] = static_cast<int>(pairs[m].size());
    for (int m = 1; m <= D; ++m) {
        t.face[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int e = 0; e < t.count[m]; ++e) {
                auto [a, bI] = pairs[m][e];
                t.face[m][i][e] = where[m - 1].at({A->eface[m][i][a], B->eface[m][i][bI]});
            }
    }
    for (int m = 0; m < D; ++m) {
        t.degen[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int e = 0; e < t.count[m]; ++e) {
                auto [a, bI] = pairs[m][e];
                t.degen[m][i][e] = where[m + 1].at({A->edegen[m][i][a], B->edegen[m][i][bI]});
            }
    }
    Normalized n = normalize_table(t, [&](int m, int e) {
        auto [a, bI] = pairs[m][e];
        return "(" + A->expr_string(A->elems[m][a]) + "|" + B->expr_string(B->elems[m][bI]) + ")";
    });
    FiberProduct P;
    P.obj = n.sset;
    P.f = f;
    P.g = g;
    P.pair_index.resize(D + 1);
    for (int m = 0; m <= D; ++m)
        for (int e = 0; e < t.count[m]; ++e) {
            auto [a, bI] = pairs[m][e];
            P.pair_index[m][{A->elems[m][a], B->elems[m][bI]}] = n.expr_of[m][e];
        }
    P.p1 = map_from_elem_images(P.obj, A, [&](int d, const Expr& nd) {
        return A->elems[d][pairs[d][n.elem_of_nondeg[d][nd.base]].first];
    });
    P.p2 = map_from_elem_images(P.obj, B, [&](int d, const Expr& nd) {
        return B->elems[d][pairs[d][n.elem_of_nondeg[d][nd.base]].second];
    });
    return P;
}

// --- pushout ----------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

SMap Pushout::cotuple(const SMap& u, const SMap& v) const {
    if (!(compose(u, f) == compose(v, g)))
        throw std::invalid_argument("Pushout::cotuple: cocone does not commute");
    return map_from_elem_images(obj, u.dst, [&](int d, const Expr& nd) {
        const auto& [side, e] = rep[d][nd.base];
        return side == 0 ? u(e) : v(e);
    });
}

Pushout pushout(const SMap& f, const SMap& g) {
    check_compatible(f.src, g.src, "pushout");
    const SSetPtr& W = f.src;
    const SSetPtr& A = f.dst;
    const SSetPtr& B = g.dst;
    int D = W->trunc_dim;
    std::vector<UnionFind> uf;
    uf.reserve(D + 1);
    for (int m = 0; m <= D; ++m) uf.emplace_back(A->elem_count(m) + B->elem_count(m));
    for (int m = 0; m <= D; ++m)
        for (int w = 0; w < W->elem_count(m); ++w) {
            int a = A->index_of(f(W->elems[m][w]));
            int bI = B->index_of(g(W->elems[m][w]));
            uf[m].unite(a, A->elem_count(m) + bI);
        }
    // number the classes in order of first occurrence
    std::vector<std::vector<int>> class_id(D + 1);
    std::vector<std::vector<int>> class_rep(D + 1);  // representative raw index
    TableSSet t;
    t.trunc_dim = D;
    t.count.assign(D + 1, 0);
    t.face.assign(D + 1, {});
    t.degen.assign(D + 1, {});
    for (int m = 0; m <= D; ++m) {
        int total = A->elem_count(m) + B->elem_count(m);
        class_id[m].assign(total, -1);
        for (int r = 0; r < total; ++r) {
            int root = uf[m].find(r);
            if (class_id[m][root] < 0) {
                class_id[m][root] = t.count[m]++;
                class_rep[m].push_back(root);
            }
            class_id[m][r] = class_id[m][root];
        }
    }
    auto raw_face = [&](int m, int i, int raw) {
        int na = A->elem_count(m);
        return raw < na ? A->eface[m][i][raw] : A->elem_count(m - 1) + B->eface[m][i][raw - na];
    };
    auto raw_degen = [&](int m, int i, int raw) {
        int na = A->elem_count(m);
        return raw < na ? A->edegen[m][i][raw] : A->elem_count(m + 1) + B->edegen[m][i][raw - na];
    };
    for (int m = 1; m <= D; ++m) {
        t.face[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int c = 0; c < t.count[m]; ++c)
                t.face[m][i][c] = class_id[m - 1][raw_face(m, i, class_rep[m][c])];
    }
    for (int m = 0; m < D; ++m) {
        t.degen[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int c = 0; c < t.count[m]; ++c)
                t.degen[m][i][c] = class_id[m + 1][raw_degen(m, i, class_rep[m][c])];
    }
    Normalized n = normalize_table(t, [&](int m, int e) {
        int raw = class_rep[m][e];
        int na = A->elem_count(m);
        return raw < na ? A->expr_string(A->elems[m][raw])
                        : B->expr_string(B->elems[m][raw - na]) + "'";
    });
    Pushout P;
    P.obj = n.sset;
    P.f = f;
    P.g = g;
    P.rep.assign(D + 1, {});
    P.class_of_a.resize(D + 1);
    P.class_of_b.resize(D + 1);
    for (int m = 0; m <= D; ++m) {
        for (int j = 0; j < n.sset->dim_count(m); ++j) {
            int raw = class_rep[m][n.elem_of_nondeg[m][j]];
            int na = A->elem_count(m);
            if (raw < na)
                P.rep[m].push_back({0, A->elems[m][raw]});
            else
                P.rep[m].push_back({1, B->elems[m][raw - na]});
        }
        for (int a = 0; a < A->elem_count(m); ++a)
            P.class_of_a[m][A->elems[m][a]] = n.expr_of[m][class_id[m][a]];
        for (int bI = 0; bI < B->elem_count(m); ++bI)
            P.class_of_b[m][B->elems[m][bI]] =
                n.expr_of[m][class_id[m][A->elem_count(m) + bI]];
    }
    P.i1 = map_from_elem_images(A, P.obj,
                                [&](int d, const Expr& nd) { return P.class_of_a[d].at(nd); });
    P.i2 = map_from_elem_images(B, P.obj,
                                [&](int d, const Expr& nd) { return P.class_of_b[d].at(nd); });
    return P;
}

Pushout coproduct(const SSetPtr& x, const SSetPtr& y) {
    auto e = empty_sset(x->trunc_dim);
    SMap f{e, x, std::vector<std::vector<Expr>>(x->trunc_dim + 1)};
    SMap g{e, y, std::vector<std::vector<Expr>>(x->trunc_dim + 1)};
    return pushout(f, g);
}

// --- subobjects --------------------------------------------------------------

bool Subobject::contains(const Expr& ambient) const {
    return expr_in_sub[ambient.dim()].count(ambient) > 0;
}

SMap Subobject::corestrict(const SMap& f) const {
    return map_from_elem_images(f.src, obj, [&](int d, const Expr& nd) {
        Expr img = f.assign[d][nd.base];
        auto it = expr_in_sub[d].find(img);
        if (it == expr_in_sub[d].end())
            throw std::invalid_argument("Subobject::corestrict: map does not land in the subobject");
        return it->second;
    });
}

namespace {

Subobject subobject_from_marked(const SSetPtr& x, std::vector<std::vector<char>>& marked) {
    int D = x->trunc_dim;
    // close under faces and degeneracies
    bool changed = true;
    while (changed) {
        changed = false;
        for (int m = 0; m <= D; ++m)
            for (int e = 0; e < x->elem_count(m); ++e) {
                if (!marked[m][e]) continue;
                for (int i = 0; m >= 1 && i <= m; ++i) {
                    int fIdx = x->eface[m][i][e];
                    if (!marked[m - 1][fIdx]) {
                        marked[m - 1][fIdx] = 1;
                        changed = true;
                    }
                }
                for (int i = 0; m < D && i <= m; ++i) {
                    int sIdx = x->edegen[m][i][e];
                    if (!marked[m + 1][sIdx]) {
                        marked[m + 1][sIdx] = 1;
                        changed = true;
                    }
                }
            }
    }
    // nondegenerate simplices of the subobject are ambient nondegenerate ones
    SSetBuilder b(D);
    std::vector<std::vector<int>> new_index(D + 1);
    for (int d = 0; d <= D; ++d) {
        new_index[d].assign(x->dim_count(d), -1);
        for (int j = 0; j < x->dim_count(d); ++j) {
            Expr nd{d, j, {}};
            if (!marked[d][x->index_of(nd)]) continue;
            std::vector<Expr> faces;
            if (d >= 1)
                for (const Expr& fc : x->nd_face[d][j])
                    faces.push_back(Expr{fc.base_dim, new_index[fc.base_dim][fc.base], fc.word});
            new_index[d][j] = b.add(d, x->ids[d][j], faces);
        }
    }
    Subobject S;
    S.obj = b.build();
    S.expr_in_sub.resize(D + 1);
    for (int m = 0; m <= D; ++m)
        for (int e = 0; e < x->elem_count(m); ++e) {
            if (!marked[m][e]) continue;
            const Expr& amb = x->elems[m][e];
            S.expr_in_sub[m][amb] = Expr{amb.base_dim, new_index[amb.base_dim][amb.base], amb.word};
        }
    S.include = map_from_elem_images(S.obj, x, [&](int d, const Expr& nd) {
        for (int j = 0; j < x->dim_count(d); ++j)
            if (new_index[d][j] == nd.base) return Expr{d, j, {}};
        throw std::logic_error("subobject include: lost track of a simplex");
    });
    return S;
}

}  // namespace

Subobject span_subobject(const SSetPtr& x, const std::vector<Expr>& generators) {
    std::vector<std::vector<char>> marked(x->trunc_dim + 1);
    for (int m = 0; m <= x->trunc_dim; ++m) marked[m].assign(x->elem_count(m), 0);
    for (const Expr& g : generators) marked[g.dim()][x->index_of(g)] = 1;
    return subobject_from_marked(x, marked);
}

// --- pi0 ----------------------------------------------------------------------

Pi0 pi0(const SSetPtr& x) {
    if (x->trunc_dim < 1)
        throw std::invalid_argument("pi0: needs truncation dimension at least 1 (edges unknown)");
    UnionFind uf(x->elem_count(0));
    for (int e = 0; e < x->elem_count(1); ++e) uf.unite(x->eface[1][0][e], x->eface[1][1][e]);
    Pi0 out;
    out.component_of_vertex.assign(x->elem_count(0), -1);
    std::vector<int> label(x->elem_count(0), -1);
    for (int v = 0; v < x->elem_count(0); ++v) {
        int root = uf.find(v);
        if (label[root] < 0) label[root] = out.count++;
        out.component_of_vertex[v] = label[root];
    }
    return out;
}

int Pi0::component_of(const SSet& x, const Expr& vertex) const {
    return component_of_vertex[x.index_of(vertex)];
}

namespace {

int comp_of_elem(const SSetPtr& x, const Pi0& p, int m, int e) {
    int cur = e;
    for (int d = m; d >= 1; --d) cur = x->eface[d][0][cur];
    return p.component_of_vertex[cur];
}

}  // namespace

std::vector<Subobject> component_split(const SSetPtr& x, const Pi0& p) {
    int D = x->trunc_dim;
    std::vector<Subobject> out;
    for (int c = 0; c < p.count; ++c) {
        std::vector<std::vector<char>> marked(D + 1);
        for (int m = 0; m <= D; ++m) {
            marked[m].assign(x->elem_count(m), 0);
            for (int e = 0; e < x->elem_count(m); ++e)
                if (comp_of_elem(x, p, m, e) == c) marked[m][e] = 1;
        }
        out.push_back(subobject_from_marked(x, marked));
    }
    return out;
}

Subobject components_subobject(const SSetPtr& x, const Pi0& p, const std::vector<int>& comps) {
    int D = x->trunc_dim;
    std::vector<char> wanted(p.count, 0);
    for (int c : comps) wanted[c] = 1;
    std::vector<std::vector<char>> marked(D + 1);
    for (int m = 0; m <= D; ++m) {
        marked[m].assign(x->elem_count(m), 0);
        for (int e = 0; e < x->elem_count(m); ++e)
            if (wanted[comp_of_elem(x, p, m, e)]) marked[m][e] = 1;
    }
    return subobject_from_marked(x, marked);
}

}  // namespace catkit
