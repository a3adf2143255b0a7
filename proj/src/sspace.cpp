#include "catkit/sspace.hpp"

#include <algorithm>
#include <set>

#ifdef CATKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace catkit {

ValidationReport validate_sspace(const SSpace& x) {
    ValidationReport rep;
    int M = x.outer_dim;
    int D = x.inner_dim();
    for (int m = 0; m <= M; ++m)
        if (x.level[m]->trunc_dim != D) rep.fail("levels do not share a truncation");
    if (!rep.ok) return rep;
    for (int m = 1; m <= M; ++m)
        for (int i = 0; i <= m; ++i) {
            auto r = validate_smap(x.face[m][i]);
            if (!r.ok) rep.fail("outer face " + std::to_string(i) + " at level " + std::to_string(m) +
                                " is not simplicial: " + r.violations[0]);
        }
    for (int m = 0; m < M; ++m)
        for (int i = 0; i <= m; ++i) {
            auto r = validate_smap(x.degen[m][i]);
            if (!r.ok) rep.fail("outer degeneracy " + std::to_string(i) + " at level " +
                                std::to_string(m) + " is not simplicial: " + r.violations[0]);
        }
    if (!rep.ok) return rep;
    for (int m = 2; m <= M; ++m)
        for (int j = 1; j <= m; ++j)
            for (int i = 0; i < j; ++i)
                if (!(compose(x.face[m - 1][i], x.face[m][j]) ==
                      compose(x.face[m - 1][j - 1], x.face[m][i])))
                    rep.fail("outer d_i d_j identity fails at level " + std::to_string(m) + " (i=" +
                             std::to_string(i) + ", j=" + std::to_string(j) + ")");
    for (int m = 0; m + 2 <= M; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= j; ++i)
                if (!(compose(x.degen[m + 1][i], x.degen[m][j]) ==
                      compose(x.degen[m + 1][j + 1], x.degen[m][i])))
                    rep.fail("outer s_i s_j identity fails at level " + std::to_string(m));
    for (int m = 0; m < M; ++m)
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= m + 1; ++i) {
                SMap lhs = compose(x.face[m + 1][i], x.degen[m][j]);
                if (i == j || i == j + 1) {
                    if (!(lhs == identity_map(x.level[m])))
                        rep.fail("outer d_i s_j != id at level " + std::to_string(m));
                } else if (i < j) {
                    if (!(lhs == compose(x.degen[m - 1][j - 1], x.face[m][i])))
                        rep.fail("outer d_i s_j != s_{j-1} d_i at level " + std::to_string(m));
                } else {
                    if (!(lhs == compose(x.degen[m - 1][j], x.face[m][i - 1])))
                        rep.fail("outer d_i s_j != s_j d_{i-1} at level " + std::to_string(m));
                }
            }
    return rep;
}

ValidationReport validate_ssmap(const SSMap& f) {
    ValidationReport rep;
    int M = f.src->outer_dim;
    if (f.dst->outer_dim != M) {
        rep.fail("outer truncation mismatch");
        return rep;
    }
    for (int m = 0; m <= M; ++m) {
        auto r = validate_smap(f.level[m]);
        if (!r.ok) rep.fail("level " + std::to_string(m) + ": " + r.violations[0]);
    }
    if (!rep.ok) return rep;
    for (int m = 1; m <= M; ++m)
        for (int i = 0; i <= m; ++i)
            if (!(compose(f.dst->face[m][i], f.level[m]) ==
                  compose(f.level[m - 1], f.src->face[m][i])))
                rep.fail("naturality fails against outer face " + std::to_string(i) + " at level " +
                         std::to_string(m));
    for (int m = 0; m < M; ++m)
        for (int i = 0; i <= m; ++i)
            if (!(compose(f.dst->degen[m][i], f.level[m]) ==
                  compose(f.level[m + 1], f.src->degen[m][i])))
                rep.fail("naturality fails against outer degeneracy " + std::to_string(i) +
                         " at level " + std::to_string(m));
    return rep;
}

SSMap identity_ssmap(const SSpacePtr& x) {
    SSMap f{x, x, {}};
    for (int m = 0; m <= x->outer_dim; ++m) f.level.push_back(identity_map(x->level[m]));
    return f;
}

SSMap compose(const SSMap& g, const SSMap& f) {
    SSMap h{f.src, g.dst, {}};
    for (size_t m = 0; m < f.level.size(); ++m) h.level.push_back(compose(g.level[m], f.level[m]));
    return h;
}

SMap outer_op(const SSpace& x, const std::vector<int>& phi, int n) {
    int m = static_cast<int>(phi.size()) - 1;
    if (m == n) {
        bool is_id = true;
        for (int i = 0; i <= m; ++i)
            if (phi[i] != i) is_id = false;
        if (is_id) return identity_map(x.level[n]);
    }
    int missing = -1;
    for (int j = n; j >= 0; --j) {
        bool hit = false;
        for (int v : phi)
            if (v == j) hit = true;
        if (!hit) {
            missing = j;
            break;
        }
    }
    if (missing >= 0) {
        std::vector<int> phi2 = phi;
        for (int& v : phi2)
            if (v > missing) --v;
        return compose(outer_op(x, phi2, n - 1), x.face[n][missing]);
    }
    for (int i = 0; i < m; ++i)
        if (phi[i] == phi[i + 1]) {
            std::vector<int> phi2 = phi;
            phi2.erase(phi2.begin() + i + 1);
            return compose(x.degen[m - 1][i], outer_op(x, phi2, n));
        }
    throw std::logic_error("outer_op: not a monotone map");
}

SSMapEnumeration enumerate_ssmaps(const SSpacePtr& x, const SSpacePtr& y,
                                  std::uint64_t budget_per_level) {
    SSMapEnumeration out;
    int M = x->outer_dim;
    int D = x->inner_dim();
    std::vector<SMap> chosen(M + 1);
    std::uint64_t visited = 0;
    bool aborted = false;

    // per-level backtracking over nondegenerate simplices; images that sit in
    // the image of an outer degeneracy are forced by the level below
    std::function<void(int)> rec_level = [&](int m) {
        if (aborted) return;
        if (m > M) {
            SSMap f{x, y, chosen};
            if (validate_ssmap(f).ok) out.maps.push_back(std::move(f));
            return;
        }
        const SSetPtr& XM = x->level[m];
        const SSetPtr& YM = y->level[m];
        std::vector<std::vector<std::optional<Expr>>> forced(D + 1);
        for (int d = 0; d <= D; ++d) forced[d].assign(XM->dim_count(d), std::nullopt);
        if (m >= 1) {
            for (int i = 0; i < m; ++i) {
                const SMap& si = x->degen[m - 1][i];
                const SMap& ti = y->degen[m - 1][i];
                for (int d = 0; d <= D; ++d)
                    for (const Expr& w : x->level[m - 1]->elems[d]) {
                        Expr z = si(w);
                        if (z.is_degenerate()) continue;  // handled through its base
                        Expr img = ti(chosen[m - 1](w));
                        auto& slot = forced[d][z.base];
                        if (slot && !(*slot == img)) return;  // inconsistent, dead branch
                        slot = img;
                    }
            }
        }
        SMap f{XM, YM, {}};
        f.assign.resize(D + 1);
        for (int d = 0; d <= D; ++d) f.assign[d].resize(XM->dim_count(d));
        std::vector<std::pair<int, int>> slots;
        for (int d = 0; d <= D; ++d)
            for (int j = 0; j < XM->dim_count(d); ++j) slots.push_back({d, j});
        std::function<void(size_t)> rec = [&](size_t s) {
            if (aborted) return;
            if (s == slots.size()) {
                chosen[m] = f;
                rec_level(m + 1);
                return;
            }
            auto [d, j] = slots[s];
            auto try_candidate = [&](const Expr& cand) {
                if (++visited > budget_per_level) {
                    aborted = true;
                    return;
                }
                for (int i = 0; d >= 1 && i <= d; ++i)
                    if (f(XM->nd_face[d][j][i]) != YM->face_of(cand, i)) return;
                Expr nd{d, j, {}};
                for (int i = 0; m >= 1 && i <= m; ++i)
                    if (!(y->face[m][i](cand) == chosen[m - 1](x->face[m][i](nd)))) return;
                f.assign[d][j] = cand;
                rec(s + 1);
            };
            if (forced[d][j]) {
                try_candidate(*forced[d][j]);
            } else {
                for (const Expr& cand : YM->elems[d]) {
                    try_candidate(cand);
                    if (aborted) return;
                }
            }
        };
        rec(0);
    };
    rec_level(0);
    out.complete = !aborted;
    return out;
}

// --- levelwise-discrete spaces ------------------------------------------------

namespace {

struct DiscreteLevels {
    std::vector<std::vector<std::string>> names;  // per level
    std::function<std::string(int, int, const std::string&)> face;   // (m, i, name)
    std::function<std::string(int, int, const std::string&)> degen;  // (m, i, name)
};

SSpacePtr build_discrete_space(const DiscreteLevels& spec, int M, int D) {
    auto sp = std::make_shared<SSpace>();
    sp->outer_dim = M;
    for (int m = 0; m <= M; ++m) sp->level.push_back(discrete_sset(spec.names[m], D));
    sp->face.resize(M + 1);
    sp->degen.resize(M + 1);
    auto vertex = [&](int m, const std::string& name) {
        auto j = sp->level[m]->find_id(0, name);
        if (!j) throw std::logic_error("build_discrete_space: missing point " + name);
        return Expr{0, *j, {}};
    };
    for (int m = 1; m <= M; ++m)
        for (int i = 0; i <= m; ++i)
            sp->face[m].push_back(map_from_elem_images(
                sp->level[m], sp->level[m - 1], [&, m, i](int, const Expr& nd) {
                    return vertex(m - 1, spec.face(m, i, spec.names[m][nd.base]));
                }));
    for (int m = 0; m < M; ++m)
        for (int i = 0; i <= m; ++i)
            sp->degen[m].push_back(map_from_elem_images(
                sp->level[m], sp->level[m + 1], [&, m, i](int, const Expr& nd) {
                    return vertex(m + 1, spec.degen(m, i, spec.names[m][nd.base]));
                }));
    return sp;
}

std::vector<std::string> monotone_sequences(int m, int n, bool spine_only) {
    std::vector<std::string> out;
    std::string cur;
    std::function<void(int, int)> rec = [&](int pos, int last) {
        if (pos == m + 1) {
            int lo = cur.front() - '0', hi = cur.back() - '0';
            if (!spine_only || hi - lo <= 1) out.push_back(cur);
            return;
        }
        for (int v = last; v <= n; ++v) {
            cur.push_back(static_cast<char>('0' + v));
            rec(pos + 1, v);
            cur.pop_back();
        }
    };
    rec(0, 0);
    return out;
}

std::string drop_at(const std::string& s, int i) {
    std::string t = s;
    t.erase(t.begin() + i);
    return t;
}

std::string dup_at(const std::string& s, int i) {
    std::string t = s;
    t.insert(t.begin() + i, s[i]);
    return t;
}

}  // namespace

SSpacePtr make_F(int n, int M, int D) {
    if (n > 9) throw std::invalid_argument("make_F: n > 9 not supported by the naming scheme");
    DiscreteLevels spec;
    for (int m = 0; m <= M; ++m) spec.names.push_back(monotone_sequences(m, n, false));
    spec.face = [](int, int i, const std::string& s) { return drop_at(s, i); };
    spec.degen = [](int, int i, const std::string& s) { return dup_at(s, i); };
    return build_discrete_space(spec, M, D);
}

GInclusion make_G(int n, int M, int D) {
    if (n < 1) throw std::invalid_argument("make_G: n must be >= 1");
    DiscreteLevels spec;
    for (int m = 0; m <= M; ++m) spec.names.push_back(monotone_sequences(m, n, true));
    spec.face = [](int, int i, const std::string& s) { return drop_at(s, i); };
    spec.degen = [](int, int i, const std::string& s) { return dup_at(s, i); };
    GInclusion out;
    out.g = build_discrete_space(spec, M, D);
    out.f = make_F(n, M, D);
    out.include.src = out.g;
    out.include.dst = out.f;
    for (int m = 0; m <= M; ++m)
        out.include.level.push_back(map_from_elem_images(
            out.g->level[m], out.f->level[m], [&, m](int, const Expr& nd) {
                return Expr{0, *out.f->level[m]->find_id(0, out.g->level[m]->ids[0][nd.base]), {}};
            }));
    return out;
}

SSpacePtr make_E(int M, int D) {
    DiscreteLevels spec;
    for (int m = 0; m <= M; ++m) {
        std::vector<std::string> names;
        for (int mask = 0; mask < (1 << (m + 1)); ++mask) {
            std::string s;
            for (int i = 0; i <= m; ++i) s.push_back((mask >> i) & 1 ? '1' : '0');
            names.push_back(s);
        }
        std::sort(names.begin(), names.end());
        spec.names.push_back(names);
    }
    spec.face = [](int, int i, const std::string& s) { return drop_at(s, i); };
    spec.degen = [](int, int i, const std::string& s) { return dup_at(s, i); };
    return build_discrete_space(spec, M, D);
}

SSpacePtr constant_sspace(const SSetPtr& k, int M) {
    auto sp = std::make_shared<SSpace>();
    sp->outer_dim = M;
    sp->face.resize(M + 1);
    sp->degen.resize(M + 1);
    for (int m = 0; m <= M; ++m) sp->level.push_back(k);
    for (int m = 1; m <= M; ++m)
        for (int i = 0; i <= m; ++i) sp->face[m].push_back(identity_map(k));
    for (int m = 0; m < M; ++m)
        for (int i = 0; i <= m; ++i) sp->degen[m].push_back(identity_map(k));
    return sp;
}

SSpacePtr levelwise_discrete_space(const SSetPtr& k, int M, int D) {
    if (M > k->trunc_dim)
        throw std::invalid_argument("levelwise_discrete_space: outer dimension exceeds the object");
    DiscreteLevels spec;
    for (int m = 0; m <= M; ++m) {
        std::vector<std::string> names;
        for (const Expr& e : k->elems[m]) names.push_back(k->expr_string(e));
        spec.names.push_back(std::move(names));
    }
    spec.face = [k](int m, int i, const std::string& s) {
        for (const Expr& e : k->elems[m])
            if (k->expr_string(e) == s) return k->expr_string(k->face_of(e, i));
        throw std::logic_error("levelwise_discrete_space: unknown simplex " + s);
    };
    spec.degen = [k](int m, int i, const std::string& s) {
        for (const Expr& e : k->elems[m])
            if (k->expr_string(e) == s) return k->expr_string(SSet::degen_of(e, i));
        throw std::logic_error("levelwise_discrete_space: unknown simplex " + s);
    };
    return build_discrete_space(spec, M, D);
}

SSpaceProduct sspace_product(const SSpacePtr& a, const SSpacePtr& b) {
    SSpaceProduct out;
    int M = a->outer_dim;
    if (b->outer_dim != M) throw std::invalid_argument("sspace_product: outer dim mismatch");
    auto sp = std::make_shared<SSpace>();
    sp->outer_dim = M;
    sp->face.resize(M + 1);
    sp->degen.resize(M + 1);
    for (int m = 0; m <= M; ++m) {
        out.levels.push_back(product(a->level[m], b->level[m]));
        sp->level.push_back(out.levels[m].obj);
    }
    for (int m = 1; m <= M; ++m)
        for (int i = 0; i <= m; ++i)
            sp->face[m].push_back(out.levels[m - 1].tuple(
                compose(a->face[m][i], out.levels[m].p1),
                compose(b->face[m][i], out.levels[m].p2)));
    for (int m = 0; m < M; ++m)
        for (int i = 0; i <= m; ++i)
            sp->degen[m].push_back(out.levels[m + 1].tuple(
                compose(a->degen[m][i], out.levels[m].p1),
                compose(b->degen[m][i], out.levels[m].p2)));
    out.obj = sp;
    out.p1.src = sp;
    out.p2.src = sp;
    out.p1.dst = a;
    out.p2.dst = b;
    for (int m = 0; m <= M; ++m) {
        out.p1.level.push_back(out.levels[m].p1);
        out.p2.level.push_back(out.levels[m].p2);
    }
    return out;
}

SSpacePushout sspace_pushout(const SSMap& f, const SSMap& g) {
    SSpacePushout out;
    int M = f.src->outer_dim;
    auto sp = std::make_shared<SSpace>();
    sp->outer_dim = M;
    sp->face.resize(M + 1);
    sp->degen.resize(M + 1);
    for (int m = 0; m <= M; ++m) {
        out.levels.push_back(pushout(f.level[m], g.level[m]));
        sp->level.push_back(out.levels[m].obj);
    }
    const SSpacePtr& A = f.dst;
    const SSpacePtr& B = g.dst;
    for (int m = 1; m <= M; ++m)
        for (int i = 0; i <= m; ++i)
            sp->face[m].push_back(out.levels[m].cotuple(
                compose(out.levels[m - 1].i1, A->face[m][i]),
                compose(out.levels[m - 1].i2, B->face[m][i])));
    for (int m = 0; m < M; ++m)
        for (int i = 0; i <= m; ++i)
            sp->degen[m].push_back(out.levels[m].cotuple(
                compose(out.levels[m + 1].i1, A->degen[m][i]),
                compose(out.levels[m + 1].i2, B->degen[m][i])));
    out.obj = sp;
    out.i1.src = A;
    out.i2.src = B;
    out.i1.dst = sp;
    out.i2.dst = sp;
    for (int m = 0; m <= M; ++m) {
        out.i1.level.push_back(out.levels[m].i1);
        out.i2.level.push_back(out.levels[m].i2);
    }
    return out;
}

// --- Segal map ------------------------------------------------------------------

SegalMap segal_map(const SSpacePtr& x, int n) {
    if (n < 1 || n > x->outer_dim) throw std::invalid_argument("segal_map: n out of range");
    const SMap& src = x->face[1][1];
    const SMap& tgt = x->face[1][0];
    SegalMap out;
    if (n == 1) {
        out.map = identity_map(x->level[1]);
        out.power = x->level[1];
        out.proj = {identity_map(x->level[1])};
        return out;
    }
    // iterated fiber product X_1 x_{X_0} ... x_{X_0} X_1
    SSetPtr power = x->level[1];
    std::vector<SMap> proj = {identity_map(x->level[1])};
    std::vector<FiberProduct> steps;
    for (int i = 2; i <= n; ++i) {
        FiberProduct fp = fiber_product(compose(tgt, proj.back()), src);
        for (SMap& pj : proj) pj = compose(pj, fp.p1);
        proj.push_back(fp.p2);
        power = fp.obj;
        steps.push_back(std::move(fp));
    }
    // components of the Segal map: restriction to the i-th spine edge
    std::vector<SMap> comp;
    for (int i = 1; i <= n; ++i) comp.push_back(outer_op(*x, {i - 1, i}, n));
    SMap cur = comp[0];
    for (int i = 2; i <= n; ++i) cur = steps[i - 2].tuple(cur, comp[i - 1]);
    out.map = cur;
    out.power = power;
    out.proj = proj;
    return out;
}

// --- latching object ---------------------------------------------------------------

Latching latching(const SSpacePtr& x, int r) {
    if (r < 0 || r > x->outer_dim) throw std::invalid_argument("latching: r out of range");
    int D = x->inner_dim();
    Latching out;
    if (r == 0) {
        out.obj = empty_sset(D);
        out.to_level = SMap{out.obj, x->level[0], std::vector<std::vector<Expr>>(D + 1)};
        return out;
    }
    const SSetPtr& below = x->level[r - 1];
    TableSSet t;
    t.trunc_dim = D;
    t.count.resize(D + 1);
    t.face.assign(D + 1, {});
    t.degen.assign(D + 1, {});
    // raw elements: (copy i, element of X_{r-1}); relations glue copies along
    // the outer degeneracies of X_{r-2}
    std::vector<std::vector<int>> class_id(D + 1), class_rep(D + 1);
    for (int m = 0; m <= D; ++m) {
        int per = below->elem_count(m);
        int total = r * per;
        std::vector<int> parent(total);
        for (int i = 0; i < total; ++i) parent[i] = i;
        std::function<int(int)> find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        if (r >= 2) {
            const SSetPtr& lower = x->level[r - 2];
            for (int i = 0; i + 1 <= r - 1; ++i)
                for (int j = i; j <= r - 2; ++j)
                    for (int z = 0; z < lower->elem_count(m); ++z) {
                        const Expr& ze = lower->elems[m][z];
                        int a = i * per + below->index_of(x->degen[r - 2][j](ze));
                        int bb = (j + 1) * per + below->index_of(x->degen[r - 2][i](ze));
                        int ra = find(a), rb = find(bb);
                        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
                    }
        }
        class_id[m].assign(total, -1);
        for (int i = 0; i < total; ++i) {
            int root = find(i);
            if (class_id[m][root] < 0) {
                class_id[m][root] = t.count[m]++;
                class_rep[m].push_back(root);
            }
            class_id[m][i] = class_id[m][root];
        }
    }
    for (int m = 1; m <= D; ++m) {
        t.face[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int c = 0; c < t.count[m]; ++c) {
                int raw = class_rep[m][c];
                int copy = raw / below->elem_count(m), e = raw % below->elem_count(m);
                t.face[m][i][c] = class_id[m - 1][copy * below->elem_count(m - 1) +
                                                  below->eface[m][i][e]];
            }
    }
    for (int m = 0; m < D; ++m) {
        t.degen[m].assign(m + 1, std::vector<int>(t.count[m]));
        for (int i = 0; i <= m; ++i)
            for (int c = 0; c < t.count[m]; ++c) {
                int raw = class_rep[m][c];
                int copy = raw / below->elem_count(m), e = raw % below->elem_count(m);
                t.degen[m][i][c] = class_id[m + 1][copy * below->elem_count(m + 1) +
                                                   below->edegen[m][i][e]];
            }
    }
    Normalized n = normalize_table(t, [&](int m, int c) {
        int raw = class_rep[m][c];
        int copy = raw / below->elem_count(m), e = raw % below->elem_count(m);
        return "s" + std::to_string(copy) + "(" + below->expr_string(below->elems[m][e]) + ")";
    });
    out.obj = n.sset;
    out.to_level = map_from_elem_images(out.obj, x->level[r], [&](int d, const Expr& nd) {
        int raw = class_rep[d][n.elem_of_nondeg[d][nd.base]];
        int copy = raw / below->elem_count(d), e = raw % below->elem_count(d);
        return x->degen[r - 1][copy](below->elems[d][e]);
    });
    return out;
}

// --- diagonal ------------------------------------------------------------------------

SSetPtr diagonal(const SSpacePtr& x) { return diagonal_with_provenance(x).obj; }

DiagonalResult diagonal_with_provenance(const SSpacePtr& x) {
    int D = std::min(x->outer_dim, x->inner_dim());
    TableSSet t;
    t.trunc_dim = D;
    t.count.resize(D + 1);
    t.face.assign(D + 1, {});
    t.degen.assign(D + 1, {});
    for (int d = 0; d <= D; ++d) t.count[d] = x->level[d]->elem_count(d);
    for (int d = 1; d <= D; ++d) {
        t.face[d].assign(d + 1, std::vector<int>(t.count[d]));
        for (int i = 0; i <= d; ++i)
            for (int e = 0; e < t.count[d]; ++e) {
                Expr outer = x->face[d][i](x->level[d]->elems[d][e]);
                Expr inner = x->level[d - 1]->face_of(outer, i);
                t.face[d][i][e] = x->level[d - 1]->index_of(inner);
            }
    }
    for (int d = 0; d < D; ++d) {
        t.degen[d].assign(d + 1, std::vector<int>(t.count[d]));
        for (int i = 0; i <= d; ++i)
            for (int e = 0; e < t.count[d]; ++e) {
                Expr outer = x->degen[d][i](x->level[d]->elems[d][e]);
                Expr inner = SSet::degen_of(outer, i);
                t.degen[d][i][e] = x->level[d + 1]->index_of(inner);
            }
    }
    Normalized n = normalize_table(t, [&](int d, int e) {
        return "diag(" + x->level[d]->expr_string(x->level[d]->elems[d][e]) + ")";
    });
    DiagonalResult out;
    out.obj = n.sset;
    out.expr_of_level_elem = std::move(n.expr_of);
    return out;
}

// --- homotopy category -----------------------------------------------------------------

namespace {

struct HoBuild {
    Product pairs;          // X_0 x X_0
    SMap endpoints;         // X_1 -> X_0 x X_0 via (source, target)
    SSetPtr pt;
};

HoBuild ho_build(const SSpace& x) {
    HoBuild hb{product(x.level[0], x.level[0]), {}, discrete_sset({"*"}, x.inner_dim())};
    hb.endpoints = hb.pairs.tuple(x.face[1][1], x.face[1][0]);
    return hb;
}

}  // namespace

bool HoCat::invertible(int x, int y, int cls) const {
    auto ity = hom.find({y, x});
    if (ity == hom.end()) return false;
    for (int b = 0; b < ity->second.comps.count; ++b) {
        auto left = comp.find({x, y, x, cls, b});
        auto right = comp.find({y, x, y, b, cls});
        if (left == comp.end() || right == comp.end()) continue;
        if (left->second == ident.at(x) && right->second == ident.at(y)) return true;
    }
    return false;
}

HoCat ho_category(const SSpacePtr& x) {
    if (x->outer_dim < 2) throw std::invalid_argument("ho_category: needs outer dimension >= 2");
    HoCat ho;
    const SSetPtr& X0 = x->level[0];
    const SSetPtr& X1 = x->level[1];
    HoBuild hb = ho_build(*x);
    int nv = X0->elem_count(0);
    for (int v = 0; v < nv; ++v) ho.objects.push_back(X0->elems[0][v]);
    std::vector<std::vector<FiberProduct>> fp(nv, std::vector<FiberProduct>(nv));
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) {
            Expr pv = hb.pairs.pair(X0->elems[0][a], X0->elems[0][b]);
            SMap vmap = constant_map(hb.pt, hb.pairs.obj, pv);
            fp[a][b] = fiber_product(hb.endpoints, vmap);
            HoCat::HomFiber hf;
            hf.fiber.obj = fp[a][b].obj;
            hf.fiber.include = fp[a][b].p1;
            hf.fiber.expr_in_sub.resize(X1->trunc_dim + 1);
            for (const auto& [key, val] : fp[a][b].pair_index[0])
                hf.fiber.expr_in_sub[0][key.first] = val;
            for (int m = 1; m <= X1->trunc_dim; ++m)
                for (const auto& [key, val] : fp[a][b].pair_index[m])
                    hf.fiber.expr_in_sub[m][key.first] = val;
            hf.comps = hf.fiber.obj->empty() ? Pi0{} : pi0(hf.fiber.obj);
            ho.hom[{a, b}] = std::move(hf);
        }
    auto endpoint = [&](const SMap& m, const Expr& arrowV) { return X0->index_of(m(arrowV)); };
    const SMap& src = x->face[1][1];
    const SMap& tgt = x->face[1][0];
    auto class_of = [&](int a, int b, const Expr& arrowV) {
        const auto& hf = ho.hom.at({a, b});
        Expr inFiber = hf.fiber.expr_in_sub[0].at(arrowV);
        return hf.comps.component_of(*hf.fiber.obj, inFiber);
    };
    // identities
    for (int v = 0; v < nv; ++v)
        ho.ident[v] = class_of(v, v, x->degen[0][0](X0->elems[0][v]));
    // composition by first-found 2-simplex fillers, canonical element order
    const SSetPtr& X2 = x->level[2];
    for (int tI = 0; tI < X2->elem_count(0); ++tI) {
        Expr tv = X2->elems[0][tI];
        Expr f = x->face[2][2](tv);
        Expr g = x->face[2][0](tv);
        Expr c = x->face[2][1](tv);
        int a = endpoint(src, f), b = endpoint(tgt, f), d = endpoint(tgt, g);
        auto key = std::make_tuple(a, b, d, class_of(a, b, f), class_of(b, d, g));
        if (!ho.comp.count(key)) ho.comp[key] = class_of(a, d, c);
    }
    // the table must cover every composable pair of components
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            for (int d = 0; d < nv; ++d) {
                int nab = ho.hom.at({a, b}).comps.count;
                int nbd = ho.hom.at({b, d}).comps.count;
                for (int i = 0; i < nab; ++i)
                    for (int j = 0; j < nbd; ++j)
                        if (!ho.comp.count({a, b, d, i, j}))
                            throw MissingFiller(
                                "no 2-simplex composes arrow component " + std::to_string(i) +
                                " of hom(" + std::to_string(a) + "," + std::to_string(b) +
                                ") with component " + std::to_string(j) + " of hom(" +
                                std::to_string(b) + "," + std::to_string(d) + ")");
            }
    // unit and associativity laws on the finished table
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) {
            int nab = ho.hom.at({a, b}).comps.count;
            for (int i = 0; i < nab; ++i) {
                if (ho.comp.at({a, a, b, ho.ident[a], i}) != i)
                    throw MissingFiller("left unit law fails in Ho");
                if (ho.comp.at({a, b, b, i, ho.ident[b]}) != i)
                    throw MissingFiller("right unit law fails in Ho");
            }
        }
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            for (int c = 0; c < nv; ++c)
                for (int d = 0; d < nv; ++d) {
                    int nab = ho.hom.at({a, b}).comps.count;
                    int nbc = ho.hom.at({b, c}).comps.count;
                    int ncd = ho.hom.at({c, d}).comps.count;
                    for (int i = 0; i < nab; ++i)
                        for (int j = 0; j < nbc; ++j)
                            for (int k = 0; k < ncd; ++k) {
                                int left = ho.comp.at({a, c, d, ho.comp.at({a, b, c, i, j}), k});
                                int right = ho.comp.at({a, b, d, i, ho.comp.at({b, c, d, j, k})});
                                if (left != right)
                                    throw MissingFiller("filler composition is not associative");
                            }
                }
    return ho;
}

HoEquiv hoequiv(const SSpacePtr& x) {
    HoCat ho = ho_category(x);
    const SSetPtr& X0 = x->level[0];
    const SSetPtr& X1 = x->level[1];
    HoEquiv out;
    out.arrow_pi0 = pi0(X1);
    const SMap& src = x->face[1][1];
    const SMap& tgt = x->face[1][0];
    for (int c = 0; c < out.arrow_pi0.count; ++c) {
        bool all_invertible = true;
        for (int v = 0; v < X1->elem_count(0) && all_invertible; ++v) {
            if (out.arrow_pi0.component_of_vertex[v] != c) continue;
            Expr arrow = X1->elems[0][v];
            int a = X0->index_of(src(arrow));
            int b = X0->index_of(tgt(arrow));
            const auto& hf = ho.hom.at({a, b});
            int cls = hf.comps.component_of(*hf.fiber.obj, hf.fiber.expr_in_sub[0].at(arrow));
            if (!ho.invertible(a, b, cls)) all_invertible = false;
        }
        if (all_invertible) out.components.push_back(c);
    }
    out.sub = components_subobject(X1, out.arrow_pi0, out.components);
    out.degeneracy_factor = out.sub.corestrict(x->degen[0][0]);
    return out;
}

Pi0ModEquiv pi0_mod_equiv(const SSpacePtr& x) {
    HoEquiv he = hoequiv(x);
    const SSetPtr& X0 = x->level[0];
    const SSetPtr& X1 = x->level[1];
    Pi0ModEquiv out;
    out.vertex_pi0 = pi0(X0);
    std::vector<int> parent(out.vertex_pi0.count);
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    std::set<int> in_equiv(he.components.begin(), he.components.end());
    for (int v = 0; v < X1->elem_count(0); ++v) {
        if (!in_equiv.count(he.arrow_pi0.component_of_vertex[v])) continue;
        Expr arrow = X1->elems[0][v];
        int a = out.vertex_pi0.component_of(*X0, x->face[1][1](arrow));
        int b = out.vertex_pi0.component_of(*X0, x->face[1][0](arrow));
        int ra = find(a), rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    out.class_of_component.assign(out.vertex_pi0.count, -1);
    std::vector<int> label(out.vertex_pi0.count, -1);
    for (int c = 0; c < out.vertex_pi0.count; ++c) {
        int root = find(c);
        if (label[root] < 0) label[root] = out.count++;
        out.class_of_component[c] = label[root];
    }
    return out;
}

Certificate completeness_check(const SSpacePtr& x, int hom_bound) {
    HoEquiv he = hoequiv(x);
    CertOptions opts;
    opts.hom_bound = hom_bound;
    opts.candidate = he.degeneracy_factor;
    return certify_equivalence(x->level[0], he.sub.obj, opts);
}

// --- Dwyer-Kan ---------------------------------------------------------------------------

namespace {

int tier_severity(Tier t) {
    switch (t) {
        case Tier::ISO: return 0;
        case Tier::STRONG: return 1;
        case Tier::HOMOLOGICAL: return 2;
        case Tier::UNKNOWN: return 3;
        case Tier::FAILED: return 4;
    }
    return 4;
}

}  // namespace

DKResult dk_check(const SSMap& f, int hom_bound) {
    const SSpacePtr& X = f.src;
    const SSpacePtr& Y = f.dst;
    DKResult out;
    HoBuild hx = ho_build(*X);
    HoBuild hy = ho_build(*Y);
    const SSetPtr& X0 = X->level[0];
    const SSetPtr& Y0 = Y->level[0];
    int nv = X0->elem_count(0);
    std::vector<std::pair<int, int>> vertex_pairs;
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b) vertex_pairs.push_back({a, b});
    std::vector<Certificate> certs(vertex_pairs.size());
#ifdef CATKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t idx = 0; idx < vertex_pairs.size(); ++idx) {
        auto [a, b] = vertex_pairs[idx];
        Expr va = X0->elems[0][a], vb = X0->elems[0][b];
        Expr wa = f.level[0](va), wb = f.level[0](vb);
        FiberProduct fa = fiber_product(hx.endpoints, constant_map(hx.pt, hx.pairs.obj,
                                                                   hx.pairs.pair(va, vb)));
        FiberProduct fb = fiber_product(hy.endpoints, constant_map(hy.pt, hy.pairs.obj,
                                                                   hy.pairs.pair(wa, wb)));
        SMap cand = map_from_elem_images(fa.obj, fb.obj, [&](int d, const Expr& nd) {
            Expr amb = fa.p1.assign[d][nd.base];
            return fb.pair_index[d].at({f.level[1](amb), fb.g.src->elems[d][0]});
        });
        CertOptions opts;
        opts.hom_bound = hom_bound;
        opts.candidate = cand;
        certs[idx] = certify_equivalence(fa.obj, fb.obj, opts);
    }
    out.fully_faithful = true;
    for (size_t idx = 0; idx < vertex_pairs.size(); ++idx) {
        out.ff_fibers[vertex_pairs[idx]] = certs[idx];
        if (tier_severity(certs[idx].tier) > tier_severity(out.ff_tier))
            out.ff_tier = certs[idx].tier;
        if (!certs[idx].passed()) out.fully_faithful = false;
    }
    Pi0ModEquiv py = pi0_mod_equiv(Y);
    std::vector<char> hit(py.count, 0);
    for (int v = 0; v < X0->elem_count(0); ++v)
        hit[py.class_of_vertex(*Y0, f.level[0](X0->elems[0][v]))] = 1;
    out.essentially_surjective = true;
    for (int c = 0; c < py.count; ++c)
        if (!hit[c]) {
            out.essentially_surjective = false;
            for (int v = 0; v < Y0->elem_count(0); ++v)
                if (py.class_of_vertex(*Y0, Y0->elems[0][v]) == c) {
                    out.es_witness = "class of vertex " + Y0->ids[0][Y0->elems[0][v].base] +
                                     " has no preimage";
                    break;
                }
            break;
        }
    out.dk = out.fully_faithful && out.essentially_surjective;
    return out;
}

// --- homotopy cartesian probe ---------------------------------------------------------------

HCResult homotopy_cartesian_probe(const SquareOfMaps& sq, int fib_bound, int hom_bound) {
    if (!(compose(sq.right, sq.top) == compose(sq.bottom, sq.left)))
        throw std::invalid_argument("homotopy_cartesian_probe: square does not commute");
    HCResult out;
    out.leg = kan_fibration_probe(sq.right, fib_bound);
    if (!out.leg.pass) {
        out.status = HCStatus::InconclusiveLeg;
        out.cert.tier = Tier::UNKNOWN;
        out.cert.note = "right leg failed the fibration probe; strict pullback not trusted";
        return out;
    }
    FiberProduct fp = fiber_product(sq.right, sq.bottom);
    SMap comparison = fp.tuple(sq.top, sq.left);
    CertOptions opts;
    opts.hom_bound = hom_bound;
    opts.candidate = comparison;
    out.cert = certify_equivalence(sq.top.src, fp.obj, opts);
    return out;
}

}  // namespace catkit
