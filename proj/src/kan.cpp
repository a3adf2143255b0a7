#include "catkit/kan.hpp"

#include <map>
#include <set>

#ifdef CATKIT_HAVE_OPENMP
#include <omp.h>
#endif

namespace catkit {

namespace {

struct LocalWitness {
    std::vector<int> faces;  // indices into src elems[m-1], in position order
    int base = -1;           // index into dst elems[m]
};

struct HornContext {
    const SSet* X;
    const SSet* Y;
    int m, k;
    std::vector<int> pos;                      // [0..m] minus k
    std::set<std::vector<int>> lift_keys;      // (faces at pos..., p(z))
    std::map<std::vector<int>, std::vector<int>> base_by_key;  // p(f_i) faces -> bases
};

HornContext make_context(const SMap& p, int m, int k) {
    HornContext ctx;
    ctx.X = p.src.get();
    ctx.Y = p.dst.get();
    ctx.m = m;
    ctx.k = k;
    for (int i = 0; i <= m; ++i)
        if (i != k) ctx.pos.push_back(i);
    for (int z = 0; z < ctx.X->elem_count(m); ++z) {
        std::vector<int> key;
        key.reserve(m + 1);
        for (int i : ctx.pos) key.push_back(ctx.X->eface[m][i][z]);
        key.push_back(ctx.Y->index_of(p(ctx.X->elems[m][z])));
        ctx.lift_keys.insert(std::move(key));
    }
    for (int y = 0; y < ctx.Y->elem_count(m); ++y) {
        std::vector<int> key;
        key.reserve(m);
        for (int i : ctx.pos) key.push_back(ctx.Y->eface[m][i][y]);
        ctx.base_by_key[std::move(key)].push_back(y);
    }
    return ctx;
}

/// Enumerates horn families whose first chosen face is `first`, in
/// lexicographic order; returns the first unsolvable problem if any.
std::optional<LocalWitness> probe_branch(const HornContext& ctx, const SMap& p, int first,
                                         std::uint64_t& problems) {
    const SSet& X = *ctx.X;
    const SSet& Y = *ctx.Y;
    int m = ctx.m;
    std::vector<int> faces(ctx.pos.size());
    faces[0] = first;
    std::optional<LocalWitness> found;
    std::function<void(size_t)> rec = [&](size_t s) {
        if (found) return;
        if (s == ctx.pos.size()) {
            std::vector<int> im_key;
            im_key.reserve(m);
            for (size_t t = 0; t < ctx.pos.size(); ++t)
                im_key.push_back(Y.index_of(p(X.elems[m - 1][faces[t]])));
            auto it = ctx.base_by_key.find(im_key);
            if (it == ctx.base_by_key.end()) return;
            for (int y : it->second) {
                ++problems;
                std::vector<int> lift_key(faces.begin(), faces.end());
                lift_key.push_back(y);
                if (!ctx.lift_keys.count(lift_key)) {
                    found = LocalWitness{faces, y};
                    return;
                }
            }
            return;
        }
        int j = ctx.pos[s];
        for (int cand = 0; cand < X.elem_count(m - 1) && !found; ++cand) {
            bool ok = true;
            for (size_t t = 0; t < s && ok; ++t) {
                int i = ctx.pos[t];
                // d_i f_j = d_{j-1} f_i for i < j
                if (m >= 2 && X.eface[m - 1][i][cand] != X.eface[m - 1][j - 1][faces[t]]) ok = false;
            }
            if (!ok) continue;
            faces[s] = cand;
            rec(s + 1);
        }
    };
    rec(1);
    return found;
}

HornWitness to_witness(const HornContext& ctx, const LocalWitness& lw) {
    HornWitness w;
    w.m = ctx.m;
    w.k = ctx.k;
    for (int f : lw.faces) w.faces.push_back(ctx.X->elems[ctx.m - 1][f]);
    w.base = ctx.Y->elems[ctx.m][lw.base];
    return w;
}

}  // namespace

ProbeResult kan_fibration_probe_serial(const SMap& p, int max_dim) {
    if (max_dim > p.src->trunc_dim)
        throw std::invalid_argument("kan_fibration_probe: max_dim exceeds truncation");
    ProbeResult out;
    out.max_dim = max_dim;
    for (int m = 1; m <= max_dim; ++m) {
        for (int k = 0; k <= m; ++k) {
            HornContext ctx = make_context(p, m, k);
            // the whole (m, k) level is processed before reporting so the
            // problem count matches the parallel version exactly
            std::optional<LocalWitness> first_fail;
            for (int first = 0; first < p.src->elem_count(m - 1); ++first) {
                auto lw = probe_branch(ctx, p, first, out.problems);
                if (lw && !first_fail) first_fail = lw;
            }
            if (first_fail) {
                out.pass = false;
                out.witness = to_witness(ctx, *first_fail);
                return out;
            }
        }
    }
    return out;
}

ProbeResult kan_fibration_probe(const SMap& p, int max_dim, bool parallel) {
    if (!parallel) return kan_fibration_probe_serial(p, max_dim);
    if (max_dim > p.src->trunc_dim)
        throw std::invalid_argument("kan_fibration_probe: max_dim exceeds truncation");
    ProbeResult out;
    out.max_dim = max_dim;
    for (int m = 1; m <= max_dim; ++m) {
        for (int k = 0; k <= m; ++k) {
            HornContext ctx = make_context(p, m, k);
            int branches = p.src->elem_count(m - 1);
            std::vector<std::optional<LocalWitness>> fail(branches);
            std::uint64_t total = 0;
#ifdef CATKIT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
#endif
            for (int first = 0; first < branches; ++first) {
                std::uint64_t local = 0;
                fail[first] = probe_branch(ctx, p, first, local);
                total += local;
            }
            out.problems += total;
            for (int first = 0; first < branches; ++first) {
                if (fail[first]) {
                    out.pass = false;
                    out.witness = to_witness(ctx, *fail[first]);
                    return out;
                }
            }
        }
    }
    return out;
}

ProbeResult kan_probe(const SSetPtr& x, int max_dim, bool parallel) {
    auto pt = discrete_sset({"*"}, x->trunc_dim);
    return kan_fibration_probe(terminal_map(x, pt), max_dim, parallel);
}

}  // namespace catkit
