#include "catkit/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace catkit {

std::string tier_name(Tier t) {
    switch (t) {
        case Tier::ISO: return "ISO";
        case Tier::STRONG: return "STRONG";
        case Tier::HOMOLOGICAL: return "HOMOLOGICAL";
        case Tier::FAILED: return "FAILED";
        case Tier::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

Cylinder make_cylinder(const SSetPtr& x) {
    auto interval = standard_simplex(1, x->trunc_dim);
    Cylinder c{product(x, interval), {}, {}};
    SMap c0 = constant_map(x, interval, interval->nondeg_expr(0, 0));
    SMap c1 = constant_map(x, interval, interval->nondeg_expr(0, 1));
    c.at0 = c.prod.tuple(identity_map(x), c0);
    c.at1 = c.prod.tuple(identity_map(x), c1);
    return c;
}

IsoSearch search_iso(const SSetPtr& x, const SSetPtr& y, std::uint64_t budget) {
    IsoSearch out;
    int D = x->trunc_dim;
    if (y->trunc_dim != D) throw std::invalid_argument("search_iso: truncation mismatch");
    for (int d = 0; d <= D; ++d)
        if (x->dim_count(d) != y->dim_count(d)) return out;  // complete: no iso possible
    std::vector<std::pair<int, int>> slots;
    for (int d = 0; d <= D; ++d)
        for (int j = 0; j < x->dim_count(d); ++j) slots.push_back({d, j});
    SMap f{x, y, {}};
    f.assign.resize(D + 1);
    for (int d = 0; d <= D; ++d) f.assign[d].resize(x->dim_count(d));
    std::vector<std::vector<char>> used(D + 1);
    for (int d = 0; d <= D; ++d) used[d].assign(y->dim_count(d), 0);
    bool aborted = false;
    std::function<bool(size_t)> rec = [&](size_t s) -> bool {
        if (s == slots.size()) return true;
        auto [d, j] = slots[s];
        for (int t = 0; t < y->dim_count(d); ++t) {
            if (used[d][t]) continue;
            if (++out.tried > budget) {
                aborted = true;
                return false;
            }
            Expr cand{d, t, {}};
            bool ok = true;
            for (int i = 0; d >= 1 && i <= d && ok; ++i)
                if (f(x->nd_face[d][j][i]) != y->nd_face[d][t][i]) ok = false;
            if (!ok) continue;
            f.assign[d][j] = cand;
            used[d][t] = 1;
            if (rec(s + 1)) return true;
            used[d][t] = 0;
            if (aborted) return false;
        }
        return false;
    };
    out.found = rec(0);
    out.exhausted = aborted;
    if (out.found) out.iso = f;
    return out;
}

ValidationReport verify_strong(const SSetPtr& x, const SSetPtr& y, const StrongCandidate& cand) {
    ValidationReport rep;
    auto check = [&](const SMap& m, const char* name) {
        auto r = validate_smap(m);
        if (!r.ok) rep.fail(std::string(name) + " is not a simplicial map: " + r.violations[0]);
    };
    check(cand.f, "f");
    check(cand.g, "g");
    check(cand.H, "H");
    check(cand.K, "K");
    if (!rep.ok) return rep;
    SMap gf = compose(cand.g, cand.f);
    SMap fg = compose(cand.f, cand.g);
    Cylinder cx = make_cylinder(x);
    Cylinder cy = make_cylinder(y);
    SMap h0 = compose(cand.H, cx.at0), h1 = compose(cand.H, cx.at1);
    SMap idx = identity_map(x), idy = identity_map(y);
    bool hx = (h0 == gf && h1 == idx) || (h0 == idx && h1 == gf);
    if (!hx) rep.fail("H does not restrict to {g.f, id} on the cylinder ends");
    SMap k0 = compose(cand.K, cy.at0), k1 = compose(cand.K, cy.at1);
    bool ky = (k0 == fg && k1 == idy) || (k0 == idy && k1 == fg);
    if (!ky) rep.fail("K does not restrict to {f.g, id} on the cylinder ends");
    return rep;
}

StrongCandidate contraction_to_point(const SSetPtr& simplex, const SSetPtr& point) {
    int n = 0;
    while (simplex->find_id(0, std::to_string(n + 1))) ++n;
    StrongCandidate cand;
    cand.f = terminal_map(simplex, point);
    cand.g = constant_map(point, simplex, simplex->nondeg_expr(0, *simplex->find_id(0, std::to_string(n))));
    Cylinder cx = make_cylinder(simplex);
    // H = nerve of the monotone map (a, b) -> (b == 0 ? a : n)
    cand.H = map_from_elem_images(cx.prod.obj, simplex, [&](int d, const Expr& nd) {
        Expr a = cx.prod.p1.assign[d][nd.base];
        Expr b = cx.prod.p2.assign[d][nd.base];
        std::vector<int> sa = vertex_sequence(*simplex, a);
        std::vector<int> sb = vertex_sequence(*cx.prod.p2.dst, b);
        std::vector<int> img(sa.size());
        for (size_t i = 0; i < sa.size(); ++i) img[i] = sb[i] == 0 ? sa[i] : n;
        return simplex_with_vertices(*simplex, img);
    });
    Cylinder cy = make_cylinder(point);
    cand.K = terminal_map(cy.prod.obj, point);
    return cand;
}

namespace {

struct Signature {
    std::vector<AbGroup> groups;
    bool operator==(const Signature&) const = default;
    bool operator<(const Signature& o) const {
        auto key = [](const AbGroup& g) { return std::make_pair(g.rank, g.torsion); };
        return std::lexicographical_compare(
            groups.begin(), groups.end(), o.groups.begin(), o.groups.end(),
            [&](const AbGroup& a, const AbGroup& b) { return key(a) < key(b); });
    }
    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < groups.size(); ++i) {
            if (i) s += ", ";
            s += groups[i].to_string();
        }
        return s + ")";
    }
};

}  // namespace

Certificate certify_equivalence(const SSetPtr& x, const SSetPtr& y, const CertOptions& opts) {
    Certificate cert;
    cert.hom_bound = opts.hom_bound;
    if (opts.candidate) {
        if (is_iso(*opts.candidate)) {
            cert.tier = Tier::ISO;
            cert.iso = *opts.candidate;
            cert.iso_inv = inverse_iso(*opts.candidate);
            cert.note = "comparison map is an isomorphism";
            return cert;
        }
    }
    IsoSearch search = search_iso(x, y, opts.iso_budget);
    if (search.found) {
        cert.tier = Tier::ISO;
        cert.iso = search.iso;
        cert.iso_inv = inverse_iso(search.iso);
        return cert;
    }
    if (search.exhausted) cert.note = "iso search budget exhausted";
    if (opts.strong) {
        auto rep = verify_strong(x, y, *opts.strong);
        if (rep.ok) {
            cert.tier = Tier::STRONG;
            cert.strong = opts.strong;
            return cert;
        }
        cert.note += (cert.note.empty() ? "" : "; ") + std::string("strong witness rejected: ") +
                     rep.violations[0];
    }
    if (opts.mode == CertMode::IsoOnly || opts.hom_bound < 0 || x->trunc_dim < 1) {
        cert.tier = Tier::UNKNOWN;
        if (!search.exhausted && cert.note.empty()) cert.note = "no isomorphism exists; no further tier requested";
        return cert;
    }
    // homological necessary conditions, componentwise
    Pi0 px = pi0(x), py = pi0(y);
    if (px.count != py.count) {
        cert.tier = Tier::FAILED;
        cert.obstruction =
            "pi0 count " + std::to_string(px.count) + " vs " + std::to_string(py.count);
        return cert;
    }
    auto hx = componentwise_homology(x, opts.hom_bound);
    auto hy = componentwise_homology(y, opts.hom_bound);
    std::vector<std::pair<Signature, int>> sx, sy;
    for (int c = 0; c < px.count; ++c) sx.push_back({Signature{hx[c]}, c});
    for (int c = 0; c < py.count; ++c) sy.push_back({Signature{hy[c]}, c});
    std::sort(sx.begin(), sx.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::sort(sy.begin(), sy.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (int c = 0; c < px.count; ++c) {
        if (!(sx[c].first == sy[c].first)) {
            cert.tier = Tier::FAILED;
            cert.obstruction = "componentwise homology mismatch up to degree " +
                               std::to_string(opts.hom_bound) + ": " + sx[c].first.to_string() +
                               " vs " + sy[c].first.to_string();
            return cert;
        }
        cert.pi0_matching.push_back({sx[c].second, sy[c].second});
    }
    std::sort(cert.pi0_matching.begin(), cert.pi0_matching.end());
    cert.tier = Tier::HOMOLOGICAL;
    return cert;
}

}  // namespace catkit
