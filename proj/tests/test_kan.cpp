#include "doctest.h"

#include "catkit/certificate.hpp"
#include "catkit/kan.hpp"

using namespace catkit;

TEST_CASE("identity maps always pass the probe") {
    for (auto x : {standard_simplex(2, 3), boundary_simplex(2, 3), chaotic_sset(2, 3)}) {
        auto r = kan_fibration_probe(identity_map(x), 3);
        CHECK(r.pass);
        CHECK(r.problems > 0);
    }
}

TEST_CASE("Delta[1] -> Delta[0] fails with an outer horn at dimension 2") {
    auto d1 = standard_simplex(1, 2);
    auto pt = standard_simplex(0, 2);
    auto r = kan_fibration_probe(terminal_map(d1, pt), 2);
    REQUIRE(!r.pass);
    REQUIRE(r.witness);
    CHECK(r.witness->m == 2);
    CHECK((r.witness->k == 0 || r.witness->k == 2));  // the interval fills inner horns
}

TEST_CASE("the nerve of a finite groupoid is a Kan complex up to dimension 3") {
    // chaotic groupoid on two objects
    auto e = chaotic_sset(2, 3);
    REQUIRE(e->validate().ok);
    auto r = kan_probe(e, 3);
    CHECK(r.pass);
    // and on three objects, up to dimension 2 to stay quick
    auto e3 = chaotic_sset(3, 2);
    CHECK(kan_probe(e3, 2).pass);
}

TEST_CASE("a poset nerve fills inner horns but not outer ones") {
    auto d2 = standard_simplex(2, 2);
    auto r = kan_probe(d2, 2);
    REQUIRE(!r.pass);
    CHECK((r.witness->k == 0 || r.witness->k == 2));
}

TEST_CASE("serial and parallel probes agree exactly") {
    auto d1 = standard_simplex(1, 2);
    auto pt = standard_simplex(0, 2);
    std::vector<SMap> maps = {identity_map(standard_simplex(2, 3)),
                              terminal_map(d1, pt),
                              terminal_map(chaotic_sset(2, 3), standard_simplex(0, 3))};
    for (const auto& p : maps) {
        auto a = kan_fibration_probe_serial(p, p.src->trunc_dim);
        auto b = kan_fibration_probe(p, p.src->trunc_dim, true);
        CHECK(a.pass == b.pass);
        CHECK(a.problems == b.problems);
        if (a.witness) {
            REQUIRE(b.witness);
            CHECK(a.witness->m == b.witness->m);
            CHECK(a.witness->k == b.witness->k);
            CHECK(a.witness->faces == b.witness->faces);
            CHECK(a.witness->base == b.witness->base);
        }
    }
}

TEST_CASE("certificates: identical objects are ISO") {
    for (auto x : {standard_simplex(1, 2), boundary_simplex(2, 2), chaotic_sset(2, 2)}) {
        auto c = certify_equivalence(x, x);
        CHECK(c.tier == Tier::ISO);
        REQUIRE(c.iso);
        CHECK(validate_smap(*c.iso).ok);
        CHECK(compose(*c.iso_inv, *c.iso) == identity_map(x));
    }
}

TEST_CASE("certificates: contractible interval onto the point is STRONG") {
    auto d1 = standard_simplex(1, 2);
    auto pt = standard_simplex(0, 2);
    CertOptions opts;
    opts.strong = contraction_to_point(d1, pt);
    auto c = certify_equivalence(d1, pt, opts);
    CHECK(c.tier == Tier::STRONG);

    // cross-check: a STRONG verdict forces matching homology up to the bound
    auto hx = homology(d1, 1), hy = homology(pt, 1);
    CHECK(hx == hy);
}

TEST_CASE("certificates: sphere vs point FAILS with a homology obstruction") {
    auto c = certify_equivalence(boundary_simplex(2, 2), standard_simplex(0, 2));
    CHECK(c.tier == Tier::FAILED);
    CHECK(c.obstruction.find("homology") != std::string::npos);
}

TEST_CASE("certificates: pi0 count mismatch is a FAILED obstruction") {
    auto c = certify_equivalence(boundary_simplex(1, 2), standard_simplex(0, 2));
    CHECK(c.tier == Tier::FAILED);
    CHECK(c.obstruction.find("pi0") != std::string::npos);
}

TEST_CASE("certificates: iso-only mode never passes without a witness") {
    CertOptions opts;
    opts.mode = CertMode::IsoOnly;
    auto c = certify_equivalence(standard_simplex(1, 2), standard_simplex(0, 2), opts);
    CHECK(c.tier == Tier::UNKNOWN);
}

TEST_CASE("certificates: exhausted budget downgrades honestly") {
    CertOptions opts;
    opts.iso_budget = 1;
    opts.mode = CertMode::IsoOnly;
    auto a = chaotic_sset(2, 2);
    auto b = chaotic_sset(2, 2);
    auto c = certify_equivalence(a, b, opts);
    CHECK(c.tier == Tier::UNKNOWN);
    CHECK(c.note.find("budget") != std::string::npos);

    opts.mode = CertMode::Auto;
    auto c2 = certify_equivalence(a, b, opts);
    CHECK(c2.tier == Tier::HOMOLOGICAL);  // necessary conditions only
    CHECK(c2.note.find("budget") != std::string::npos);
}

TEST_CASE("certificates: homological tier matches components across a shuffle") {
    Pushout a = coproduct(boundary_simplex(2, 3), standard_simplex(0, 3));
    Pushout b = coproduct(standard_simplex(0, 3), boundary_simplex(2, 3));
    CertOptions opts;
    opts.hom_bound = 1;
    opts.iso_budget = 200;  // force the homological tier for distinct shapes
    auto c = certify_equivalence(a.obj, b.obj, opts);
    CHECK((c.tier == Tier::ISO || c.tier == Tier::HOMOLOGICAL));
    CHECK(c.passed());
}
