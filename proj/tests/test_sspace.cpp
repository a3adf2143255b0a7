#include "doctest.h"

#include "catkit/homology.hpp"
#include "catkit/sspace.hpp"

using namespace catkit;

TEST_CASE("F(0) is a point in every level") {
    auto f0 = make_F(0, 3, 2);
    CHECK(validate_sspace(*f0).ok);
    for (int m = 0; m <= 3; ++m) CHECK(f0->level[m]->dim_count(0) == 1);
}

TEST_CASE("levels of F(1) count the order-preserving maps") {
    auto f1 = make_F(1, 3, 2);
    CHECK(validate_sspace(*f1).ok);
    // oracle: monotone maps [m] -> [1] are the m+2 threshold sequences
    for (int m = 0; m <= 3; ++m) CHECK(f1->level[m]->dim_count(0) == m + 2);
    CHECK(f1->level[2]->dim_count(0) == 4);
}

TEST_CASE("levels of E double") {
    auto e = make_E(3, 2);
    CHECK(validate_sspace(*e).ok);
    CHECK(e->level[0]->dim_count(0) == 2);
    CHECK(e->level[1]->dim_count(0) == 4);
    CHECK(e->level[2]->dim_count(0) == 8);
    CHECK(e->level[3]->dim_count(0) == 16);
}

TEST_CASE("G(n) is the spine of F(n)") {
    auto g2 = make_G(2, 3, 2);
    CHECK(validate_sspace(*g2.g).ok);
    CHECK(validate_ssmap(g2.include).ok);
    // two intervals glued at a point: 2(m+2) - 1 points in level m
    for (int m = 0; m <= 3; ++m) CHECK(g2.g->level[m]->dim_count(0) == 2 * (m + 2) - 1);
    // the nondegenerate outer 2-cell of F(2) has no preimage in the spine
    CHECK(g2.f->level[2]->find_id(0, "012"));
    CHECK(!g2.g->level[2]->find_id(0, "012"));

    auto g1 = make_G(1, 2, 1);
    for (int m = 0; m <= 2; ++m)
        CHECK(g1.g->level[m]->dim_count(0) == g1.f->level[m]->dim_count(0));
    for (int m = 0; m <= 2; ++m) CHECK(is_iso(g1.include.level[m]));
}

TEST_CASE("representability of F(n) and G(n) by raw enumeration") {
    auto e = make_E(3, 1);
    auto g2 = make_G(2, 3, 1);
    std::vector<SSpacePtr> corpus = {e, g2.g, make_F(1, 3, 1)};
    for (const auto& x : corpus) {
        for (int n = 0; n <= 2; ++n) {
            auto f = make_F(n, 3, 1);
            auto en = enumerate_ssmaps(f, x);
            REQUIRE(en.complete);
            CHECK(en.maps.size() == static_cast<size_t>(x->level[n]->dim_count(0)));
        }
        // Hom(G(2), X) = level-1 points composable over level-0 points
        auto g = make_G(2, 3, 1);
        auto en = enumerate_ssmaps(g.g, x);
        REQUIRE(en.complete);
        const SMap& src = x->face[1][1];
        const SMap& tgt = x->face[1][0];
        int pairs = 0;
        for (const Expr& a : x->level[1]->elems[0])
            for (const Expr& b : x->level[1]->elems[0])
                if (tgt(a) == src(b)) ++pairs;
        CHECK(en.maps.size() == static_cast<size_t>(pairs));
    }
}

TEST_CASE("the Segal maps of E are isomorphisms") {
    auto e = make_E(3, 2);
    for (int n = 1; n <= 3; ++n) {
        SegalMap sm = segal_map(e, n);
        CHECK(validate_smap(sm.map).ok);
        CHECK(is_iso(sm.map));
    }
}

TEST_CASE("outer operator against direct computation on E") {
    auto e = make_E(3, 1);
    SMap edge02 = outer_op(*e, {0, 2}, 2);
    for (const Expr& v : e->level[2]->elems[0]) {
        std::string name = e->level[2]->ids[0][v.base];
        std::string expect{name[0], name[2]};
        CHECK(e->level[1]->ids[0][edge02(v).base] == expect);
    }
}

TEST_CASE("latching objects") {
    auto e = make_E(3, 2);
    SUBCASE("r = 0 is empty") {
        Latching l = latching(e, 0);
        CHECK(l.obj->empty());
    }
    SUBCASE("r = 1 of a constant space is the object itself") {
        auto k = boundary_simplex(2, 2);
        auto c = constant_sspace(k, 2);
        Latching l = latching(c, 1);
        CHECK(is_iso(l.to_level));
    }
    SUBCASE("r = 2 of E hits the six degenerate triples") {
        Latching l = latching(e, 2);
        CHECK(l.obj->dim_count(0) == 6);
        CHECK(is_injective(l.to_level));
    }
    SUBCASE("latching maps are injective across the corpus") {
        auto g2 = make_G(2, 3, 2);
        for (const auto& x : {e, g2.g, make_F(2, 3, 2)})
            for (int r = 0; r <= x->outer_dim; ++r) CHECK(is_injective(latching(x, r).to_level));
    }
}

TEST_CASE("diagonal of a constant space is the underlying object") {
    auto k = boundary_simplex(2, 2);
    auto d = diagonal(constant_sspace(k, 2));
    for (int m = 0; m <= 2; ++m) CHECK(d->dim_count(m) == k->dim_count(m));
    auto c = certify_equivalence(d, k);
    CHECK(c.tier == Tier::ISO);
}

TEST_CASE("diagonal of E is the chaotic object, with trivial homology") {
    auto e = make_E(3, 3);
    auto d = diagonal(e);
    auto reference = chaotic_sset(2, 3);
    for (int m = 0; m <= 3; ++m) CHECK(d->dim_count(m) == reference->dim_count(m));
    auto H = homology(d, 2);
    CHECK(H[0].rank == 1);
    CHECK(H[1].rank == 0);
    CHECK(H[1].torsion.empty());
    CHECK(H[2].rank == 0);
    CHECK(H[2].torsion.empty());
}

TEST_CASE("Ho(E) is the chaotic groupoid on two objects") {
    auto e = make_E(2, 2);
    HoCat ho = ho_category(e);
    REQUIRE(ho.objects.size() == 2);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            CHECK(ho.hom_size(a, b) == 1);
            CHECK(ho.invertible(a, b, 0));
        }
}

TEST_CASE("hoequiv of E is all of level one") {
    auto e = make_E(2, 2);
    HoEquiv he = hoequiv(e);
    CHECK(he.arrow_pi0.count == 4);
    CHECK(he.components.size() == 4);
    CHECK(validate_smap(he.degeneracy_factor).ok);
}

TEST_CASE("pi0 mod equivalence") {
    auto e = make_E(2, 2);
    CHECK(pi0_mod_equiv(e).count == 1);
    auto two = constant_sspace(discrete_sset({"a", "b"}, 2), 2);
    CHECK(pi0_mod_equiv(two).count == 2);
}

TEST_CASE("completeness: F(0) passes, E fails with the 2-vs-4 obstruction") {
    auto f0 = make_F(0, 2, 2);
    auto cert = completeness_check(f0, 1);
    CHECK(cert.tier == Tier::ISO);

    auto e = make_E(2, 2);
    auto bad = completeness_check(e, 1);
    CHECK(bad.tier == Tier::FAILED);
    CHECK(bad.obstruction.find("2 vs 4") != std::string::npos);
}

static SSMap point_into_E(const SSpacePtr& f0, const SSpacePtr& e) {
    SSMap inc{f0, e, {}};
    for (int m = 0; m <= f0->outer_dim; ++m) {
        std::string zeros(m + 1, '0');
        inc.level.push_back(map_from_elem_images(
            f0->level[m], e->level[m],
            [&](int, const Expr&) { return Expr{0, *e->level[m]->find_id(0, zeros), {}}; }));
    }
    return inc;
}

TEST_CASE("dk_check on the fixed suite") {
    auto e = make_E(2, 2);
    SUBCASE("identity is a Dwyer-Kan equivalence") {
        DKResult r = dk_check(identity_ssmap(e), 1);
        CHECK(r.dk);
        CHECK(r.ff_tier == Tier::ISO);
    }
    SUBCASE("the point includes DK-equivalently into E") {
        auto f0 = make_F(0, 2, 2);
        SSMap inc = point_into_E(f0, e);
        REQUIRE(validate_ssmap(inc).ok);
        DKResult r = dk_check(inc, 1);
        CHECK(r.fully_faithful);
        CHECK(r.essentially_surjective);
        CHECK(r.dk);
    }
    SUBCASE("two points into E fail full faithfulness") {
        auto two = constant_sspace(discrete_sset({"a", "b"}, 2), 2);
        SSMap inc{two, e, {}};
        for (int m = 0; m <= 2; ++m) {
            std::string zeros(m + 1, '0'), ones(m + 1, '1');
            inc.level.push_back(map_from_elem_images(
                two->level[m], e->level[m], [&](int, const Expr& nd) {
                    bool isA = two->level[m]->ids[0][nd.base] == "a";
                    return Expr{0, *e->level[m]->find_id(0, isA ? zeros : ones), {}};
                }));
        }
        REQUIRE(validate_ssmap(inc).ok);
        DKResult r = dk_check(inc, 1);
        CHECK(!r.fully_faithful);
        CHECK(r.essentially_surjective);
        CHECK(!r.dk);
        // the obstruction is an empty fiber against a point
        bool empty_vs_point = false;
        for (auto& [pair, cert] : r.ff_fibers)
            if (cert.tier == Tier::FAILED && cert.obstruction.find("0 vs 1") != std::string::npos)
                empty_vs_point = true;
        CHECK(empty_vs_point);
    }
}

TEST_CASE("homotopy cartesian probe") {
    auto pt = standard_simplex(0, 2);
    SUBCASE("identity square is certified ISO") {
        auto x = boundary_simplex(2, 2);
        SquareOfMaps sq{identity_map(x), identity_map(x), identity_map(x), identity_map(x)};
        HCResult r = homotopy_cartesian_probe(sq, 2, 1);
        CHECK(r.status == HCStatus::Certified);
        CHECK(r.cert.tier == Tier::ISO);
    }
    SUBCASE("empty corner over a point pullback fails") {
        auto nothing = empty_sset(2);
        SMap from_empty{nothing, pt, std::vector<std::vector<Expr>>(3)};
        SquareOfMaps sq{from_empty, from_empty, identity_map(pt), identity_map(pt)};
        HCResult r = homotopy_cartesian_probe(sq, 2, 1);
        CHECK(r.status == HCStatus::Certified);
        CHECK(r.cert.tier == Tier::FAILED);
        CHECK(r.cert.obstruction.find("pi0") != std::string::npos);
    }
    SUBCASE("a non-fibration leg is reported inconclusive") {
        auto d1 = standard_simplex(1, 2);
        SquareOfMaps sq{identity_map(d1), terminal_map(d1, pt), terminal_map(d1, pt),
                        identity_map(pt)};
        HCResult r = homotopy_cartesian_probe(sq, 2, 1);
        CHECK(r.status == HCStatus::InconclusiveLeg);
        CHECK(r.cert.tier == Tier::UNKNOWN);
        CHECK(!r.leg.pass);
    }
}
