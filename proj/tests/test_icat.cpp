#include "doctest.h"

#include "catkit/icat.hpp"

using namespace catkit;

TEST_CASE("discrete internal categories validate") {
    auto k = boundary_simplex(2, 2);
    auto c = discrete_icat(k);
    CHECK(validate_icat(*c).ok);
}

TEST_CASE("ordinary categories embed and validate") {
    for (auto f : {poset_cat(1), poset_cat(2), chaotic_groupoid(2),
                   disjoint_union(poset_cat(0), poset_cat(0))}) {
        std::string why;
        REQUIRE(validate_fincat(f, &why));
        auto c = icat_from_fincat(f, 2);
        CHECK(validate_icat(*c).ok);
    }
}

TEST_CASE("a corrupted composition is reported with a witness") {
    // unital magma that is not associative: a.a = b, a.b = a, b.a = e, b.b = b
    SSetPtr ob = discrete_sset({"*"}, 2);
    SSetPtr ar = discrete_sset({"a", "b", "e"}, 2);
    SMap to_ob = terminal_map(ar, ob);
    SMap unit = map_from_elem_images(ob, ar, [&](int, const Expr&) {
        return Expr{0, *ar->find_id(0, "e"), {}};
    });
    auto mul = [&](const std::string& x, const std::string& y) -> std::string {
        if (x == "e") return y;
        if (y == "e") return x;
        if (x == "a" && y == "a") return "b";
        if (x == "a" && y == "b") return "a";
        if (x == "b" && y == "a") return "e";
        return "b";
    };
    auto bad = make_icat(ob, ar, to_ob, to_ob, unit, [&](const FiberProduct& fp) {
        return map_from_elem_images(fp.obj, ar, [&](int d, const Expr& nd) {
            Expr f = fp.p1.assign[d][nd.base];
            Expr g = fp.p2.assign[d][nd.base];
            std::string name = mul(ar->ids[0][f.base], ar->ids[0][g.base]);
            Expr v{0, *ar->find_id(0, name), {}};
            Word w(static_cast<size_t>(d));
            for (int i = 0; i < d; ++i) w[i] = d - 1 - i;
            return Expr{0, v.base, w};
        });
    });
    auto rep = validate_icat(*bad);
    CHECK(!rep.ok);
    bool assoc = false;
    for (auto& v : rep.violations)
        if (v.find("associativity") != std::string::npos) assoc = true;
    CHECK(assoc);
}

TEST_CASE("the nerve of a discrete category is constant") {
    auto k = boundary_simplex(2, 2);
    auto n = nerve(discrete_icat(k), 3);
    CHECK(validate_sspace(*n).ok);
    for (int m = 0; m <= 3; ++m)
        for (int d = 0; d <= 2; ++d) CHECK(n->level[m]->dim_count(d) == k->dim_count(d));
}

TEST_CASE("composable pairs of [1]") {
    auto c = icat_from_fincat(poset_cat(1), 2);
    // oracle: pairs (f, g) with target f = source g, enumerated by hand:
    // (id0,id0), (id0,u), (u,id1), (id1,id1)
    CHECK(c->comp_dom.obj->dim_count(0) == 4);
    auto n = nerve(c, 3);
    CHECK(validate_sspace(*n).ok);
    CHECK(n->level[2]->dim_count(0) == 4);
    CHECK(n->level[3]->dim_count(0) == 5);  // monotone [3] -> [1] chains
}

TEST_CASE("the nerve of the walking isomorphism matches E") {
    auto c = icat_from_fincat(chaotic_groupoid(2), 2);
    auto n = nerve(c, 3);
    auto e = make_E(3, 2);
    CHECK(validate_sspace(*n).ok);
    for (int m = 0; m <= 3; ++m) CHECK(n->level[m]->dim_count(0) == e->level[m]->dim_count(0));
}

TEST_CASE("Segal maps of nerves are isomorphisms") {
    std::vector<ICatPtr> corpus = {icat_from_fincat(poset_cat(1), 2),
                                   icat_from_fincat(poset_cat(2), 2),
                                   icat_from_fincat(chaotic_groupoid(2), 2),
                                   discrete_icat(boundary_simplex(1, 2))};
    for (const auto& c : corpus) {
        auto n = nerve(c, 3);
        for (int k = 1; k <= 3; ++k) CHECK(is_iso(segal_map(n, k).map));
    }
}

TEST_CASE("nerve maps are natural") {
    auto c0 = icat_from_fincat(poset_cat(0), 2);
    auto c1 = icat_from_fincat(poset_cat(1), 2);
    // the functor [0] -> [1] picking the target vertex
    ICatMap f;
    f.src = c0;
    f.dst = c1;
    f.on_ob = map_from_elem_images(c0->ob, c1->ob, [&](int, const Expr&) {
        return Expr{0, *c1->ob->find_id(0, "1"), {}};
    });
    f.on_ar = map_from_elem_images(c0->ar, c1->ar, [&](int, const Expr&) {
        return Expr{0, *c1->ar->find_id(0, "1<1"), {}};
    });
    REQUIRE(validate_icat_map(f).ok);
    SSMap nf = nerve_map(f, 3);
    CHECK(validate_ssmap(nf).ok);
}

TEST_CASE("Ho of a nerve recovers the category") {
    auto n1 = nerve(icat_from_fincat(poset_cat(1), 2), 2);
    HoCat ho = ho_category(n1);
    REQUIRE(ho.objects.size() == 2);
    CHECK(ho.hom_size(0, 0) == 1);
    CHECK(ho.hom_size(0, 1) == 1);
    CHECK(ho.hom_size(1, 0) == 0);
    CHECK(ho.hom_size(1, 1) == 1);
    CHECK(!ho.invertible(0, 1, 0));
}

TEST_CASE("hoequiv of N([1]) is the two identity components") {
    auto n1 = nerve(icat_from_fincat(poset_cat(1), 2), 2);
    HoEquiv he = hoequiv(n1);
    CHECK(he.arrow_pi0.count == 3);
    CHECK(he.components.size() == 2);
    CHECK(pi0_mod_equiv(n1).count == 2);
}

TEST_CASE("completeness on nerves of posets is ISO, on the walking iso FAILED") {
    auto np = nerve(icat_from_fincat(poset_cat(2), 2), 2);
    CHECK(completeness_check(np, 1).tier == Tier::ISO);
    auto ni = nerve(icat_from_fincat(chaotic_groupoid(2), 2), 2);
    auto cert = completeness_check(ni, 1);
    CHECK(cert.tier == Tier::FAILED);
    CHECK(cert.obstruction.find("2 vs 4") != std::string::npos);
}

TEST_CASE("mapping spaces") {
    auto c1 = icat_from_fincat(poset_cat(1), 2);
    SUBCASE("Map(point, D) has the vertices of Ob(D)") {
        auto pt = discrete_icat(standard_simplex(0, 2));
        MappingSpace ms = icat_mapping_space(pt, c1, 1);
        REQUIRE(ms.complete);
        CHECK(static_cast<int>(ms.cells[0].size()) == c1->ob->dim_count(0));
    }
    SUBCASE("Map([1], [1]) has three functors") {
        MappingSpace ms = icat_mapping_space(c1, c1, 1);
        REQUIRE(ms.complete);
        CHECK(ms.cells[0].size() == 3);
        CHECK(ms.obj->validate().ok);
    }
    SUBCASE("Map(C, D x D') = Map(C, D) x Map(C, D')") {
        auto c0 = icat_from_fincat(poset_cat(0), 2);
        auto prod = icat_product(c1, c1);
        MappingSpace lhs = icat_mapping_space(c0, prod, 1);
        MappingSpace a = icat_mapping_space(c0, c1, 1);
        REQUIRE(lhs.complete);
        Product rhs = product(a.obj, a.obj);
        for (int d = 0; d <= 1; ++d) CHECK(lhs.obj->elem_count(d) == rhs.obj->elem_count(d));
    }
}

TEST_CASE("strongly Segal probes") {
    SUBCASE("ordinary categories pass") {
        auto c = icat_from_fincat(poset_cat(2), 2);
        auto rep = strongly_segal_check(c, 2, 3);
        CHECK(rep.pass);
        for (auto& sq : rep.segal_squares) CHECK(sq.cert.tier == Tier::ISO);
    }
    SUBCASE("the interval-arrow monoid fails the source probe") {
        // one object, arrows Delta[1], composition by max
        auto ob = standard_simplex(0, 2);
        auto ar = standard_simplex(1, 2);
        SMap to_ob = terminal_map(ar, ob);
        SMap unit = map_from_elem_images(ob, ar, [&](int, const Expr&) {
            return Expr{0, *ar->find_id(0, "0"), {}};
        });
        auto mx = make_icat(ob, ar, to_ob, to_ob, unit, [&](const FiberProduct& fp) {
            return map_from_elem_images(fp.obj, ar, [&](int d, const Expr& nd) {
                Expr f = fp.p1.assign[d][nd.base];
                Expr g = fp.p2.assign[d][nd.base];
                std::vector<int> sf = vertex_sequence(*ar, f);
                std::vector<int> sg = vertex_sequence(*ar, g);
                std::vector<int> img(sf.size());
                for (size_t i = 0; i < sf.size(); ++i) img[i] = std::max(sf[i], sg[i]);
                return simplex_with_vertices(*ar, img);
            });
        });
        REQUIRE(validate_icat(*mx).ok);
        auto rep = strongly_segal_check(mx, 2, 2);
        CHECK(!rep.pass);
        CHECK(!rep.src_probe.pass);
        REQUIRE(rep.src_probe.witness);
        CHECK(rep.src_probe.witness->m == 2);
    }
}

TEST_CASE("level categories are genuine categories") {
    auto c = icat_from_fincat(chaotic_groupoid(2), 2);
    for (int k = 0; k <= 2; ++k) {
        FinCat lk = level_cat(*c, k);
        std::string why;
        CHECK(validate_fincat(lk, &why));
    }
    auto d = discrete_icat(standard_simplex(1, 2));
    FinCat l1 = level_cat(*d, 1);
    std::string why;
    CHECK(validate_fincat(l1, &why));
    CHECK(l1.objects.size() == 3);  // the three 1-simplices of Delta[1]
}
