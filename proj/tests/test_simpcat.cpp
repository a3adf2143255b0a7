#include "doctest.h"

#include "catkit/simpcat.hpp"

using namespace catkit;

namespace {

/// One object, mapping space the walking isomorphism nerve, composition by max.
SimpCatPtr max_monoid_simpcat(int D) {
    auto e = chaotic_sset(2, D);
    return make_simpcat(
        {"*"}, [&](int, int) { return e; }, [&](int) { return Expr{0, 0, {}}; },
        [&](int, int, int, const Product& p, const SSetPtr& mxz) {
            return map_from_elem_images(p.obj, mxz, [&](int d, const Expr& nd) {
                Expr a = p.p1.assign[d][nd.base];
                Expr b = p.p2.assign[d][nd.base];
                std::vector<int> sa = vertex_sequence(*p.lhs, a);
                std::vector<int> sb = vertex_sequence(*p.rhs, b);
                std::vector<int> img(sa.size());
                for (size_t i = 0; i < sa.size(); ++i) img[i] = std::max(sa[i], sb[i]);
                // rebuild the chaotic simplex from its vertex tuple
                std::vector<int> distinct;
                Word word;
                for (size_t i = 0; i < img.size(); ++i) {
                    if (i + 1 < img.size() && img[i] == img[i + 1])
                        word.push_back(static_cast<int>(i));
                    else
                        distinct.push_back(img[i]);
                }
                std::reverse(word.begin(), word.end());
                std::string base;
                for (int v : distinct) base += std::to_string(v);
                return Expr{static_cast<int>(distinct.size()) - 1,
                            *mxz->find_id(static_cast<int>(distinct.size()) - 1, base), word};
            });
        });
}

}  // namespace

TEST_CASE("simplicial categories from ordinary categories validate") {
    for (auto f : {poset_cat(1), chaotic_groupoid(2)}) {
        auto c = simpcat_from_fincat(f, 2);
        CHECK(validate_simpcat(*c).ok);
    }
    CHECK(validate_simpcat(*max_monoid_simpcat(2)).ok);
}

TEST_CASE("internalize embeds ordinary and enriched categories") {
    SUBCASE("one-object trivial simplicial category is the terminal internal category") {
        auto c = make_simpcat(
            {"*"}, [&](int, int) { return standard_simplex(0, 2); },
            [&](int) { return Expr{0, 0, {}}; },
            [&](int, int, int, const Product& p, const SSetPtr& mxz) {
                return terminal_map(p.obj, mxz);
            });
        auto ic = internalize(c);
        CHECK(validate_icat(*ic).ok);
        CHECK(ic->ob->dim_count(0) == 1);
        CHECK(ic->ar->dim_count(0) == 1);
    }
    SUBCASE("[1] with discrete mapping spaces is the internal [1]") {
        auto c = simpcat_from_fincat(poset_cat(1), 2);
        auto ic = internalize(c);
        CHECK(validate_icat(*ic).ok);
        CHECK(ic->ob->dim_count(0) == 2);
        CHECK(ic->ar->dim_count(0) == 3);
        // object space is discrete by construction
        for (int d = 1; d <= 2; ++d) CHECK(ic->ob->dim_count(d) == 0);
    }
    SUBCASE("the max monoid internalizes to a one-object internal category") {
        auto ic = internalize(max_monoid_simpcat(2));
        CHECK(validate_icat(*ic).ok);
        CHECK(ic->ob->dim_count(0) == 1);
        CHECK(ic->ar->dim_count(0) == 2);  // the two vertices of the walking iso
    }
}

TEST_CASE("Ho of a simplicial category") {
    SUBCASE("discrete mapping spaces give back the category") {
        auto c = simpcat_from_fincat(poset_cat(1), 2);
        FinCat ho = ho_of_simpcat(c);
        std::string why;
        CHECK(validate_fincat(ho, &why));
        CHECK(ho.objects.size() == 2);
        CHECK(ho.arrows.size() == 3);
    }
    SUBCASE("a connected mapping space collapses to one class") {
        FinCat ho = ho_of_simpcat(max_monoid_simpcat(2));
        std::string why;
        CHECK(validate_fincat(ho, &why));
        CHECK(ho.arrows.size() == 1);
    }
    SUBCASE("Ho commutes with disjoint unions on the corpus") {
        auto a = poset_cat(1);
        auto b = chaotic_groupoid(2);
        auto lhs = ho_of_simpcat(simpcat_from_fincat(disjoint_union(a, b), 2));
        auto ra = ho_of_simpcat(simpcat_from_fincat(a, 2));
        auto rb = ho_of_simpcat(simpcat_from_fincat(b, 2));
        CHECK(lhs.arrows.size() == ra.arrows.size() + rb.arrows.size());
        CHECK(lhs.objects.size() == ra.objects.size() + rb.objects.size());
    }
}

TEST_CASE("equivalence detection agrees on both routes") {
    SUBCASE("identity vertices are equivalences") {
        auto c = simpcat_from_fincat(poset_cat(1), 2);
        auto r = equivalence_detection_check(c, 0, 0, c->ident.at(0), 2);
        CHECK(r.ho_invertible);
        CHECK(r.in_hoequiv);
        CHECK(r.agree);
    }
    SUBCASE("chaotic groupoid: everything is an equivalence") {
        auto c = simpcat_from_fincat(chaotic_groupoid(2), 2);
        auto r = equivalence_detection_check(c, 0, 1, Expr{0, 0, {}}, 2);
        CHECK(r.ho_invertible);
        CHECK(r.in_hoequiv);
        CHECK(r.agree);
        CHECK(!r.advisory);
    }
    SUBCASE("[1]: the nonidentity arrow is not an equivalence on either route") {
        auto c = simpcat_from_fincat(poset_cat(1), 2);
        Expr u{0, *c->maps.at({0, 1})->find_id(0, "0<1"), {}};
        auto r = equivalence_detection_check(c, 0, 1, u, 2);
        CHECK(!r.ho_invertible);
        CHECK(!r.in_hoequiv);
        CHECK(r.agree);
    }
    SUBCASE("max monoid: the far vertex is still an equivalence") {
        auto c = max_monoid_simpcat(2);
        Expr one{0, 1, {}};
        auto r = equivalence_detection_check(c, 0, 0, one, 2);
        CHECK(r.ho_invertible);
        CHECK(r.in_hoequiv);
        CHECK(r.agree);
        CHECK(!r.advisory);
    }
}

TEST_CASE("Grothendieck construction") {
    SUBCASE("terminal values collapse to the internalization") {
        auto c = simpcat_from_fincat(poset_cat(1), 2);
        GrData f;
        f.base = c;
        auto pt = standard_simplex(0, 2);
        f.value = {pt, pt};
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) {
                Product p = product(pt, c->maps.at({x, y}));
                f.action[{x, y}] = terminal_map(p.obj, pt);
            }
        auto gr = grothendieck(f);
        CHECK(validate_icat(*gr).ok);
        auto ic = internalize(c);
        CHECK(gr->ob->dim_count(0) == ic->ob->dim_count(0));
        CHECK(gr->ar->dim_count(0) == ic->ar->dim_count(0));
    }
    SUBCASE("over the point, Gr(F) is the discrete category on F") {
        auto c = simpcat_from_fincat(poset_cat(0), 2);
        GrData f;
        f.base = c;
        auto k = boundary_simplex(2, 2);
        f.value = {k};
        Product p = product(k, c->maps.at({0, 0}));
        f.action[{0, 0}] = p.p1;
        auto gr = grothendieck(f);
        CHECK(validate_icat(*gr).ok);
        for (int d = 0; d <= 2; ++d) {
            CHECK(gr->ob->dim_count(d) == k->dim_count(d));
            CHECK(gr->ar->dim_count(d) == k->dim_count(d));
        }
    }
    SUBCASE("nerve levels count the chains") {
        // c = [1], F(0) = F(1) = point: Gr(F) = [1]; richer: F(0) two points
        auto c = simpcat_from_fincat(poset_cat(1), 2);
        GrData f;
        f.base = c;
        auto two = discrete_sset({"a", "b"}, 2);
        auto pt = standard_simplex(0, 2);
        f.value = {two, pt};
        {
            Product p = product(two, c->maps.at({0, 0}));
            f.action[{0, 0}] = p.p1;
        }
        {
            Product p = product(two, c->maps.at({0, 1}));
            f.action[{0, 1}] = terminal_map(p.obj, pt);
        }
        {
            Product p = product(pt, c->maps.at({1, 0}));
            f.action[{1, 0}] = SMap{p.obj, two, std::vector<std::vector<Expr>>(3)};
        }
        {
            Product p = product(pt, c->maps.at({1, 1}));
            f.action[{1, 1}] = p.p1;
        }
        auto gr = grothendieck(f);
        REQUIRE(validate_icat(*gr).ok);
        // objects: 2 + 1; arrows: 2 id_a/id_b + 2 maps to the point + 1 id
        CHECK(gr->ob->dim_count(0) == 3);
        CHECK(gr->ar->dim_count(0) == 5);
        auto n = nerve(gr, 2);
        // chains of length 2: oracle by summing over vertex paths
        // paths a->a->a, b->b->b, a->a->1, b->b->1, a->1->1, b->1->1, 1->1->1
        CHECK(n->level[2]->dim_count(0) == 7);
        // strongly Segal: all spaces discrete
        CHECK(strongly_segal_check(gr, 2, 2).pass);
    }
}

TEST_CASE("Int preserves and reflects Dwyer-Kan equivalences on the suite") {
    auto pt_cat = simpcat_from_fincat(poset_cat(0), 2);
    auto chaotic = simpcat_from_fincat(chaotic_groupoid(2), 2);
    FinCat pt_f = poset_cat(0);
    FinCat ch_f = chaotic_groupoid(2);
    SUBCASE("identity") {
        Functor id;
        id.on_objects = {0, 1};
        for (size_t a = 0; a < ch_f.arrows.size(); ++a)
            id.on_arrows.push_back(static_cast<int>(a));
        SimpCatMap f = simpcat_map_from_functor(chaotic, chaotic, id, ch_f, ch_f);
        REQUIRE(validate_simpcat_map(f).ok);
        auto r = int_reflects_dk_check(f, 1, 2);
        CHECK(r.simp_dk);
        CHECK(r.internal.dk);
        CHECK(r.agree);
    }
    SUBCASE("point into the walking iso: both routes say DK") {
        Functor inc;
        inc.on_objects = {0};
        inc.on_arrows = {*ch_f.find_arrow("0>0")};
        SimpCatMap f = simpcat_map_from_functor(pt_cat, chaotic, inc, pt_f, ch_f);
        REQUIRE(validate_simpcat_map(f).ok);
        auto r = int_reflects_dk_check(f, 1, 2);
        CHECK(r.simp_dk);
        CHECK(r.internal.dk);
        CHECK(r.agree);
    }
    SUBCASE("two points into the walking iso: both routes say not DK") {
        auto two = simpcat_from_fincat(disjoint_union(poset_cat(0), poset_cat(0)), 2);
        FinCat two_f = disjoint_union(poset_cat(0), poset_cat(0));
        Functor inc;
        inc.on_objects = {0, 1};
        inc.on_arrows = {*ch_f.find_arrow("0>0"), *ch_f.find_arrow("1>1")};
        SimpCatMap f = simpcat_map_from_functor(two, chaotic, inc, two_f, ch_f);
        REQUIRE(validate_simpcat_map(f).ok);
        auto r = int_reflects_dk_check(f, 1, 2);
        CHECK(!r.simp_ff);
        CHECK(!r.simp_dk);
        CHECK(!r.internal.dk);
        CHECK(r.agree);
    }
}

TEST_CASE("the Ho comparison is a bijection on the corpus") {
    CHECK(int_ho_comparison_check(simpcat_from_fincat(poset_cat(1), 2)));
    CHECK(int_ho_comparison_check(simpcat_from_fincat(chaotic_groupoid(2), 2)));
    CHECK(int_ho_comparison_check(simpcat_from_fincat(poset_cat(2), 2)));
    CHECK(int_ho_comparison_check(max_monoid_simpcat(2)));
}
