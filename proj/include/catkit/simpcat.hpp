#pragma once

#include "catkit/icat.hpp"
#include "catkit/presheaf.hpp"

namespace catkit {

/// A simplicially enriched category with a finite discrete object set.
struct SimpCat {
    std::vector<std::string> objects;
    std::map<std::pair<int, int>, SSetPtr> maps;             // map(x, y)
    std::map<std::tuple<int, int, int>, SMap> comp;          // map(x,y) x map(y,z) -> map(x,z)
    std::map<int, Expr> ident;                               // vertex of map(x, x)

    const SSetPtr& map_space(int x, int y) const { return maps.at({x, y}); }
    std::optional<int> find_object(const std::string& name) const;
};
using SimpCatPtr = std::shared_ptr<const SimpCat>;

/// Builds the composition products; comp_fn(x, y, z, product, target space)
/// must return the composition map out of product(map(x,y), map(y,z)).
SimpCatPtr make_simpcat(
    const std::vector<std::string>& objects,
    const std::function<SSetPtr(int, int)>& map_fn,
    const std::function<Expr(int)>& ident_fn,
    const std::function<SMap(int, int, int, const Product&, const SSetPtr&)>& comp_fn);

ValidationReport validate_simpcat(const SimpCat& c);

/// Ordinary category as a simplicial category with discrete mapping spaces.
SimpCatPtr simpcat_from_fincat(const FinCat& f, int D);

/// The internalization: Ob discrete on the object set, Ar the coproduct of
/// the mapping spaces.
ICatPtr internalize(const SimpCatPtr& c);

/// Ho(C): pi0 applied to each mapping space.
FinCat ho_of_simpcat(const SimpCatPtr& c);

/// Both routes to "f is an equivalence": invertibility of its class in Ho(C)
/// and membership of its image component in hoequiv(N Int C).
struct EquivalenceDetectionReport {
    bool ho_invertible = false;
    bool in_hoequiv = false;
    bool agree = false;
    bool advisory = false;  // a mapping space failed its Kan probe
};
EquivalenceDetectionReport equivalence_detection_check(const SimpCatPtr& c, int x, int y,
                                                       const Expr& f_vertex, int probe_dim);

/// Grothendieck construction data: a simplicial presheaf on C.
struct GrData {
    SimpCatPtr base;
    std::vector<SSetPtr> value;                       // F(x) per object
    std::map<std::pair<int, int>, SMap> action;       // F(x) x map(x,y) -> F(y)
};
ValidationReport validate_grdata(const GrData& f);
/// Gr(F) with objects the disjoint union of the values and arrows the tagged
/// pairs; source is the projection, target the action.
ICatPtr grothendieck(const GrData& f);

/// A map of simplicial categories.
struct SimpCatMap {
    SimpCatPtr src, dst;
    std::vector<int> on_objects;
    std::map<std::pair<int, int>, SMap> on_maps;  // map(x,y) -> map(fx,fy)
};
ValidationReport validate_simpcat_map(const SimpCatMap& f);
SimpCatMap simpcat_map_from_functor(const SimpCatPtr& b, const SimpCatPtr& c, const Functor& f,
                                    const FinCat& bf, const FinCat& cf);

/// Int on morphisms.
ICatMap internalize_map(const SimpCatMap& f);

/// The simplicial-category Dwyer-Kan data checked against dk_check on the
/// nerves of the internalizations.
struct IntDKReport {
    bool simp_ff = false, simp_es = false, simp_dk = false;
    DKResult internal;
    bool agree = false;
    bool advisory = false;
    std::map<std::pair<int, int>, Certificate> map_certs;
};
IntDKReport int_reflects_dk_check(const SimpCatMap& f, int hom_bound, int probe_dim);

/// The natural comparison Ho(C)/iso -> pi0(Ob(Int C))/~ must be a bijection.
bool int_ho_comparison_check(const SimpCatPtr& c);

}  // namespace catkit
