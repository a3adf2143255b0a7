#pragma once

#include "catkit/icat.hpp"
#include "catkit/sspace.hpp"

namespace catkit {

/// An internal presheaf: a space over Ob(C) with an exact action of Ar(C).
/// Right modules (variance Right) are the objects of S^C, left modules those
/// of S^{C^op}.
enum class Variance { Right, Left };

struct Presheaf {
    ICatPtr over;
    SSetPtr carrier;
    SMap projection;          // carrier -> Ob(C)
    Variance variance = Variance::Right;
    FiberProduct action_dom;  // Right: carrier x_P Ar along (proj, src)
                              // Left:  Ar x_P carrier along (tgt, proj)
    SMap action;              // action_dom.obj -> carrier
};

/// Assembles the action domain; action_fn must fill in the action map.
Presheaf make_presheaf(const ICatPtr& c, const SSetPtr& carrier, const SMap& projection,
                       Variance v, const std::function<SMap(const FiberProduct&)>& action_fn);

ValidationReport validate_presheaf(const Presheaf& f);

/// Terminal presheaf: carrier Ob(C), projection the identity.
Presheaf terminal_presheaf(const ICatPtr& c, Variance v);

/// Representable h_v in S^{C^op}: arrows with target v, projected by source.
Presheaf representable(const ICatPtr& c, const Expr& vertex);
/// Corepresentable h^p in S^C: arrows with source p, projected by target.
Presheaf corepresentable(const ICatPtr& c, const Expr& vertex);

struct PresheafMap {
    const Presheaf* src = nullptr;
    const Presheaf* dst = nullptr;
    SMap map;
};
ValidationReport validate_presheaf_map(const PresheafMap& f);

/// All presheaf maps f -> g (same variance, same base category).
struct PresheafMapEnumeration {
    std::vector<SMap> maps;
    bool complete = true;
};
PresheafMapEnumeration enumerate_presheaf_maps(const Presheaf& f, const Presheaf& g,
                                               std::uint64_t budget = 50'000'000);

// --- derived Yoneda -----------------------------------------------------------

struct YonedaReport {
    bool ok = true;
    bool advisory = false;  // projection failed the fibration probe
    std::vector<std::string> failures;
    std::vector<int> map_counts;    // |Map(h_v, F)_n| per level
    std::vector<int> fiber_counts;  // |({v} x_P F)_n| per level
};
/// Compares Map(h_v, F) with the strict fiber of F over v, level by level up
/// to `levels`, through the evaluation bijection.
YonedaReport yoneda_check(const ICatPtr& c, const Expr& vertex, const Presheaf& f, int levels,
                          int probe_dim);

// --- the equivalence arrow map -------------------------------------------------

/// f_*: h_{s(f)} -> h_{t(f)} by postcomposition, for a vertex f of Ar(C).
struct ArrowMapResult {
    Presheaf source, target;
    SMap map;
};
ArrowMapResult equivalence_arrow_map(const ICatPtr& c, const Expr& arrow_vertex);

/// Certificates on the strict fibers of a presheaf map over each vertex of a
/// set of representative vertices.
std::map<std::string, Certificate> fiberwise_certificates(const Presheaf& f, const Presheaf& g,
                                                          const SMap& map,
                                                          const std::vector<Expr>& vertices,
                                                          int hom_bound);

// --- bar construction -----------------------------------------------------------

/// Two-sided bar: B_q = F x_P Ar^q x_P G for a right module F and a left
/// module G; as a simplicial space with an extra degeneracy at the F-end.
struct BarObject {
    SSpacePtr space;          // levels B_0..B_Q with the bar operators
    std::vector<SMap> extra;  // extra[q]: B_q -> B_{q+1}
    SMap augment;             // B_0 -> F x_P G balanced level... B_0 itself
    Presheaf f, g;
};
/// One-sided bar resolution: coefficient G = Ar(C) as a left module over
/// itself; level 0 is F x_P Ar(C).
BarObject bar_resolution(const Presheaf& f, int levels);
/// Two-sided form.
BarObject bar_two_sided(const Presheaf& f, const Presheaf& g, int levels);

/// Exact verification of the extra-degeneracy identities.
ValidationReport verify_extra_degeneracy(const BarObject& bar);

/// Ar(C) as a left module over C (arrows projected by source, action by
/// composition); the coefficient of the one-sided bar.
Presheaf arrows_as_left_module(const ICatPtr& c);

// --- base change ------------------------------------------------------------------

/// alpha^* G for a right module G over D.
Presheaf pullback_presheaf(const ICatMap& alpha, const Presheaf& g);

/// alpha_! on a corepresentable: {p} x_Q Ar(D), which is h^{u(p)}.
Presheaf pushforward_corepresentable(const ICatMap& alpha, const Expr& p_vertex);

/// Homotopy left Kan extension: the diagonal of the two-sided bar with
/// coefficient P x_Q Ar(D), returned as a presheaf over D with its exact
/// action.  Advisory when the strongly-Segal gatekeeper probes fail.
struct KanExtension {
    Presheaf result;
    BarObject bar;
    bool advisory = false;
    std::string note;
};
KanExtension homotopy_left_kan(const ICatMap& alpha, const Presheaf& f, int levels,
                               int probe_dim);

// --- equivalences over components ----------------------------------------------------

struct OverComponentsReport {
    bool accepted = false;
    bool advisory = false;
    std::string rejection;  // set when the sample misses a class
    std::map<std::string, Certificate> fibers;
};
/// Judges a presheaf map fiberwise over a sample of path components of Ob(C)
/// that surjects onto pi0 mod hoequiv.
OverComponentsReport equivalence_over_components(const Presheaf& f, const Presheaf& g,
                                                 const SMap& map,
                                                 const std::vector<int>& component_sample,
                                                 int hom_bound, int probe_dim);

}  // namespace catkit
