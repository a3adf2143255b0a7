#pragma once

#include "catkit/certificate.hpp"
#include "catkit/smap.hpp"
#include "catkit/sset.hpp"

#include <map>
#include <tuple>

namespace catkit {

/// A simplicial space (bisimplicial set) truncated at outer dimension
/// outer_dim; every level shares the inner truncation.
struct SSpace {
    int outer_dim = 0;
    std::vector<SSetPtr> level;
    std::vector<std::vector<SMap>> face;   // face[m][i]: level m -> m-1, 1 <= m <= M
    std::vector<std::vector<SMap>> degen;  // degen[m][i]: level m -> m+1, 0 <= m < M

    int inner_dim() const { return level.empty() ? 0 : level[0]->trunc_dim; }
};
using SSpacePtr = std::shared_ptr<const SSpace>;

ValidationReport validate_sspace(const SSpace& x);

/// Map of simplicial spaces: levelwise simplicial maps commuting with the
/// outer operators.
struct SSMap {
    SSpacePtr src, dst;
    std::vector<SMap> level;
};
ValidationReport validate_ssmap(const SSMap& f);
SSMap identity_ssmap(const SSpacePtr& x);
SSMap compose(const SSMap& g, const SSMap& f);

/// The operator X_n -> X_m induced by a monotone map phi: [m] -> [n]
/// (phi given by its value list, phi.size() == m+1).
SMap outer_op(const SSpace& x, const std::vector<int>& phi, int n);

/// Raw enumeration of maps of simplicial spaces (levelwise backtracking).
struct SSMapEnumeration {
    std::vector<SSMap> maps;
    bool complete = true;
};
SSMapEnumeration enumerate_ssmaps(const SSpacePtr& x, const SSpacePtr& y,
                                  std::uint64_t budget_per_level = 50'000'000);

// --- representing objects ---------------------------------------------------

/// F(n): level m is the discrete set of order-preserving maps [m] -> [n].
SSpacePtr make_F(int n, int M, int D);

/// G(n): the spine of F(n), with the inclusion into F(n).
struct GInclusion {
    SSpacePtr g;
    SSpacePtr f;
    SSMap include;
};
GInclusion make_G(int n, int M, int D);

/// E: the levelwise-discrete nerve of the walking isomorphism; level m has
/// 2^{m+1} points.
SSpacePtr make_E(int M, int D);

/// The constant simplicial space on an inner object.
SSpacePtr constant_sspace(const SSetPtr& k, int M);

/// The levelwise-discrete simplicial space of a simplicial set: level m is
/// the discrete space on the m-simplices.
SSpacePtr levelwise_discrete_space(const SSetPtr& k, int M, int D);

/// Levelwise product with componentwise outer operators.
struct SSpaceProduct {
    SSpacePtr obj;
    SSMap p1, p2;
    std::vector<Product> levels;
};
SSpaceProduct sspace_product(const SSpacePtr& a, const SSpacePtr& b);

/// Levelwise pushout with induced outer operators.
struct SSpacePushout {
    SSpacePtr obj;
    SSMap i1, i2;
    std::vector<Pushout> levels;
};
SSpacePushout sspace_pushout(const SSMap& f, const SSMap& g);

// --- Segal structure ----------------------------------------------------------

/// The Segal map X_n -> X_1 x_{X_0} ... x_{X_0} X_1 together with its
/// constructed codomain and the n projections to X_1.
struct SegalMap {
    SMap map;
    SSetPtr power;
    std::vector<SMap> proj;
};
SegalMap segal_map(const SSpacePtr& x, int n);

/// r-th latching object: colimit of the outer degeneracy diagram, with its
/// canonical map to X_r.
struct Latching {
    SSetPtr obj;
    SMap to_level;
};
Latching latching(const SSpacePtr& x, int r);

/// Diagonal simplicial set, reliable up to min(outer_dim, inner truncation).
SSetPtr diagonal(const SSpacePtr& x);

/// Diagonal plus the correspondence from level-d elements (inner dimension d)
/// to their expressions in the diagonal.
struct DiagonalResult {
    SSetPtr obj;
    std::vector<std::vector<Expr>> expr_of_level_elem;
};
DiagonalResult diagonal_with_provenance(const SSpacePtr& x);

// --- homotopy category --------------------------------------------------------

struct MissingFiller : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ho(X): objects are the vertices of X_0, hom-sets are pi0 of the mapping
/// fibers of (d_1, d_0): X_1 -> X_0 x X_0, composition by 2-simplex fillers.
struct HoCat {
    std::vector<Expr> objects;  // vertices of X_0 in element order
    struct HomFiber {
        Subobject fiber;  // of X_1
        Pi0 comps;
    };
    std::map<std::pair<int, int>, HomFiber> hom;  // keyed by vertex indices
    // composition: (x, y, z, class in hom(x,y), class in hom(y,z)) -> class in hom(x,z)
    std::map<std::tuple<int, int, int, int, int>, int> comp;
    std::map<int, int> ident;  // object -> identity class in hom(x,x)

    int hom_size(int x, int y) const { return hom.at({x, y}).comps.count; }
    bool invertible(int x, int y, int cls) const;
};
HoCat ho_category(const SSpacePtr& x);

/// The components of X_1 whose arrows are invertible in Ho(X), as a set of
/// pi0(X_1) component ids and as a subobject of X_1; the degeneracy
/// X_0 -> X_1 factors through it.
struct HoEquiv {
    Pi0 arrow_pi0;
    std::vector<int> components;
    Subobject sub;
    SMap degeneracy_factor;  // X_0 -> sub.obj
};
HoEquiv hoequiv(const SSpacePtr& x);

/// pi0(X_0) / ~, the coequalizer of the two endpoint maps out of hoequiv.
struct Pi0ModEquiv {
    int count = 0;
    std::vector<int> class_of_component;  // per pi0(X_0) component
    Pi0 vertex_pi0;
    int class_of_vertex(const SSet& x0, const Expr& v) const {
        return class_of_component[vertex_pi0.component_of(x0, v)];
    }
};
Pi0ModEquiv pi0_mod_equiv(const SSpacePtr& x);

/// Rezk completeness: certificate for X_0 -> X_hoequiv along the degeneracy.
Certificate completeness_check(const SSpacePtr& x, int hom_bound);

// --- Dwyer-Kan ------------------------------------------------------------------

struct DKResult {
    std::map<std::pair<int, int>, Certificate> ff_fibers;
    Tier ff_tier = Tier::ISO;  // weakest tier over all vertex pairs
    bool fully_faithful = false;
    bool essentially_surjective = false;
    std::string es_witness;  // missed class when not surjective
    bool dk = false;
};
DKResult dk_check(const SSMap& f, int hom_bound);

// --- homotopy cartesian probe ------------------------------------------------------

/// Commuting square: corner --top--> a, corner --left--> b, a --right--> c,
/// b --bottom--> c.
struct SquareOfMaps {
    SMap top, left, right, bottom;
};

enum class HCStatus { Certified, InconclusiveLeg };

struct HCResult {
    HCStatus status = HCStatus::Certified;
    ProbeResult leg;        // fibration evidence on the right leg
    Certificate cert;       // corner vs strict pullback
};
HCResult homotopy_cartesian_probe(const SquareOfMaps& sq, int fib_bound, int hom_bound);

}  // namespace catkit
