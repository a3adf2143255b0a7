#pragma once

#include "catkit/fincat.hpp"
#include "catkit/smap.hpp"
#include "catkit/sspace.hpp"

namespace catkit {

/// A category internal to simplicial sets: spaces of objects and arrows with
/// source/target/unit/composition, all exact.
struct ICat {
    SSetPtr ob, ar;
    SMap src, tgt;           // ar -> ob
    SMap unit;               // ob -> ar
    FiberProduct comp_dom;   // ar x_ob ar, pairs (f, g) with tgt f = src g
    SMap comp;               // comp_dom.obj -> ar, (f, g) -> g after f
};
using ICatPtr = std::shared_ptr<const ICat>;

/// Assembles the composition domain and wraps the pieces; comp_fn receives
/// the canonical pullback and must return the composition map out of it.
ICatPtr make_icat(const SSetPtr& ob, const SSetPtr& ar, const SMap& src, const SMap& tgt,
                  const SMap& unit, const std::function<SMap(const FiberProduct&)>& comp_fn);

ValidationReport validate_icat(const ICat& c);

/// Discrete internal category on a space: arrows = objects, everything the
/// identity.
ICatPtr discrete_icat(const SSetPtr& k);
/// Ordinary category embedded with constant (discrete) spaces.
ICatPtr icat_from_fincat(const FinCat& c, int D);

struct ICatMap {
    ICatPtr src, dst;
    SMap on_ob, on_ar;
};
ValidationReport validate_icat_map(const ICatMap& f);
ICatMap identity_icat_map(const ICatPtr& c);
ICatMap compose(const ICatMap& g, const ICatMap& f);

ICatPtr icat_product(const ICatPtr& a, const ICatPtr& b);
/// Projections of the product; tupling of a cone.
ICatMap icat_proj1(const ICatPtr& prod, const ICatPtr& a, const ICatPtr& b);
ICatMap icat_proj2(const ICatPtr& prod, const ICatPtr& a, const ICatPtr& b);

/// Binary coproduct, with tagged names.
ICatPtr icat_coproduct(const ICatPtr& a, const ICatPtr& b);

/// Degree-k category of an internal category (objects/arrows are the
/// k-simplices).
FinCat level_cat(const ICat& c, int k);

/// The nerve: level n is the n-fold fiber power of arrows over objects.
SSpacePtr nerve(const ICatPtr& c, int M);
/// Nerve of a map of internal categories.
SSMap nerve_map(const ICatMap& f, int M);
/// Map into nerve level n assembled from n compatible arrow components
/// (n >= 1); nc must be nerve(c, ...).
SMap into_nerve_level(const ICatPtr& c, const SSpacePtr& nc, int n,
                      const std::vector<SMap>& comps);

/// Enumeration of internal functors C -> D.
struct ICatMapEnumeration {
    std::vector<ICatMap> maps;
    bool complete = true;
};
ICatMapEnumeration enumerate_icat_maps(const ICatPtr& c, const ICatPtr& d,
                                       std::uint64_t budget = 50'000'000);

/// Map(C, D) as a simplicial set truncated at `trunc`: n-simplices are the
/// internal functors C x Delta[n] -> D.
struct MappingSpace {
    SSetPtr obj;
    std::vector<std::vector<ICatMap>> cells;  // per dimension, element order
    bool complete = true;
};
MappingSpace icat_mapping_space(const ICatPtr& c, const ICatPtr& d, int trunc,
                                std::uint64_t budget = 50'000'000);

/// Fibration probes on source/target, Kan probe on the object space, and the
/// Segal squares through the homotopy-cartesian prober.
struct StronglySegalReport {
    ProbeResult src_probe, tgt_probe, ob_probe;
    std::vector<HCResult> segal_squares;  // levels 2..M of the nerve used
    bool pass = false;
    std::string witness;
};
StronglySegalReport strongly_segal_check(const ICatPtr& c, int probe_dim, int nerve_levels = 3);

}  // namespace catkit
