#pragma once

#include "catkit/fpcat.hpp"
#include "catkit/icat.hpp"
#include "catkit/sspace.hpp"

namespace catkit {

/// The left adjoint of the nerve on a simplicial space, one presented
/// category per inner degree: the free category on (X_1)_k over (X_0)_k,
/// modulo the composites recorded by (X_2)_k and with degenerate edges as
/// units.
struct PresentedICat {
    SSpacePtr source;
    std::vector<PresentedCat> level;  // indexed by inner degree
};
PresentedICat s_adjoint(const SSpacePtr& x);

/// Exact identification of S(N C) with C: degreewise structural comparison of
/// the presentation against the level categories of C.
ValidationReport verify_counit_iso(const ICatPtr& c, int inner_degrees);

/// Exact identification of S(F(p) x Delta[q]) with [p] x Delta[q].
ValidationReport verify_s_of_cell(int p, int q, int inner_degrees);

/// Maps out of S X into an internal category C, enumerated directly from the
/// presentation data (an object map and an arrow map subject to the unit and
/// 2-simplex conditions).  Adjoint to maps X -> N C.
struct SXMaps {
    std::vector<std::pair<SMap, SMap>> maps;  // (on objects X_0 -> Ob, on arrows X_1 -> Ar)
    bool complete = true;
};
SXMaps enumerate_maps_out_of_s(const SSpacePtr& x, const ICatPtr& c,
                               std::uint64_t budget = 50'000'000);

/// The adjunction transpose: a map (u, v) out of S X becomes a map of
/// simplicial spaces X -> N C.
SSMap transpose_to_nerve(const SSpacePtr& x, const ICatPtr& c, const SSpacePtr& nc,
                         const SMap& u, const SMap& v);

}  // namespace catkit
