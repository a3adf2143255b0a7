#pragma once

#include "catkit/homology.hpp"
#include "catkit/kan.hpp"
#include "catkit/smap.hpp"

#include <cstdint>

namespace catkit {

enum class Tier { ISO, STRONG, HOMOLOGICAL, FAILED, UNKNOWN };

std::string tier_name(Tier t);

/// Cylinder X x Delta[1] with the two end inclusions; the shape simplicial
/// homotopies are written against.
struct Cylinder {
    Product prod;
    SMap at0, at1;  // X -> prod.obj
};
Cylinder make_cylinder(const SSetPtr& x);

/// Candidate homotopy-equivalence data supplied by a caller: maps f, g and
/// homotopies H: X x Delta[1] -> X between g.f and id, K likewise on Y.
struct StrongCandidate {
    SMap f, g;  // f: X -> Y, g: Y -> X
    SMap H;     // cylinder on X -> X
    SMap K;     // cylinder on Y -> Y
};

/// Tiered, machine-checkable evidence of equivalence.  HOMOLOGICAL is
/// necessary-conditions evidence only, never a proof of weak equivalence.
struct Certificate {
    Tier tier = Tier::UNKNOWN;
    int hom_bound = -1;  // meaningful for HOMOLOGICAL
    std::optional<SMap> iso, iso_inv;
    std::optional<StrongCandidate> strong;
    std::string obstruction;                        // set when FAILED
    std::string note;                               // e.g. iso search exhausted
    std::vector<std::pair<int, int>> pi0_matching;  // component pairing (x comp, y comp)
    bool passed() const { return tier == Tier::ISO || tier == Tier::STRONG || tier == Tier::HOMOLOGICAL; }
};

enum class CertMode { Auto, IsoOnly };

struct CertOptions {
    CertMode mode = CertMode::Auto;
    int hom_bound = 1;
    std::uint64_t iso_budget = 1'000'000;
    std::optional<SMap> candidate;           // comparison map tried before searching
    std::optional<StrongCandidate> strong;   // verified for the STRONG tier
};

/// Attempts tiers in order ISO -> STRONG -> HOMOLOGICAL; returns the first
/// achieved tier, FAILED with a concrete obstruction, or UNKNOWN on budget
/// exhaustion.  UNKNOWN never masquerades as a pass.
Certificate certify_equivalence(const SSetPtr& x, const SSetPtr& y, const CertOptions& opts = {});

/// Exhaustive isomorphism search within a budget.
struct IsoSearch {
    bool found = false;
    bool exhausted = false;  // budget ran out before covering the space
    SMap iso;
    std::uint64_t tried = 0;
};
IsoSearch search_iso(const SSetPtr& x, const SSetPtr& y, std::uint64_t budget);

/// Exact verification of caller-supplied homotopy-equivalence data.
ValidationReport verify_strong(const SSetPtr& x, const SSetPtr& y, const StrongCandidate& cand);

/// Builds the contraction data exhibiting Delta[n] ~ Delta[0].
StrongCandidate contraction_to_point(const SSetPtr& simplex, const SSetPtr& point);

}  // namespace catkit
