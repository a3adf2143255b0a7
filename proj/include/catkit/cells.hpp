#pragma once

#include "catkit/icat.hpp"
#include "catkit/sadjoint.hpp"

namespace catkit {

/// A generating cell K x [n] -> L x [n] together with the attaching map of
/// its boundary into the current complex.
struct Attachment {
    int n = 0;
    SMap include;     // K -> L, a monomorphism of simplicial sets
    ICatPtr kxn;      // K x [n]
    ICatPtr lxn;      // L x [n]
    ICatMap attach;   // kxn -> the current complex
};

/// Builds K x [n] and L x [n] and validates the pieces; the attaching map is
/// produced by the callback from the constructed K x [n].
Attachment make_attachment(int n, const SMap& include, const ICatPtr& base,
                           const std::function<ICatMap(const ICatPtr&)>& attach_fn);

struct AttachResult {
    ICatPtr result;
    ICatMap from_base;   // C -> D
    ICatMap from_cell;   // L x [n] -> D
};

/// The pushout C <- K x [n] -> L x [n] in internal categories, computed by
/// the degreewise closed form C_k ⊔ Z_k x [n] with Z_k = L_k - K_k.
AttachResult attach(const ICatPtr& base, const Attachment& spec);

/// Cross-check of the closed form against the generic simplicial-set pushout
/// machinery: the object and arrow spaces of the result must be the pushouts,
/// through the canonical comparison isomorphisms.
bool attach_routes_agree(const ICatPtr& base, const Attachment& spec);

/// The inclusion K x [n] -> L x [n].
ICatMap cell_inclusion(const Attachment& spec);

/// Map(B, -) applied to the attachment square, degreewise: for each inner
/// degree k <= degree_bound, the pushout comparison of functor sets must be a
/// bijection.  B must be connected.
struct KeyLemmaReport {
    bool ok = true;
    std::vector<std::string> failures;
    int degrees_checked = 0;
    std::uint64_t cones_checked = 0;
};
KeyLemmaReport verify_key_lemma(const ICatPtr& base, const Attachment& spec,
                                const std::vector<FinCat>& bs, int degree_bound);

/// N(attach(c, spec)) against the pushout of nerves, degreewise up to M.
struct NervePushoutReport {
    bool ok = true;
    std::string failure;
};
NervePushoutReport verify_nerve_pushout(const ICatPtr& base, const Attachment& spec, int M);

/// Nerve recognition by exact reconstruction: unique-filler composition from
/// the 2-truncation, then degreewise comparison with the nerve of the result.
struct IsNerveResult {
    enum class Verdict { Yes, No, Unknown } verdict = Verdict::Unknown;
    ICatPtr cat;          // on YES
    std::string witness;  // on NO
};
IsNerveResult is_nerve(const SSpacePtr& x, std::uint64_t budget = 50'000'000);

/// A finite ordered list of attachments from a base (default empty), with the
/// cached result.
struct CellComplex {
    ICatPtr base;
    std::vector<Attachment> steps;
    ICatPtr result;
};
CellComplex empty_complex(int D);
/// Applies one more attachment and records it.
CellComplex extend_complex(const CellComplex& cx, const Attachment& spec);

/// The empty internal category at truncation D.
ICatPtr empty_icat(int D);

}  // namespace catkit
