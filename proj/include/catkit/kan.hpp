#pragma once

#include "catkit/smap.hpp"
#include "catkit/sset.hpp"

#include <cstdint>

namespace catkit {

/// An unsolvable lifting problem: the horn Lambda^m_k -> src given by the
/// faces (indices into src->elems[m-1], position k unused) over the base
/// m-simplex of dst.
struct HornWitness {
    int m = 0, k = 0;
    std::vector<Expr> faces;
    Expr base;
};

struct ProbeResult {
    bool pass = true;
    std::optional<HornWitness> witness;
    std::uint64_t problems = 0;  // number of lifting problems examined
    int max_dim = 0;
};

/// Exhaustively enumerates all lifting problems Lambda^m_k -> src over
/// Delta[m] -> dst for m <= max_dim and reports the lexicographically first
/// unsolvable one.  max_dim must not exceed the truncation.
ProbeResult kan_fibration_probe(const SMap& p, int max_dim, bool parallel = true);

/// Serial reference implementation; bit-identical results, used by the tests
/// and the benchmark.
ProbeResult kan_fibration_probe_serial(const SMap& p, int max_dim);

/// Kan-complex probe: lifting against the map to the point.
ProbeResult kan_probe(const SSetPtr& x, int max_dim, bool parallel = true);

}  // namespace catkit
