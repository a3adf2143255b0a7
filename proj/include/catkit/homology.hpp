#pragma once

#include "catkit/smap.hpp"
#include "catkit/sset.hpp"

namespace catkit {

/// Finitely generated abelian group, reported as free rank plus elementary
/// divisors (each > 1, each dividing the next).
struct AbGroup {
    long long rank = 0;
    std::vector<long long> torsion;
    bool operator==(const AbGroup&) const = default;
    std::string to_string() const;
};

struct SmithResult {
    int rank = 0;
    std::vector<long long> divisors;  // the nonzero diagonal, divisibility order
};

/// Smith normal form over the integers.
SmithResult smith_normal_form(std::vector<std::vector<long long>> m);

/// Integral homology H_0..H_n of the normalized chain complex (free on
/// nondegenerate simplices, boundary = alternating face sum with degenerate
/// faces dropped).  Requires n <= trunc_dim - 1.
std::vector<AbGroup> homology(const SSetPtr& x, int top_degree);

/// Boundary matrix from dimension d to d-1 of the normalized complex.
std::vector<std::vector<long long>> boundary_matrix(const SSet& x, int d);

/// Homology of each path component separately, in pi0 component order.
std::vector<std::vector<AbGroup>> componentwise_homology(const SSetPtr& x, int top_degree);

/// True when the row space of `rows` contains `v` over the rationals.
bool in_rational_row_space(const std::vector<std::vector<long long>>& rows,
                           const std::vector<long long>& v);

}  // namespace catkit
