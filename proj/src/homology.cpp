#include "catkit/homology.hpp"

#include <algorithm>
#include <sstream>

namespace catkit {

std::string AbGroup::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (long long t : torsion) {
        if (!first) os << " + ";
        os << "Z/" << t;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

namespace {

using I128 = __int128;

long long to_ll(I128 v) {
    if (v > I128(9'000'000'000'000'000'000LL) || v < -I128(9'000'000'000'000'000'000LL))
        throw std::overflow_error("smith_normal_form: entry overflow");
    return static_cast<long long>(v);
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<long long>> m0) {
    size_t rows = m0.size();
    size_t cols = rows ? m0[0].size() : 0;
    std::vector<std::vector<I128>> m(rows, std::vector<I128>(cols));
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c) m[r][c] = m0[r][c];

    SmithResult out;
    size_t t = 0;
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the remaining block
        size_t pr = t, pc = t;
        I128 best = 0;
        for (size_t r = t; r < rows; ++r)
            for (size_t c = t; c < cols; ++c) {
                I128 a = m[r][c] < 0 ? -m[r][c] : m[r][c];
                if (a != 0 && (best == 0 || a < best)) {
                    best = a;
                    pr = r;
                    pc = c;
                }
            }
        if (best == 0) break;
        std::swap(m[t], m[pr]);
        for (size_t r = 0; r < rows; ++r) std::swap(m[r][t], m[r][pc]);
        bool clean = true;
        for (size_t r = t + 1; r < rows; ++r) {
            if (m[r][t] == 0) continue;
            I128 q = m[r][t] / m[t][t];
            if (q != 0)
                for (size_t c = t; c < cols; ++c) m[r][c] -= q * m[t][c];
            if (m[r][t] != 0) clean = false;
        }
        for (size_t c = t + 1; c < cols; ++c) {
            if (m[t][c] == 0) continue;
            I128 q = m[t][c] / m[t][t];
            if (q != 0)
                for (size_t r = t; r < rows; ++r) m[r][c] -= q * m[r][t];
            if (m[t][c] != 0) clean = false;
        }
        if (!clean) continue;  // smaller remainders appeared; repick the pivot
        // ensure the pivot divides the rest of the block
        bool divides = true;
        for (size_t r = t + 1; r < rows && divides; ++r)
            for (size_t c = t + 1; c < cols && divides; ++c)
                if (m[r][c] % m[t][t] != 0) {
                    for (size_t cc = t; cc < cols; ++cc) m[t][cc] += m[r][cc];
                    divides = false;
                }
        if (!divides) continue;
        ++t;
    }
    for (size_t i = 0; i < t; ++i) {
        I128 d = m[i][i] < 0 ? -m[i][i] : m[i][i];
        out.divisors.push_back(to_ll(d));
    }
    out.rank = static_cast<int>(t);
    return out;
}

std::vector<std::vector<long long>> boundary_matrix(const SSet& x, int d) {
    int nrows = x.dim_count(d - 1);
    int ncols = x.dim_count(d);
    std::vector<std::vector<long long>> m(nrows, std::vector<long long>(ncols, 0));
    for (int j = 0; j < ncols; ++j) {
        for (int i = 0; i <= d; ++i) {
            const Expr& f = x.nd_face[d][j][i];
            if (f.is_degenerate()) continue;  // normalized chains
            m[f.base][j] += (i % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

std::vector<AbGroup> homology(const SSetPtr& x, int top_degree) {
    if (top_degree > x->trunc_dim - 1)
        throw std::invalid_argument("homology: degree " + std::to_string(top_degree) +
                                    " exceeds truncation " + std::to_string(x->trunc_dim) + " - 1");
    std::vector<SmithResult> snf(top_degree + 2);
    for (int d = 1; d <= top_degree + 1; ++d) snf[d] = smith_normal_form(boundary_matrix(*x, d));
    std::vector<AbGroup> out(top_degree + 1);
    for (int d = 0; d <= top_degree; ++d) {
        int chains = x->dim_count(d);
        int rank_in = (d >= 1) ? snf[d].rank : 0;
        int rank_out = snf[d + 1].rank;
        out[d].rank = chains - rank_in - rank_out;
        for (long long div : snf[d + 1].divisors)
            if (div > 1) out[d].torsion.push_back(div);
        std::sort(out[d].torsion.begin(), out[d].torsion.end());
    }
    return out;
}

std::vector<std::vector<AbGroup>> componentwise_homology(const SSetPtr& x, int top_degree) {
    Pi0 p = pi0(x);
    std::vector<std::vector<AbGroup>> out;
    for (const Subobject& s : component_split(x, p)) out.push_back(homology(s.obj, top_degree));
    return out;
}

bool in_rational_row_space(const std::vector<std::vector<long long>>& rows,
                           const std::vector<long long>& v) {
    std::vector<std::vector<long long>> with = rows;
    with.push_back(v);
    return smith_normal_form(rows).rank == smith_normal_form(with).rank;
}

}  // namespace catkit
