#pragma once

#include "catkit/sset.hpp"

#include <cstdint>
#include <functional>

namespace catkit {

/// A map of truncated simplicial sets, stored on nondegenerate simplices and
/// extended to everything else by naturality.
struct SMap {
    SSetPtr src;
    SSetPtr dst;
    std::vector<std::vector<Expr>> assign;  // assign[d][j]: image of nondeg j in dim d

    Expr operator()(const Expr& e) const {
        Expr img = assign[e.base_dim][e.base];
        for (auto it = e.word.rbegin(); it != e.word.rend(); ++it)
            img.word = word_insert(std::move(img.word), *it);
        return img;
    }

    bool operator==(const SMap& o) const { return assign == o.assign; }
};

SMap identity_map(const SSetPtr& x);
SMap compose(const SMap& g, const SMap& f);  // g after f
/// Checks that the assignment commutes with all face operators (degeneracies
/// are automatic).  Dimensions and truncations must already agree.
ValidationReport validate_smap(const SMap& f);
/// The unique map to a one-point object.
SMap terminal_map(const SSetPtr& x, const SSetPtr& point);
/// Constant map at a vertex of dst.
SMap constant_map(const SSetPtr& x, const SSetPtr& dst, const Expr& vertex);

bool is_injective(const SMap& f);
bool is_iso(const SMap& f);
SMap inverse_iso(const SMap& f);

/// All simplicial maps src -> dst, enumerated by backtracking over the
/// nondegenerate simplices dimension by dimension.  `budget` caps the number
/// of partial assignments visited; when exhausted, `complete` is false and
/// `maps` holds what was found so far.
struct SMapEnumeration {
    std::vector<SMap> maps;
    bool complete = true;
    std::uint64_t visited = 0;
};
SMapEnumeration enumerate_smaps(const SSetPtr& src, const SSetPtr& dst,
                                std::uint64_t budget = 50'000'000);

// --- table constructions --------------------------------------------------

/// An anonymous simplicial set given by plain operator tables; the raw
/// material for limits and colimits before renormalization.
struct TableSSet {
    int trunc_dim = 0;
    std::vector<int> count;                          // per dimension
    std::vector<std::vector<std::vector<int>>> face; // face[m][i][e]
    std::vector<std::vector<std::vector<int>>> degen;// degen[m][i][e], m < trunc_dim
};

/// Naming hook for normalize(): receives (dim, table element) for each fresh
/// nondegenerate simplex.
using Namer = std::function<std::string(int, int)>;

/// Result of renormalizing a table into Eilenberg-Zilber form.
struct Normalized {
    SSetPtr sset;
    std::vector<std::vector<Expr>> expr_of;  // table element -> Expr of sset
    std::vector<std::vector<int>> elem_of_nondeg;  // nondeg (d,j) -> table element
};
Normalized normalize_table(const TableSSet& t, const Namer& namer);

/// Builds the assignment taking each nondegenerate simplex of `sub` to
/// `expr_of` images; used by constructions that carry a correspondence.
SMap map_from_elem_images(const SSetPtr& src, const SSetPtr& dst,
                          const std::function<Expr(int, const Expr&)>& image_of_nondeg);

// --- binary product -------------------------------------------------------

struct Product {
    SSetPtr obj;
    SMap p1, p2;
    /// pair lookup: product simplex for a pair of equal-dimension simplices
    Expr pair(const Expr& a, const Expr& b) const;
    /// factorization through the product
    SMap tuple(const SMap& f, const SMap& g) const;

    SSetPtr lhs, rhs;
    std::vector<std::map<std::pair<Expr, Expr>, Expr>> pair_index;
};
Product product(const SSetPtr& x, const SSetPtr& y);

// --- fiber product ---------------------------------------------------------

struct FiberProduct {
    SSetPtr obj;
    SMap p1, p2;
    Expr pair(const Expr& a, const Expr& b) const;
    /// induced map from maps u, v with f.u = g.v (checked)
    SMap tuple(const SMap& u, const SMap& v) const;

    SMap f, g;  // the cospan legs
    std::vector<std::map<std::pair<Expr, Expr>, Expr>> pair_index;
};
FiberProduct fiber_product(const SMap& f, const SMap& g);

// --- pushout ---------------------------------------------------------------

struct Pushout {
    SSetPtr obj;
    SMap i1, i2;  // inclusions of the two legs' codomains
    /// induced map out of the pushout from a cocone (checked)
    SMap cotuple(const SMap& u, const SMap& v) const;

    SMap f, g;  // the span legs (common domain)
    // class representative per nondegenerate simplex: (side, expr)
    std::vector<std::vector<std::pair<int, Expr>>> rep;
    std::vector<std::map<Expr, Expr>> class_of_a, class_of_b;  // elem -> pushout expr
};
Pushout pushout(const SMap& f, const SMap& g);

/// Coproduct as a pushout over the empty object.
Pushout coproduct(const SSetPtr& x, const SSetPtr& y);

// --- subobjects and quotients ---------------------------------------------

struct Subobject {
    SSetPtr obj;
    SMap include;
    std::vector<std::map<Expr, Expr>> expr_in_sub;  // ambient elem -> sub expr (members only)
    bool contains(const Expr& ambient) const;
    /// corestriction of f: W -> ambient through the subobject (f must land in it)
    SMap corestrict(const SMap& f) const;
};
/// Smallest subobject of x containing the given simplices (closed under faces
/// and degeneracies).
Subobject span_subobject(const SSetPtr& x, const std::vector<Expr>& generators);

// --- pi0 -------------------------------------------------------------------

struct Pi0 {
    int count = 0;
    std::vector<int> component_of_vertex;  // indexed like x->elems[0]
    int component_of(const SSet& x, const Expr& vertex) const;
};
Pi0 pi0(const SSetPtr& x);

/// Splits x into its connected components: component_of[i] = subobject.
std::vector<Subobject> component_split(const SSetPtr& x, const Pi0& p);

/// Union of the listed components as a single subobject.
Subobject components_subobject(const SSetPtr& x, const Pi0& p, const std::vector<int>& comps);

}  // namespace catkit
