#pragma once

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace catkit {

/// Strictly decreasing list of degeneracy indices, outermost operator first.
/// The word [i1, i2, ..., ik] stands for the composite s_{i1} s_{i2} ... s_{ik}
/// (s_{ik} applied first).
using Word = std::vector<int>;

/// Canonical form of a simplex: a nondegenerate simplex together with the
/// degeneracy word that produces it.  Every simplex of a simplicial set has
/// exactly one such expression (Eilenberg-Zilber).
struct Expr {
    int base_dim = 0;
    int base = 0;  // index into the nondegenerate simplices of dimension base_dim
    Word word;

    int dim() const { return base_dim + static_cast<int>(word.size()); }
    bool is_degenerate() const { return !word.empty(); }

    auto operator<=>(const Expr&) const = default;
};

/// Composes s_a with an already-normalized word (s_a applied last):
/// s_a s_b = s_{b+1} s_a whenever a <= b.
Word word_insert(Word w, int a);

class SSet;
using SSetPtr = std::shared_ptr<const SSet>;

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string msg) {
        ok = false;
        violations.push_back(std::move(msg));
    }
};

/// A finite simplicial set truncated at dimension trunc_dim, stored in
/// Eilenberg-Zilber normal form: only nondegenerate simplices are kept and
/// each face is a degeneracy expression over lower nondegenerate simplices.
///
/// After construction the object is immutable; finalize() precomputes the
/// table of *all* simplices per dimension (degenerate ones included) together
/// with their face/degeneracy operators, which the rest of the library works
/// against.
class SSet {
public:
    int trunc_dim = 0;
    std::optional<int> coskeletal_above;

    // nondegenerate simplices
    std::vector<std::vector<std::string>> ids;           // ids[d][j]
    std::vector<std::vector<std::vector<Expr>>> nd_face; // nd_face[d][j][i], defined for d >= 1

    // derived tables, built by finalize()
    std::vector<std::vector<Expr>> elems;             // all simplices per dimension, sorted
    std::vector<std::map<Expr, int>> elem_index;      // Expr -> position in elems[m]
    std::vector<std::vector<std::vector<int>>> eface; // eface[m][i][e], m >= 1
    std::vector<std::vector<std::vector<int>>> edegen;// edegen[m][i][e], m < trunc_dim

    int dim_count(int d) const {
        return (d >= 0 && d < static_cast<int>(ids.size())) ? static_cast<int>(ids[d].size()) : 0;
    }
    int elem_count(int m) const {
        return (m >= 0 && m < static_cast<int>(elems.size())) ? static_cast<int>(elems[m].size()) : 0;
    }
    bool empty() const;

    /// d_i of a degeneracy expression, pushed through the word and resolved
    /// against the stored faces of the base.
    Expr face_of(const Expr& e, int i) const;
    /// s_i of a degeneracy expression.
    static Expr degen_of(const Expr& e, int i);

    Expr nondeg_expr(int d, int j) const { return Expr{d, j, {}}; }
    int index_of(const Expr& e) const;

    const std::string& name_of(const Expr& e) const { return ids[e.base_dim][e.base]; }
    /// "s3 s1 id" rendering; base id last.
    std::string expr_string(const Expr& e) const;

    void finalize();

    ValidationReport validate() const;

    /// Looks up a nondegenerate simplex id in dimension d.
    std::optional<int> find_id(int d, const std::string& id) const;
};

/// Builder for assembling an SSet by hand; finalize() is called by build().
class SSetBuilder {
public:
    explicit SSetBuilder(int trunc_dim);
    /// Adds a nondegenerate d-simplex; faces must reference already-added ids.
    /// Returns the index within dimension d.
    int add(int d, const std::string& id, const std::vector<Expr>& faces = {});
    Expr vertex(const std::string& id) const;
    Expr simplex(int d, const std::string& id) const;
    void set_coskeletal(int n);
    SSetPtr build();
    /// Skips finalize(); for assembling deliberately broken inputs that are
    /// handed to validate().
    SSetPtr build_raw();

private:
    std::shared_ptr<SSet> x_;
};

// --- stock objects -------------------------------------------------------

/// Standard n-simplex Delta[n], truncated at D (D >= n is not required).
/// Nondegenerate d-simplices are the strictly increasing (d+1)-subsets of
/// {0..n}, named by their vertex string, e.g. "02" for the edge 0 < 2.
SSetPtr standard_simplex(int n, int D);
/// Boundary of Delta[n].
SSetPtr boundary_simplex(int n, int D);
/// k-th horn of Delta[n]: all faces except the k-th.
SSetPtr horn(int n, int k, int D);
/// Discrete simplicial set on the given vertex names.
SSetPtr discrete_sset(const std::vector<std::string>& points, int D);
SSetPtr empty_sset(int D);

/// Nerve of the chaotic groupoid on k objects, as a simplicial set:
/// nondegenerate d-simplices are the (d+1)-tuples over {0..k-1} with no two
/// adjacent entries equal, named by their digit strings.  0-coskeletal.
SSetPtr chaotic_sset(int k, int D);

/// Canonical extension of an n-coskeletal object to a higher truncation:
/// above the coskeletal bound, m-simplices are the maps from the boundary of
/// Delta[m], enumerated exactly.
SSetPtr extend_truncation(const SSetPtr& x, int new_trunc);

/// Vertex list of a simplex in an object whose vertex ids are integers
/// (standard simplices, chaotic objects).
std::vector<int> vertex_sequence(const SSet& x, const Expr& e);
/// The simplex of a standard-simplex-like object with the given monotone
/// vertex sequence (repeats become degeneracies).
Expr simplex_with_vertices(const SSet& x, const std::vector<int>& seq);

}  // namespace catkit
