#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace catkit {

/// An ordinary finite category with explicit composition tables.
struct FinCat {
    std::vector<std::string> objects;
    struct Arrow {
        std::string id;
        int src = 0, dst = 0;
    };
    std::vector<Arrow> arrows;                 // identities included
    std::vector<int> ident;                    // per object
    std::map<std::pair<int, int>, int> comp;   // (f, g), tgt f == src g  ->  g after f

    int compose(int f, int g) const { return comp.at({f, g}); }
    std::optional<int> find_object(const std::string& name) const;
    std::optional<int> find_arrow(const std::string& id) const;
};

/// Checks identities, endpoint bookkeeping, totality of composition on
/// composable pairs, unit laws and associativity.
bool validate_fincat(const FinCat& c, std::string* why = nullptr);

/// Number of connected components (zigzags of arrows).
int pi0_fincat(const FinCat& c);

FinCat poset_cat(int n);                     // [n]
FinCat chaotic_groupoid(int n_objects);      // one isomorphism between any two
FinCat disjoint_union(const FinCat& a, const FinCat& b);
FinCat product_cat(const FinCat& a, const FinCat& b);

struct Functor {
    std::vector<int> on_objects;
    std::vector<int> on_arrows;
    bool operator==(const Functor&) const = default;
    bool operator<(const Functor& o) const {
        return std::tie(on_objects, on_arrows) < std::tie(o.on_objects, o.on_arrows);
    }
};

/// All functors B -> C by backtracking; complete=false when the budget ran out.
struct FunctorEnumeration {
    std::vector<Functor> functors;
    bool complete = true;
};
FunctorEnumeration enumerate_functors(const FinCat& b, const FinCat& c,
                                      std::uint64_t budget = 50'000'000);

/// Composable n-chains of arrows (the nerve level), lexicographically ordered.
std::vector<std::vector<int>> nerve_chains(const FinCat& c, int n);

}  // namespace catkit
