#pragma once

#include "catkit/fincat.hpp"
#include "catkit/sset.hpp"

#include <cstdint>

namespace catkit {

/// A finitely presented category: generators with endpoints and relation
/// pairs of parallel words.  Words list generator indices in diagrammatic
/// order (first arrow first); the empty word is an identity.
struct PresentedCat {
    std::vector<std::string> objects;
    struct Gen {
        std::string id;
        int src = 0, dst = 0;
    };
    std::vector<Gen> gens;
    std::vector<std::pair<std::vector<int>, std::vector<int>>> rels;

    int word_src(const std::vector<int>& w, int at_object) const {
        return w.empty() ? at_object : gens[w.front()].src;
    }
    int word_dst(const std::vector<int>& w, int at_object) const {
        return w.empty() ? at_object : gens[w.back()].dst;
    }
};

ValidationReport validate_presented(const PresentedCat& p);

enum class WordEq { Equal, Distinct, Unknown };

std::string word_eq_name(WordEq e);

struct WordBudget {
    std::uint64_t max_states = 20000;
    int max_extra_len = 2;
};

/// Three-valued word problem: bidirectional rewriting closure within the
/// budget, then separation by a rational weight invariant.  Never guesses.
WordEq word_equal(const PresentedCat& p, const std::vector<int>& w1, const std::vector<int>& w2,
                  int at_object, const WordBudget& budget = {});

/// Structural comparison against an explicitly given finite category: checks
/// that generators biject with arrows, relations hold, every composable pair
/// of generators is covered by a collapsing relation, and identities are unit
/// generators.  Together these force the presented category to be the
/// expected one, with the generator map an isomorphism.
ValidationReport presentation_matches(const PresentedCat& p, const FinCat& expected,
                                      const std::vector<int>& obj_to_obj,
                                      const std::vector<int>& gen_to_arrow);

}  // namespace catkit
