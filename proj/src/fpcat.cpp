#include "catkit/fpcat.hpp"

#include "catkit/homology.hpp"

#include <algorithm>
#include <set>

namespace catkit {

std::string word_eq_name(WordEq e) {
    switch (e) {
        case WordEq::Equal: return "PROVED-EQUAL";
        case WordEq::Distinct: return "PROVED-DISTINCT";
        case WordEq::Unknown: return "UNKNOWN";
    }
    return "?";
}

ValidationReport validate_presented(const PresentedCat& p) {
    ValidationReport rep;
    for (const auto& g : p.gens)
        if (g.src < 0 || g.src >= static_cast<int>(p.objects.size()) || g.dst < 0 ||
            g.dst >= static_cast<int>(p.objects.size()))
            rep.fail("generator " + g.id + " has out-of-range endpoints");
    for (size_t r = 0; r < p.rels.size(); ++r) {
        const auto& [a, b] = p.rels[r];
        auto composable = [&](const std::vector<int>& w) {
            for (size_t i = 0; i + 1 < w.size(); ++i)
                if (p.gens[w[i]].dst != p.gens[w[i + 1]].src) return false;
            return true;
        };
        if (!composable(a) || !composable(b)) {
            rep.fail("relation " + std::to_string(r) + " has a non-composable word");
            continue;
        }
        if (a.empty() && b.empty()) continue;
        if (a.empty() || b.empty()) {
            const auto& w = a.empty() ? b : a;
            if (p.gens[w.front()].src != p.gens[w.back()].dst)
                rep.fail("relation " + std::to_string(r) + " equates a non-loop with an identity");
            continue;
        }
        if (p.gens[a.front()].src != p.gens[b.front()].src ||
            p.gens[a.back()].dst != p.gens[b.back()].dst)
            rep.fail("relation " + std::to_string(r) + " relates non-parallel words");
    }
    return rep;
}

namespace {

int object_at(const PresentedCat& p, const std::vector<int>& w, int at_object, size_t pos) {
    return pos == 0 ? p.word_src(w, at_object) : p.gens[w[pos - 1]].dst;
}

/// One-step rewrites of w by all relations in both directions, length-capped.
std::vector<std::vector<int>> neighbors(const PresentedCat& p, const std::vector<int>& w,
                                        int at_object, size_t max_len) {
    std::vector<std::vector<int>> out;
    auto apply = [&](const std::vector<int>& from, const std::vector<int>& to) {
        if (from.empty() && to.empty()) return;
        if (w.size() + to.size() < from.size()) return;
        size_t new_len = w.size() - from.size() + to.size();
        if (new_len > max_len) return;
        for (size_t pos = 0; pos + from.size() <= w.size() + (from.empty() ? 1 : 0); ++pos) {
            if (pos > w.size()) break;
            if (!from.empty()) {
                if (pos + from.size() > w.size()) break;
                bool match = true;
                for (size_t i = 0; i < from.size() && match; ++i)
                    if (w[pos + i] != from[i]) match = false;
                if (!match) continue;
            } else {
                // inserting `to` (a loop) needs the object at pos to agree
                if (object_at(p, w, at_object, pos) != p.gens[to.front()].src) continue;
            }
            std::vector<int> next;
            next.insert(next.end(), w.begin(), w.begin() + pos);
            next.insert(next.end(), to.begin(), to.end());
            next.insert(next.end(), w.begin() + pos + from.size(), w.end());
            out.push_back(std::move(next));
        }
    };
    for (const auto& [a, b] : p.rels) {
        apply(a, b);
        apply(b, a);
    }
    return out;
}

}  // namespace

WordEq word_equal(const PresentedCat& p, const std::vector<int>& w1, const std::vector<int>& w2,
                  int at_object, const WordBudget& budget) {
    if (p.word_src(w1, at_object) != p.word_src(w2, at_object) ||
        p.word_dst(w1, at_object) != p.word_dst(w2, at_object))
        return WordEq::Distinct;
    if (w1 == w2) return WordEq::Equal;
    size_t max_len = std::max(w1.size(), w2.size()) + budget.max_extra_len;
    auto bfs = [&]() -> bool {
        std::set<std::vector<int>> seen1{w1}, seen2{w2};
        std::vector<std::vector<int>> front1{w1}, front2{w2};
        std::uint64_t states = 2;
        while (!front1.empty() || !front2.empty()) {
            // expand the smaller frontier
            bool side1 = front2.empty() || (!front1.empty() && front1.size() <= front2.size());
            auto& frontier = side1 ? front1 : front2;
            auto& mine = side1 ? seen1 : seen2;
            auto& other = side1 ? seen2 : seen1;
            std::vector<std::vector<int>> next;
            for (const auto& w : frontier)
                for (auto& n : neighbors(p, w, at_object, max_len)) {
                    if (other.count(n)) return true;
                    if (mine.insert(n).second) {
                        if (++states > budget.max_states) return false;
                        next.push_back(std::move(n));
                    }
                }
            frontier = std::move(next);
        }
        return false;
    };
    if (bfs()) return WordEq::Equal;
    // rational weight separation: a functional on generators vanishing on all
    // relation differences but not on chi(w1) - chi(w2) proves distinctness
    std::vector<std::vector<long long>> rows;
    for (const auto& [a, b] : p.rels) {
        std::vector<long long> row(p.gens.size(), 0);
        for (int g : a) row[g] += 1;
        for (int g : b) row[g] -= 1;
        rows.push_back(std::move(row));
    }
    std::vector<long long> v(p.gens.size(), 0);
    for (int g : w1) v[g] += 1;
    for (int g : w2) v[g] -= 1;
    if (!in_rational_row_space(rows, v)) return WordEq::Distinct;
    return WordEq::Unknown;
}

ValidationReport presentation_matches(const PresentedCat& p, const FinCat& expected,
                                      const std::vector<int>& obj_to_obj,
                                      const std::vector<int>& gen_to_arrow) {
    ValidationReport rep;
    if (p.objects.size() != expected.objects.size()) rep.fail("object counts differ");
    if (p.gens.size() != expected.arrows.size()) rep.fail("generator and arrow counts differ");
    if (!rep.ok) return rep;
    std::vector<char> hit(expected.arrows.size(), 0);
    for (size_t g = 0; g < p.gens.size(); ++g) {
        int a = gen_to_arrow[g];
        if (a < 0 || a >= static_cast<int>(expected.arrows.size())) {
            rep.fail("generator " + p.gens[g].id + " maps outside the expected category");
            return rep;
        }
        if (hit[a]) rep.fail("two generators map to arrow " + expected.arrows[a].id);
        hit[a] = 1;
        if (obj_to_obj[p.gens[g].src] != expected.arrows[a].src ||
            obj_to_obj[p.gens[g].dst] != expected.arrows[a].dst)
            rep.fail("generator " + p.gens[g].id + " has mismatched endpoints");
    }
    auto eval = [&](const std::vector<int>& w, int at_object) -> int {
        if (w.empty()) return expected.ident[obj_to_obj[at_object]];
        int cur = gen_to_arrow[w[0]];
        for (size_t i = 1; i < w.size(); ++i) cur = expected.compose(cur, gen_to_arrow[w[i]]);
        return cur;
    };
    // every relation must hold in the expected category
    for (size_t r = 0; r < p.rels.size(); ++r) {
        const auto& [a, b] = p.rels[r];
        int at = a.empty() ? (b.empty() ? 0 : p.gens[b.front()].src)
                           : p.gens[a.front()].src;
        if (eval(a, at) != eval(b, at))
            rep.fail("relation " + std::to_string(r) + " fails in the expected category");
    }
    // every composable pair of generators is collapsed by some relation
    for (size_t g = 0; g < p.gens.size(); ++g)
        for (size_t h = 0; h < p.gens.size(); ++h) {
            if (p.gens[g].dst != p.gens[h].src) continue;
            bool covered = false;
            for (const auto& [a, b] : p.rels) {
                bool lhs = a.size() == 2 && a[0] == static_cast<int>(g) &&
                           a[1] == static_cast<int>(h) && b.size() <= 1;
                bool rhs = b.size() == 2 && b[0] == static_cast<int>(g) &&
                           b[1] == static_cast<int>(h) && a.size() <= 1;
                if (lhs || rhs) {
                    covered = true;
                    break;
                }
            }
            if (!covered)
                rep.fail("composable pair (" + p.gens[g].id + ", " + p.gens[h].id +
                         ") has no collapsing relation");
        }
    // identity arrows are unit generators
    for (size_t o = 0; o < p.objects.size(); ++o) {
        int id_arrow = expected.ident[obj_to_obj[o]];
        bool found = false;
        for (size_t g = 0; g < p.gens.size() && !found; ++g) {
            if (gen_to_arrow[g] != id_arrow) continue;
            for (const auto& [a, b] : p.rels)
                if ((a == std::vector<int>{static_cast<int>(g)} && b.empty()) ||
                    (b == std::vector<int>{static_cast<int>(g)} && a.empty())) {
                    found = true;
                    break;
                }
        }
        if (!found) rep.fail("identity at " + p.objects[o] + " is not a unit generator");
    }
    return rep;
}

}  // namespace catkit
