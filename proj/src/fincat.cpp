#include "catkit/fincat.hpp"

#include <functional>
#include <numeric>

namespace catkit {

std::optional<int> FinCat::find_object(const std::string& name) const {
    for (size_t i = 0; i < objects.size(); ++i)
        if (objects[i] == name) return static_cast<int>(i);
    return std::nullopt;
}

std::optional<int> FinCat::find_arrow(const std::string& id) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].id == id) return static_cast<int>(i);
    return std::nullopt;
}

bool validate_fincat(const FinCat& c, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.ident.size() != c.objects.size()) return fail("identity table size mismatch");
    for (size_t o = 0; o < c.objects.size(); ++o) {
        int e = c.ident[o];
        if (e < 0 || e >= static_cast<int>(c.arrows.size())) return fail("identity out of range");
        if (c.arrows[e].src != static_cast<int>(o) || c.arrows[e].dst != static_cast<int>(o))
            return fail("identity of " + c.objects[o] + " is not an endomorphism");
    }
    for (size_t f = 0; f < c.arrows.size(); ++f)
        for (size_t g = 0; g < c.arrows.size(); ++g) {
            bool composable = c.arrows[f].dst == c.arrows[g].src;
            bool present = c.comp.count({static_cast<int>(f), static_cast<int>(g)}) > 0;
            if (composable != present)
                return fail("composition table mismatch at (" + c.arrows[f].id + ", " +
                            c.arrows[g].id + ")");
            if (!present) continue;
            int h = c.comp.at({static_cast<int>(f), static_cast<int>(g)});
            if (c.arrows[h].src != c.arrows[f].src || c.arrows[h].dst != c.arrows[g].dst)
                return fail("composite endpoints wrong at (" + c.arrows[f].id + ", " +
                            c.arrows[g].id + ")");
        }
    for (size_t f = 0; f < c.arrows.size(); ++f) {
        if (c.compose(c.ident[c.arrows[f].src], static_cast<int>(f)) != static_cast<int>(f))
            return fail("left unit law fails at " + c.arrows[f].id);
        if (c.compose(static_cast<int>(f), c.ident[c.arrows[f].dst]) != static_cast<int>(f))
            return fail("right unit law fails at " + c.arrows[f].id);
    }
    for (size_t f = 0; f < c.arrows.size(); ++f)
        for (size_t g = 0; g < c.arrows.size(); ++g) {
            if (c.arrows[f].dst != c.arrows[g].src) continue;
            for (size_t h = 0; h < c.arrows.size(); ++h) {
                if (c.arrows[g].dst != c.arrows[h].src) continue;
                int left = c.compose(c.compose(f, g), h);
                int right = c.compose(f, c.compose(g, h));
                if (left != right)
                    return fail("associativity fails at (" + c.arrows[f].id + ", " +
                                c.arrows[g].id + ", " + c.arrows[h].id + ")");
            }
        }
    return true;
}

int pi0_fincat(const FinCat& c) {
    std::vector<int> parent(c.objects.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (const auto& f : c.arrows) {
        int ra = find(f.src), rb = find(f.dst);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
    int count = 0;
    for (size_t o = 0; o < c.objects.size(); ++o)
        if (find(static_cast<int>(o)) == static_cast<int>(o)) ++count;
    return count;
}

FinCat poset_cat(int n) {
    FinCat c;
    for (int i = 0; i <= n; ++i) c.objects.push_back(std::to_string(i));
    std::map<std::pair<int, int>, int> arrow_at;
    for (int i = 0; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            arrow_at[{i, j}] = static_cast<int>(c.arrows.size());
            c.arrows.push_back({std::to_string(i) + "<" + std::to_string(j), i, j});
        }
    for (int i = 0; i <= n; ++i) c.ident.push_back(arrow_at[{i, i}]);
    for (auto& [ab, f] : arrow_at)
        for (auto& [cd, g] : arrow_at)
            if (ab.second == cd.first) c.comp[{f, g}] = arrow_at[{ab.first, cd.second}];
    return c;
}

FinCat chaotic_groupoid(int n_objects) {
    FinCat c;
    for (int i = 0; i < n_objects; ++i) c.objects.push_back(std::to_string(i));
    std::map<std::pair<int, int>, int> arrow_at;
    for (int i = 0; i < n_objects; ++i)
        for (int j = 0; j < n_objects; ++j) {
            arrow_at[{i, j}] = static_cast<int>(c.arrows.size());
            c.arrows.push_back({std::to_string(i) + ">" + std::to_string(j), i, j});
        }
    for (int i = 0; i < n_objects; ++i) c.ident.push_back(arrow_at[{i, i}]);
    for (auto& [ab, f] : arrow_at)
        for (auto& [cd, g] : arrow_at)
            if (ab.second == cd.first) c.comp[{f, g}] = arrow_at[{ab.first, cd.second}];
    return c;
}

FinCat disjoint_union(const FinCat& a, const FinCat& b) {
    FinCat c;
    int no = static_cast<int>(a.objects.size());
    int na = static_cast<int>(a.arrows.size());
    for (const auto& o : a.objects) c.objects.push_back("l." + o);
    for (const auto& o : b.objects) c.objects.push_back("r." + o);
    for (const auto& f : a.arrows) c.arrows.push_back({"l." + f.id, f.src, f.dst});
    for (const auto& f : b.arrows) c.arrows.push_back({"r." + f.id, f.src + no, f.dst + no});
    for (int e : a.ident) c.ident.push_back(e);
    for (int e : b.ident) c.ident.push_back(e + na);
    for (auto& [fg, h] : a.comp) c.comp[fg] = h;
    for (auto& [fg, h] : b.comp) c.comp[{fg.first + na, fg.second + na}] = h + na;
    return c;
}

FinCat product_cat(const FinCat& a, const FinCat& b) {
    FinCat c;
    int nb = static_cast<int>(b.objects.size());
    int nba = static_cast<int>(b.arrows.size());
    for (const auto& oa : a.objects)
        for (const auto& ob : b.objects) c.objects.push_back("(" + oa + "," + ob + ")");
    for (const auto& fa : a.arrows)
        for (const auto& fb : b.arrows)
            c.arrows.push_back({"(" + fa.id + "," + fb.id + ")", fa.src * nb + fb.src,
                                fa.dst * nb + fb.dst});
    for (size_t oa = 0; oa < a.objects.size(); ++oa)
        for (size_t ob = 0; ob < b.objects.size(); ++ob)
            c.ident.push_back(a.ident[oa] * nba + b.ident[ob]);
    for (auto& [fg1, h1] : a.comp)
        for (auto& [fg2, h2] : b.comp)
            c.comp[{fg1.first * nba + fg2.first, fg1.second * nba + fg2.second}] = h1 * nba + h2;
    return c;
}

FunctorEnumeration enumerate_functors(const FinCat& b, const FinCat& c, std::uint64_t budget) {
    FunctorEnumeration out;
    Functor cur;
    cur.on_objects.assign(b.objects.size(), -1);
    cur.on_arrows.assign(b.arrows.size(), -1);
    std::uint64_t visited = 0;
    bool aborted = false;
    // objects first, then arrows; identities are forced
    std::function<void(size_t)> rec_arrow = [&](size_t f) {
        if (aborted) return;
        if (f == b.arrows.size()) {
            // composition law
            for (auto& [fg, h] : b.comp) {
                int img = c.comp.at({cur.on_arrows[fg.first], cur.on_arrows[fg.second]});
                if (img != cur.on_arrows[h]) return;
            }
            out.functors.push_back(cur);
            return;
        }
        // identity arrows are forced by the object assignment
        int so = b.arrows[f].src, to = b.arrows[f].dst;
        if (static_cast<int>(f) == b.ident[so]) {
            cur.on_arrows[f] = c.ident[cur.on_objects[so]];
            rec_arrow(f + 1);
            return;
        }
        for (size_t g = 0; g < c.arrows.size(); ++g) {
            if (++visited > budget) {
                aborted = true;
                return;
            }
            if (c.arrows[g].src != cur.on_objects[so] || c.arrows[g].dst != cur.on_objects[to])
                continue;
            cur.on_arrows[f] = static_cast<int>(g);
            rec_arrow(f + 1);
            if (aborted) return;
        }
    };
    std::function<void(size_t)> rec_obj = [&](size_t o) {
        if (aborted) return;
        if (o == b.objects.size()) {
            rec_arrow(0);
            return;
        }
        for (size_t t = 0; t < c.objects.size(); ++t) {
            if (++visited > budget) {
                aborted = true;
                return;
            }
            cur.on_objects[o] = static_cast<int>(t);
            rec_obj(o + 1);
            if (aborted) return;
        }
    };
    rec_obj(0);
    out.complete = !aborted;
    return out;
}

std::vector<std::vector<int>> nerve_chains(const FinCat& c, int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        for (size_t o = 0; o < c.objects.size(); ++o) out.push_back({static_cast<int>(o)});
        return out;
    }
    std::vector<int> chain;
    std::function<void()> rec = [&]() {
        if (static_cast<int>(chain.size()) == n) {
            out.push_back(chain);
            return;
        }
        for (size_t f = 0; f < c.arrows.size(); ++f) {
            if (!chain.empty() && c.arrows[chain.back()].dst != c.arrows[f].src) continue;
            chain.push_back(static_cast<int>(f));
            rec();
            chain.pop_back();
        }
    };
    rec();
    return out;
}

}  // namespace catkit
