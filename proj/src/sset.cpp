#include "catkit/sset.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace catkit {

Word word_insert(Word w, int a) {
    // s_a s_b = s_{b+1} s_a for a <= b, so a bubbles rightward while the
    // entries it passes are bumped by one.
    Word out;
    size_t k = 0;
    int cur = a;
    while (k < w.size() && cur <= w[k]) {
        out.push_back(w[k] + 1);
        ++k;
    }
    out.push_back(cur);
    for (; k < w.size(); ++k) out.push_back(w[k]);
    return out;
}

Expr SSet::face_of(const Expr& e, int i) const {
    // Push d_i through the degeneracy word:
    //   d_i s_j = s_{j-1} d_i   (i < j)
    //   d_i s_j = id            (i == j || i == j+1)
    //   d_i s_j = s_j d_{i-1}   (i > j+1)
    Word out;
    int cur = i;
    for (size_t k = 0; k < e.word.size(); ++k) {
        int j = e.word[k];
        if (cur < j) {
            out.push_back(j - 1);
        } else if (cur == j || cur == j + 1) {
            for (size_t t = k + 1; t < e.word.size(); ++t) out.push_back(e.word[t]);
            return Expr{e.base_dim, e.base, std::move(out)};
        } else {
            out.push_back(j);
            --cur;
        }
    }
    if (e.base_dim == 0)
        throw std::logic_error("face_of: face of a vertex requested");
    const Expr& f = nd_face[e.base_dim][e.base][cur];
    Word w = f.word;
    for (auto it = out.rbegin(); it != out.rend(); ++it) w = word_insert(std::move(w), *it);
    return Expr{f.base_dim, f.base, std::move(w)};
}

Expr SSet::degen_of(const Expr& e, int i) {
    return Expr{e.base_dim, e.base, word_insert(e.word, i)};
}

bool SSet::empty() const {
    for (const auto& level : ids)
        if (!level.empty()) return false;
    return true;
}

int SSet::index_of(const Expr& e) const {
    int m = e.dim();
    auto it = elem_index[m].find(e);
    if (it == elem_index[m].end()) throw std::logic_error("index_of: unknown simplex");
    return it->second;
}

std::string SSet::expr_string(const Expr& e) const {
    std::ostringstream os;
    for (int i : e.word) os << 's' << i << ' ';
    os << ids[e.base_dim][e.base];
    return os.str();
}

std::optional<int> SSet::find_id(int d, const std::string& id) const {
    if (d < 0 || d >= static_cast<int>(ids.size())) return std::nullopt;
    for (size_t j = 0; j < ids[d].size(); ++j)
        if (ids[d][j] == id) return static_cast<int>(j);
    return std::nullopt;
}

namespace {

// Enumerates the valid degeneracy words of length len on a base of dimension
// base_dim: strictly decreasing, and entry j (0-based from the left) at most
// base_dim + (len - 1 - j).
void enum_words(int base_dim, int len, int pos, int max_head, Word& acc,
                const std::function<void(const Word&)>& emit) {
    if (pos == len) {
        emit(acc);
        return;
    }
    int cap = std::min(max_head, base_dim + (len - 1 - pos));
    for (int i = cap; i >= 0; --i) {
        acc.push_back(i);
        enum_words(base_dim, len, pos + 1, i - 1, acc, emit);
        acc.pop_back();
    }
}

}  // namespace

void SSet::finalize() {
    int D = trunc_dim;
    ids.resize(D + 1);
    nd_face.resize(D + 1);
    elems.assign(D + 1, {});
    elem_index.assign(D + 1, {});
    for (int m = 0; m <= D; ++m) {
        for (int b = 0; b <= m; ++b) {
            int len = m - b;
            for (int j = 0; j < dim_count(b); ++j) {
                Word acc;
                enum_words(b, len, 0, m - 1, acc, [&](const Word& w) {
                    elems[m].push_back(Expr{b, j, w});
                });
            }
        }
        std::sort(elems[m].begin(), elems[m].end());
        for (size_t e = 0; e < elems[m].size(); ++e) elem_index[m][elems[m][e]] = static_cast<int>(e);
    }
    eface.assign(D + 1, {});
    edegen.assign(D + 1, {});
    for (int m = 1; m <= D; ++m) {
        eface[m].assign(m + 1, std::vector<int>(elems[m].size()));
        for (int i = 0; i <= m; ++i)
            for (size_t e = 0; e < elems[m].size(); ++e) {
                Expr f = face_of(elems[m][e], i);
                auto it = elem_index[m - 1].find(f);
                if (it == elem_index[m - 1].end())
                    throw std::runtime_error("finalize: face of " + expr_string(elems[m][e]) +
                                             " is not a simplex of the object");
                eface[m][i][e] = it->second;
            }
    }
    for (int m = 0; m < D; ++m) {
        edegen[m].assign(m + 1, std::vector<int>(elems[m].size()));
        for (int i = 0; i <= m; ++i)
            for (size_t e = 0; e < elems[m].size(); ++e)
                edegen[m][i][e] = elem_index[m + 1].at(degen_of(elems[m][e], i));
    }
}

ValidationReport SSet::validate() const {
    ValidationReport rep;
    int D = trunc_dim;
    // structural checks on the raw data first, so broken inputs are reported
    // rather than crashing the table construction
    for (int d = 1; d <= D; ++d) {
        for (int j = 0; j < dim_count(d); ++j) {
            if (static_cast<int>(nd_face[d][j].size()) != d + 1) {
                rep.fail("simplex " + ids[d][j] + " has " + std::to_string(nd_face[d][j].size()) +
                         " faces, expected " + std::to_string(d + 1));
                continue;
            }
            for (int i = 0; i <= d; ++i) {
                const Expr& f = nd_face[d][j][i];
                if (f.dim() != d - 1) {
                    rep.fail("face " + std::to_string(i) + " of " + ids[d][j] + " has dimension " +
                             std::to_string(f.dim()) + ", expected " + std::to_string(d - 1));
                    continue;
                }
                if (f.base_dim < 0 || f.base_dim > D || f.base < 0 || f.base >= dim_count(f.base_dim)) {
                    rep.fail("face " + std::to_string(i) + " of " + ids[d][j] +
                             " references a missing simplex");
                    continue;
                }
                for (size_t k = 0; k < f.word.size(); ++k) {
                    int cap = f.base_dim + static_cast<int>(f.word.size() - 1 - k);
                    if (f.word[k] < 0 || f.word[k] > cap)
                        rep.fail("face " + std::to_string(i) + " of " + ids[d][j] +
                                 " has an out-of-range degeneracy index");
                    if (k + 1 < f.word.size() && f.word[k] <= f.word[k + 1])
                        rep.fail("face " + std::to_string(i) + " of " + ids[d][j] +
                                 " has a non-decreasing degeneracy word");
                }
            }
        }
    }
    if (!rep.ok) return rep;
    SSet work = *this;
    work.finalize();
    // d_i d_j = d_{j-1} d_i (i < j) on every simplex of every dimension <= D.
    for (int m = 2; m <= D; ++m) {
        for (const Expr& e : work.elems[m]) {
            for (int j = 1; j <= m; ++j)
                for (int i = 0; i < j; ++i) {
                    Expr a = work.face_of(work.face_of(e, j), i);
                    Expr b = work.face_of(work.face_of(e, i), j - 1);
                    if (a != b)
                        rep.fail("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                 " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                                 " on " + work.expr_string(e));
                }
        }
    }
    for (int m = 0; m < D; ++m)
        for (const Expr& e : work.elems[m])
            for (int i = 0; i <= m; ++i)
                if (work.face_of(degen_of(e, i), i) != e)
                    rep.fail("d_i s_i != id on " + work.expr_string(e));
    return rep;
}

SSetBuilder::SSetBuilder(int trunc_dim) : x_(std::make_shared<SSet>()) {
    x_->trunc_dim = trunc_dim;
    x_->ids.resize(trunc_dim + 1);
    x_->nd_face.resize(trunc_dim + 1);
}

int SSetBuilder::add(int d, const std::string& id, const std::vector<Expr>& faces) {
    if (d < 0 || d > x_->trunc_dim) throw std::invalid_argument("SSetBuilder::add: bad dimension");
    if (d >= 1 && static_cast<int>(faces.size()) != d + 1)
        throw std::invalid_argument("SSetBuilder::add: need d+1 faces for " + id);
    if (x_->find_id(d, id)) throw std::invalid_argument("SSetBuilder::add: duplicate id " + id);
    x_->ids[d].push_back(id);
    if (d >= 1) x_->nd_face[d].push_back(faces);
    return static_cast<int>(x_->ids[d].size()) - 1;
}

Expr SSetBuilder::vertex(const std::string& id) const { return simplex(0, id); }

Expr SSetBuilder::simplex(int d, const std::string& id) const {
    auto j = x_->find_id(d, id);
    if (!j) throw std::invalid_argument("SSetBuilder: unknown id " + id);
    return Expr{d, *j, {}};
}

void SSetBuilder::set_coskeletal(int n) { x_->coskeletal_above = n; }

SSetPtr SSetBuilder::build() {
    x_->finalize();
    return x_;
}

SSetPtr SSetBuilder::build_raw() { return x_; }

namespace {

std::string subset_name(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += std::to_string(v);
    return s;
}

void add_subsets(SSetBuilder& b, int n, int D, int max_card,
                 const std::function<bool(const std::vector<int>&)>& keep) {
    std::vector<std::vector<std::vector<int>>> by_dim(D + 1);
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        int d = static_cast<int>(cur.size()) - 1;
        if (d >= 0 && d <= D && d < max_card && keep(cur)) by_dim[d].push_back(cur);
        if (d + 1 >= std::min(D + 1, max_card)) return;
        for (int v = start; v <= n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    for (int d = 0; d <= D; ++d)
        for (const auto& vs : by_dim[d]) {
            std::vector<Expr> faces;
            if (d >= 1)
                for (int i = 0; i <= d; ++i) {
                    std::vector<int> f = vs;
                    f.erase(f.begin() + i);
                    faces.push_back(b.simplex(d - 1, subset_name(f)));
                }
            b.add(d, subset_name(vs), faces);
        }
}

}  // namespace

SSetPtr standard_simplex(int n, int D) {
    SSetBuilder b(D);
    add_subsets(b, n, D, n + 1, [](const auto&) { return true; });
    auto x = b.build();
    return x;
}

SSetPtr boundary_simplex(int n, int D) {
    SSetBuilder b(D);
    add_subsets(b, n, D, n, [](const auto&) { return true; });
    return b.build();
}

SSetPtr horn(int n, int k, int D) {
    SSetBuilder b(D);
    // keep proper subsets that miss some vertex other than k
    add_subsets(b, n, D, n, [&](const std::vector<int>& vs) {
        if (static_cast<int>(vs.size()) == n) {
            int missing = (n * (n + 1)) / 2;
            for (int v : vs) missing -= v;
            return missing != k;
        }
        return true;
    });
    return b.build();
}

SSetPtr discrete_sset(const std::vector<std::string>& points, int D) {
    SSetBuilder b(D);
    for (const auto& p : points) b.add(0, p);
    return b.build();
}

SSetPtr empty_sset(int D) { return SSetBuilder(D).build(); }

SSetPtr chaotic_sset(int k, int D) {
    SSetBuilder b(D);
    // Expr of an arbitrary tuple: strip adjacent repeats into a degeneracy word
    auto expr_of_tuple = [&](const std::vector<int>& t) {
        std::vector<int> distinct;
        Word word;
        for (size_t i = 0; i < t.size(); ++i) {
            if (i + 1 < t.size() && t[i] == t[i + 1])
                word.push_back(static_cast<int>(i));
            else
                distinct.push_back(t[i]);
        }
        std::reverse(word.begin(), word.end());
        Expr base = b.simplex(static_cast<int>(distinct.size()) - 1, subset_name(distinct));
        return Expr{base.base_dim, base.base, word};
    };
    std::vector<int> t;
    std::function<void(int)> rec = [&](int d) {
        if (d > 0) {
            // emit all alternating tuples of length d+1 (no adjacent repeats)
            std::function<void()> fill = [&]() {
                if (static_cast<int>(t.size()) == d + 1) {
                    std::vector<Expr> faces;
                    for (int i = 0; i <= d; ++i) {
                        std::vector<int> f = t;
                        f.erase(f.begin() + i);
                        faces.push_back(expr_of_tuple(f));
                    }
                    b.add(d, subset_name(t), faces);
                    return;
                }
                for (int v = 0; v < k; ++v) {
                    if (!t.empty() && t.back() == v) continue;
                    t.push_back(v);
                    fill();
                    t.pop_back();
                }
            };
            fill();
        } else {
            for (int v = 0; v < k; ++v) b.add(0, std::to_string(v));
        }
        if (d < D) rec(d + 1);
    };
    rec(0);
    b.set_coskeletal(0);
    return b.build();
}

std::vector<int> vertex_sequence(const SSet& x, const Expr& e) {
    int d = e.dim();
    std::vector<int> out(d + 1);
    for (int j = 0; j <= d; ++j) {
        Expr cur = e;
        for (int i = d; i > j; --i) cur = x.face_of(cur, i);
        for (int i = 0; i < j; ++i) cur = x.face_of(cur, 0);
        out[j] = std::stoi(x.ids[0][cur.base]);
    }
    return out;
}

Expr simplex_with_vertices(const SSet& x, const std::vector<int>& seq) {
    std::vector<int> distinct;
    Word word;
    for (size_t i = 0; i < seq.size(); ++i) {
        if (i + 1 < seq.size() && seq[i] == seq[i + 1])
            word.push_back(static_cast<int>(i));
        else
            distinct.push_back(seq[i]);
    }
    std::reverse(word.begin(), word.end());
    std::string base_id;
    for (int v : distinct) base_id += std::to_string(v);
    auto j = x.find_id(static_cast<int>(distinct.size()) - 1, base_id);
    if (!j) throw std::logic_error("simplex_with_vertices: missing base " + base_id);
    return Expr{static_cast<int>(distinct.size()) - 1, *j, word};
}

SSetPtr extend_truncation(const SSetPtr& x, int new_trunc) {
    if (new_trunc <= x->trunc_dim) return x;
    if (!x->coskeletal_above || *x->coskeletal_above > x->trunc_dim)
        throw std::invalid_argument("extend_truncation: object is not coskeletal within its truncation");
    auto y = std::make_shared<SSet>(*x);
    y->trunc_dim = x->trunc_dim;  // grown one dimension at a time below
    for (int m = x->trunc_dim + 1; m <= new_trunc; ++m) {
        // m-simplices of the extension = maps from the boundary of Delta[m],
        // i.e. tuples (f_0,...,f_m) of (m-1)-simplices with d_i f_j = d_{j-1} f_i.
        SSet cur = *y;
        cur.trunc_dim = m;
        cur.ids.resize(m + 1);
        cur.nd_face.resize(m + 1);
        const auto& lower = y->elems[m - 1];
        std::vector<std::vector<Expr>> tuples;
        std::vector<Expr> acc;
        std::function<void(int)> rec = [&](int i) {
            if (i == m + 1) {
                tuples.push_back(acc);
                return;
            }
            for (const Expr& cand : lower) {
                bool ok = true;
                for (int a = 0; a < i && ok; ++a)
                    if (y->face_of(acc[a], i - 1) != y->face_of(cand, a)) ok = false;
                if (!ok) continue;
                acc.push_back(cand);
                rec(i + 1);
                acc.pop_back();
            }
        };
        rec(0);
        // discard tuples realized by degeneracies of (m-1)-simplices
        std::set<std::vector<Expr>> degenerate_tuples;
        for (const Expr& e : lower) {
            for (int i = 0; i <= m - 1; ++i) {
                Expr se = SSet::degen_of(e, i);
                std::vector<Expr> t;
                for (int a = 0; a <= m; ++a) {
                    // face of s_i e computed by the word calculus
                    t.push_back(y->face_of(se, a));
                }
                degenerate_tuples.insert(t);
            }
        }
        int counter = 0;
        for (const auto& t : tuples) {
            if (degenerate_tuples.count(t)) continue;
            cur.ids[m].push_back("cosk" + std::to_string(m) + "_" + std::to_string(counter++));
            cur.nd_face[m].push_back(t);
        }
        auto next = std::make_shared<SSet>(std::move(cur));
        next->finalize();
        y = next;
    }
    return y;
}

}  // namespace catkit
