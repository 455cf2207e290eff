#include "flagrep/schubert.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace flagrep::schubert {

using polyalg::Exp;
using polyalg::VarSpacePtr;
using rootsys::is_minimal_rep;
using rootsys::weyl_from_word;
using rootsys::weyl_mul;
using rootsys::weyl_reflection;
using rootsys::weyl_simple;

namespace {

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

std::vector<int> mat_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(n * n, 0);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            int aik = a[i * n + k];
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) r[i * n + j] += aik * b[k * n + j];
        }
    return r;
}

VarSpacePtr xvars(int k) {
    static std::vector<VarSpacePtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= k)
        cache.push_back(polyalg::make_vars("x", static_cast<int>(cache.size())));
    return cache[k];
}

std::string word_str(const WeylElement& w) {
    if (w.word.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < w.word.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.word[i]);
    }
    return s;
}

}  // namespace

// ---- SchubertClass -----------------------------------------------------

void SchubertClass::add(const WeylElement& w, const Rat& c) {
    if (c == 0) return;
    auto it = support.find(w);
    if (it == support.end()) {
        support.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) support.erase(it);
    }
}

SchubertClass& SchubertClass::operator+=(const SchubertClass& o) {
    if (!(tag == o.tag)) throw Error("sum of classes on different spaces");
    for (const auto& [w, c] : o.support) add(w, c);
    return *this;
}

SchubertClass SchubertClass::operator*(const Rat& c) const {
    SchubertClass r;
    r.tag = tag;
    if (c == 0) return r;
    for (const auto& [w, k] : support) {
        Rat v = k * c;
        v.canonicalize();
        r.support.emplace(w, v);
    }
    return r;
}

int SchubertClass::degree() const {
    if (support.empty()) return -1;
    return support.begin()->first.length;
}

bool SchubertClass::is_homogeneous() const {
    if (support.empty()) return true;
    int d = support.begin()->first.length;
    for (const auto& [w, c] : support)
        if (w.length != d) return false;
    return true;
}

std::string SchubertClass::str() const {
    if (support.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : support) {
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1) out << rat_str(a) << "*";
        out << "e[" << word_str(w) << "]";
    }
    return out.str();
}

// ---- WeylBall ----------------------------------------------------------

WeylBall::WeylBall(const RootDatum& rd, int max_length) : rd_(rd) {
    if (max_length > rd.num_pos_roots()) max_length = rd.num_pos_roots();
    if (max_length < 0) max_length = 0;
    max_length_ = max_length;
    auto levels = rootsys::enumerate_weyl(rd_, max_length_);
    level_offsets_.push_back(0);
    for (auto& lvl : levels.by_length) {
        for (auto& w : lvl) elements_.push_back(std::move(w));
        level_offsets_.push_back(static_cast<int>(elements_.size()));
    }
    while (static_cast<int>(level_offsets_.size()) < max_length_ + 2)
        level_offsets_.push_back(static_cast<int>(elements_.size()));
    VecHash h;
    for (int i = 0; i < size(); ++i) index_[h(elements_[i].act_w)].push_back(i);

    int npos = rd_.num_pos_roots();
    std::vector<std::vector<int>> refl(npos);
    for (int p = 0; p < npos; ++p) refl[p] = weyl_reflection(rd_, p).act_w;

    edges_.resize(size());
    int n = rd_.rank;
    for (int idx = 0; idx < size(); ++idx) {
        if (elements_[idx].length >= max_length_) continue;
        for (int p = 0; p < npos; ++p) {
            auto v = mat_mul(n, elements_[idx].act_w, refl[p]);
            int j = index_of_action(v);
            if (j >= 0 && elements_[j].length == elements_[idx].length + 1)
                edges_[idx].push_back(Edge{j, p});
        }
    }
}

int WeylBall::index_of_action(const std::vector<int>& act_w) const {
    VecHash h;
    auto it = index_.find(h(act_w));
    if (it == index_.end()) return -1;
    for (int idx : it->second)
        if (elements_[idx].act_w == act_w) return idx;
    return -1;
}

int WeylBall::index_of(const WeylElement& w) const { return index_of_action(w.act_w); }

WeylBall::Sparse WeylBall::mult_simple(int i0, const Sparse& c) const {
    std::map<int, Rat> acc;
    for (const auto& [idx, coeff] : c) {
        for (const Edge& e : edges_[idx]) {
            int k = rd_.pos_coroot[e.root][i0];
            if (k != 0) acc[e.target] += coeff * k;
        }
    }
    Sparse out;
    out.reserve(acc.size());
    for (auto& [idx, coeff] : acc)
        if (coeff != 0) out.emplace_back(idx, std::move(coeff));
    return out;
}

SchubertClass WeylBall::to_class(const Sparse& c, const std::vector<int>& removed_nodes) const {
    SchubertClass out;
    out.tag = SpaceTag{rd_.type, rd_.rank, removed_nodes};
    std::sort(out.tag.removed_nodes.begin(), out.tag.removed_nodes.end());
    for (const auto& [idx, coeff] : c) {
        const WeylElement& w = elements_[idx];
        if (!removed_nodes.empty() && !is_minimal_rep(rd_, removed_nodes, w))
            throw Error("support is not contained in the minimal coset representatives "
                        "(non-invariant input?): offending element [" + word_str(w) + "]");
        out.add(w, coeff);
    }
    return out;
}

WeylBall::Sparse WeylBall::from_class(const SchubertClass& c) const {
    Sparse out;
    for (const auto& [w, coeff] : c.support) {
        int idx = index_of(w);
        if (idx < 0) throw Error("class element outside the enumerated ball");
        out.emplace_back(idx, coeff);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// ---- Duan operator -----------------------------------------------------

DuanMatrix duan_matrix(const RootDatum& rd, const std::vector<int>& word) {
    int k = static_cast<int>(word.size());
    WeylElement w = weyl_from_word(rd, word);
    if (w.length != k) throw Error("duan_matrix: word is not reduced");
    DuanMatrix a;
    a.size = k;
    a.a.assign(k, std::vector<int>(k, 0));
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q)
            a.a[p][q] = -rd.cartan[word[q] - 1][word[p] - 1];
    return a;
}

namespace {

Rat duan_t_rec(const std::vector<std::vector<int>>& a, int k, const Poly& h) {
    if (h.is_zero()) return 0;
    if (k == 1) return h.coeff(Exp{1});
    auto small = xvars(k - 1);
    std::map<int, Poly> parts;  // exponent of x_k -> remaining factor
    for (const auto& [e, c] : h.terms()) {
        int r = e[k - 1];
        if (r < 1) continue;
        Exp e2(e.begin(), e.end() - 1);
        auto it = parts.find(r);
        if (it == parts.end()) it = parts.emplace(r, Poly(small)).first;
        it->second.add_term(e2, c);
    }
    if (parts.empty()) return 0;
    Poly s(small);
    for (int p = 0; p + 1 < k; ++p)
        if (a[p][k - 1] != 0) s += Poly::variable(small, p) * Rat(a[p][k - 1]);
    Rat acc = 0;
    Poly spow(small, 1);
    int cur = 1;
    for (auto& [r, hr] : parts) {
        while (cur < r) { spow = spow * s; ++cur; }
        acc += duan_t_rec(a, k - 1, hr * spow);
    }
    return acc;
}

}  // namespace

Rat duan_operator(const DuanMatrix& a, const Poly& h) {
    int d = 0;
    if (!h.is_homogeneous(&d) || (!h.is_zero() && d != a.size))
        throw Error("duan_operator: input must be homogeneous of degree equal to the matrix size");
    if (static_cast<int>(h.vars()->names.size()) != a.size)
        throw Error("duan_operator: variable count must equal the matrix size");
    if (a.size == 0) return h.constant_term();
    return duan_t_rec(a.a, a.size, h);
}

namespace {

// All subset products s_L of a fixed reduced word, bucketed by |L| and the
// resulting element; values are the square-free monomial sums sum_L x_L.
struct SubsetTable {
    VarSpacePtr xs;
    std::vector<std::unordered_map<std::vector<int>, Poly, VecHash>> by_size;
};

SubsetTable build_subset_table(const RootDatum& rd, const std::vector<int>& word) {
    int k = static_cast<int>(word.size());
    int n = rd.rank;
    SubsetTable t;
    t.xs = xvars(k);
    t.by_size.resize(k + 1);
    std::vector<std::vector<int>> simple(k);
    for (int p = 0; p < k; ++p) simple[p] = weyl_simple(rd, word[p]).act_w;

    struct Frame {
        int pos;
        std::vector<int> act;
        Exp exp;
        int count;
    };
    std::vector<int> id(n * n, 0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1;
    std::vector<Frame> stack;
    stack.push_back(Frame{0, id, Exp(k, 0), 0});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        if (f.pos == k) {
            auto it = t.by_size[f.count].find(f.act);
            if (it == t.by_size[f.count].end())
                it = t.by_size[f.count].emplace(f.act, Poly(t.xs)).first;
            it->second.add_term(f.exp, 1);
            continue;
        }
        Frame inc;
        inc.pos = f.pos + 1;
        inc.act = mat_mul(n, f.act, simple[f.pos]);
        inc.exp = f.exp;
        inc.exp[f.pos] = 1;
        inc.count = f.count + 1;
        f.pos += 1;
        stack.push_back(std::move(f));  // exclude
        stack.push_back(std::move(inc));
    }
    return t;
}

long duan_constant_from_table(const RootDatum& rd, const SubsetTable& table,
                              const std::vector<int>& word, const WeylElement& u,
                              const WeylElement& v) {
    if (u.length >= static_cast<int>(table.by_size.size()) ||
        v.length >= static_cast<int>(table.by_size.size()))
        return 0;
    auto itu = table.by_size[u.length].find(u.act_w);
    if (itu == table.by_size[u.length].end()) return 0;
    auto itv = table.by_size[v.length].find(v.act_w);
    if (itv == table.by_size[v.length].end()) return 0;
    Rat val = duan_operator(duan_matrix(rd, word), itu->second * itv->second);
    if (!rat_is_integer(val)) throw Error("structure constant is not an integer");
    long c = rat_to_long(val);
    if (c < 0)
        throw Error("negative structure constant c^{" + word_str(weyl_from_word(rd, word)) +
                    "}: positivity violated");
    return c;
}

}  // namespace

long structure_constant_with_word(const RootDatum& rd, const WeylElement& u,
                                  const WeylElement& v, const std::vector<int>& word) {
    if (static_cast<int>(word.size()) != u.length + v.length)
        throw Error("structure_constant_with_word: length mismatch");
    SubsetTable table = build_subset_table(rd, word);
    return duan_constant_from_table(rd, table, word, u, v);
}

ConstantResult structure_constant(const RootDatum& rd, const WeylElement& u,
                                  const WeylElement& v, const WeylElement& w,
                                  ConstantCache* cache) {
    if (u.length + v.length != w.length) return ConstantResult{0, true};
    if (cache) {
        auto key = ConstantCache::key(rd, w.word, u.word, v.word);
        if (auto hit = cache->get(key)) return ConstantResult{*hit, false};
    }
    long c = structure_constant_with_word(rd, u, v, w.word);
    if (cache) cache->put(rd, w.word, u.word, v.word, c);
    return ConstantResult{c, false};
}

// ---- products ----------------------------------------------------------

SchubertClass chevalley_multiply(const RootDatum& rd, int i, const SchubertClass& cls) {
    if (i < 1 || i > rd.rank) throw Error("chevalley_multiply: index out of range");
    if (!cls.tag.removed_nodes.empty())
        throw Error("chevalley_multiply operates on G/B classes");
    SchubertClass out;
    out.tag = cls.tag;
    int npos = rd.num_pos_roots();
    for (const auto& [w, c] : cls.support) {
        for (int p = 0; p < npos; ++p) {
            int k = rd.pos_coroot[p][i - 1];
            if (k == 0) continue;
            WeylElement v = weyl_mul(rd, w, weyl_reflection(rd, p));
            if (v.length == w.length + 1) out.add(v, c * k);
        }
    }
    return out;
}

CohomologyContext::CohomologyContext(const RootDatum& rd, int ceiling) : ball_(rd, ceiling) {
    decomp_.resize(ball_.size());
}

int CohomologyContext::degree_hint(const WeylBall::Sparse& c) const {
    int d = 0;
    for (const auto& [idx, k] : c) d = std::max(d, ball_.length(idx));
    return d;
}

WeylBall::Sparse CohomologyContext::mult_simple_duan(int i0, const WeylBall::Sparse& c,
                                                     ConstantCache* cache) {
    const RootDatum& rd = datum();
    WeylElement s = weyl_simple(rd, i0 + 1);
    std::map<int, Rat> acc;
    std::unordered_map<int, SubsetTable> tables;
    for (const auto& [uidx, coeff] : c) {
        const WeylElement& u = ball_.element(uidx);
        // c^w_{u, s_i} vanishes unless w covers u: enumerate the edge targets
        for (const auto& e : ball_.edges_up(uidx)) {
            const WeylElement& w = ball_.element(e.target);
            long val = 0;
            bool have = false;
            if (cache) {
                auto key = ConstantCache::key(rd, w.word, u.word, s.word);
                if (auto hit = cache->get(key)) {
                    val = *hit;
                    have = true;
                }
            }
            if (!have) {
                auto it = tables.find(e.target);
                if (it == tables.end())
                    it = tables.emplace(e.target, build_subset_table(rd, w.word)).first;
                val = duan_constant_from_table(rd, it->second, w.word, u, s);
                if (cache) cache->put(rd, w.word, u.word, s.word, val);
            }
            if (val != 0) acc[e.target] += coeff * val;
        }
    }
    WeylBall::Sparse out;
    for (auto& [idx, coeff] : acc)
        if (coeff != 0) out.emplace_back(idx, std::move(coeff));
    return out;
}

SchubertClass CohomologyContext::borel_image(const Poly& f, const std::vector<int>& removed_nodes,
                                             Engine engine, int jobs, ConstantCache* cache) {
    const RootDatum& rd = datum();
    if (static_cast<int>(f.vars()->names.size()) != rd.rank)
        throw Error("borel_image: polynomial must live in the omega-variables");
    if (f.vars()->laurent) throw Error("borel_image: input must be an ordinary polynomial");
    if (f.degree() > ceiling())
        throw Error("borel_image: degree " + std::to_string(f.degree()) +
                    " exceeds the length ceiling " + std::to_string(ceiling()) +
                    " (raise the ceiling to opt in)");

    // Monomial ladder: class(m) = eps_{s_i} . class(m / w_i) for the smallest
    // variable i dividing m; layers processed by degree and evicted.
    std::vector<std::vector<Exp>> layers(f.degree() + 1);
    {
        std::set<Exp> needed;
        for (const auto& [e, c] : f.terms()) {
            Exp m = e;
            for (;;) {
                if (!needed.insert(m).second) break;
                int i = -1;
                for (int k = 0; k < rd.rank; ++k)
                    if (m[k] > 0) { i = k; break; }
                if (i < 0) break;
                m[i] -= 1;
            }
        }
        for (const auto& m : needed) {
            int d = 0;
            for (int x : m) d += x;
            layers[d].push_back(m);
        }
        for (auto& l : layers) std::sort(l.begin(), l.end());
    }

    std::map<int, Rat> result_acc;
    auto take = [&](const Exp& m, const WeylBall::Sparse& cls) {
        Rat c = f.coeff(m);
        if (c == 0) return;
        for (const auto& [idx, k] : cls) result_acc[idx] += c * k;
    };

    std::map<Exp, WeylBall::Sparse> prev;
    {
        Exp zero(rd.rank, 0);
        WeylBall::Sparse unit{{0, Rat(1)}};
        take(zero, unit);
        prev.emplace(zero, std::move(unit));
    }
    for (int d = 1; d <= f.degree(); ++d) {
        const auto& layer = layers[d];
        std::vector<WeylBall::Sparse> out(layer.size());
        auto work = [&](size_t a, size_t b) {
            for (size_t li = a; li < b; ++li) {
                Exp m = layer[li];
                int i = -1;
                for (int k = 0; k < rd.rank; ++k)
                    if (m[k] > 0) { i = k; break; }
                Exp parent = m;
                parent[i] -= 1;
                const auto& base = prev.at(parent);
                out[li] = (engine == Engine::chevalley) ? ball_.mult_simple(i, base)
                                                        : mult_simple_duan(i, base, cache);
            }
        };
        int width = std::max(1, jobs);
        if (width == 1 || layer.size() < 4 || engine == Engine::duan) {
            work(0, layer.size());
        } else {
            std::vector<std::thread> threads;
            size_t chunk = (layer.size() + width - 1) / width;
            for (int t = 0; t < width; ++t) {
                size_t a = t * chunk, b = std::min(layer.size(), (t + 1) * chunk);
                if (a < b) threads.emplace_back(work, a, b);
            }
            for (auto& th : threads) th.join();
        }
        std::map<Exp, WeylBall::Sparse> cur;
        for (size_t li = 0; li < layer.size(); ++li) {
            take(layer[li], out[li]);
            cur.emplace(layer[li], std::move(out[li]));
        }
        prev = std::move(cur);
    }
    WeylBall::Sparse result;
    for (auto& [idx, c] : result_acc)
        if (c != 0) result.emplace_back(idx, std::move(c));
    return ball_.to_class(result, removed_nodes);
}

const CohomologyContext::Decomp& CohomologyContext::decomposition(int idx) {
    if (decomp_[idx]) return *decomp_[idx];
    const auto& offs = ball_.level_offsets();
    int m = ball_.length(idx);
    if (m < 1) throw Error("decomposition of the unit class");
    int lo = offs[m], hi = offs[m + 1];
    int plo = offs[m - 1], phi = offs[m];
    int dim = hi - lo;
    int rank = datum().rank;

    std::vector<std::pair<int, int>> pairs;  // (i0, v)
    std::vector<std::vector<Rat>> rows;
    for (int v = plo; v < phi; ++v) {
        WeylBall::Sparse base{{v, Rat(1)}};
        for (int i0 = 0; i0 < rank; ++i0) {
            auto prod = ball_.mult_simple(i0, base);
            if (prod.empty()) continue;
            std::vector<Rat> dense(dim, 0);
            for (const auto& [w, c] : prod) dense[w - lo] = c;
            rows.push_back(std::move(dense));
            pairs.emplace_back(i0, v);
        }
    }
    int nrows = static_cast<int>(rows.size());
    std::vector<std::vector<Rat>> cmb(nrows, std::vector<Rat>(nrows, 0));
    for (int r = 0; r < nrows; ++r) cmb[r][r] = 1;
    std::vector<int> pivot_of_col(dim, -1);
    int rrow = 0;
    for (int col = 0; col < dim && rrow < nrows; ++col) {
        int piv = -1;
        for (int r = rrow; r < nrows; ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rrow]);
        std::swap(cmb[piv], cmb[rrow]);
        Rat p = rows[rrow][col];
        for (int j = 0; j < dim; ++j) rows[rrow][j] /= p;
        for (int j = 0; j < nrows; ++j) cmb[rrow][j] /= p;
        for (int r = 0; r < nrows; ++r) {
            if (r == rrow || rows[r][col] == 0) continue;
            Rat fct = rows[r][col];
            for (int j = 0; j < dim; ++j) rows[r][j] -= fct * rows[rrow][j];
            for (int j = 0; j < nrows; ++j) cmb[r][j] -= fct * cmb[rrow][j];
        }
        pivot_of_col[col] = rrow;
        ++rrow;
    }
    // express the indicator of idx through the reduced rows
    int target_col = idx - lo;
    std::vector<Rat> coeffs(nrows, 0);
    std::vector<Rat> residue(dim, 0);
    residue[target_col] = 1;
    for (int col = 0; col < dim; ++col) {
        if (residue[col] == 0) continue;
        int r = pivot_of_col[col];
        if (r < 0) throw Error("degree-2 generation failed: no pivot column");
        Rat fct = residue[col];
        coeffs[r] = fct;
        for (int j = 0; j < dim; ++j) residue[j] -= fct * rows[r][j];
    }
    for (int j = 0; j < dim; ++j)
        if (residue[j] != 0) throw Error("degree-2 generation failed: inconsistent system");

    Decomp d;
    std::map<std::pair<int, int>, Rat> merged;
    for (int r = 0; r < nrows; ++r) {
        if (coeffs[r] == 0) continue;
        for (int orig = 0; orig < nrows; ++orig) {
            Rat c = coeffs[r] * cmb[r][orig];
            if (c != 0) merged[pairs[orig]] += c;
        }
    }
    for (auto& [k, c] : merged)
        if (c != 0) d.parts.emplace_back(c, k.first, k.second);
    decomp_[idx] = std::move(d);
    return *decomp_[idx];
}

WeylBall::Sparse CohomologyContext::mult_by_class(const WeylBall::Sparse& a,
                                                  const WeylBall::Sparse& b) {
    if (degree_hint(a) + degree_hint(b) > ceiling())
        throw Error("cup product exceeds the length ceiling " + std::to_string(ceiling()));
    std::map<int, WeylBall::Sparse> memo;
    std::function<const WeylBall::Sparse&(int)> eval = [&](int u) -> const WeylBall::Sparse& {
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        WeylBall::Sparse r;
        if (ball_.length(u) == 0) {
            r = b;
        } else {
            const Decomp& d = decomposition(u);
            std::map<int, Rat> acc;
            for (const auto& [c, i0, v] : d.parts) {
                auto part = ball_.mult_simple(i0, eval(v));
                for (const auto& [idx, k] : part) acc[idx] += c * k;
            }
            for (auto& [idx, c] : acc)
                if (c != 0) r.emplace_back(idx, std::move(c));
        }
        return memo.emplace(u, std::move(r)).first->second;
    };
    std::map<int, Rat> acc;
    for (const auto& [u, cu] : a)
        for (const auto& [idx, k] : eval(u)) acc[idx] += cu * k;
    WeylBall::Sparse out;
    for (auto& [idx, c] : acc)
        if (c != 0) out.emplace_back(idx, std::move(c));
    return out;
}

SchubertClass CohomologyContext::cup_product(const SchubertClass& a, const SchubertClass& b,
                                             Engine engine, ConstantCache* cache) {
    if (!(a.tag == b.tag)) throw Error("cup_product: mismatched spaces");
    SchubertClass zero;
    zero.tag = a.tag;
    if (a.is_zero() || b.is_zero()) return zero;
    const RootDatum& rd = datum();
    int dmax = a.support.rbegin()->first.length + b.support.rbegin()->first.length;
    if (dmax > ceiling())
        throw Error("cup_product: total degree " + std::to_string(dmax) +
                    " exceeds the length ceiling " + std::to_string(ceiling()));
    if (engine == Engine::chevalley) {
        auto sa = ball_.from_class(a);
        auto sb = ball_.from_class(b);
        int da = a.support.rbegin()->first.length;
        int db = b.support.rbegin()->first.length;
        auto out = (da <= db) ? mult_by_class(sa, sb) : mult_by_class(sb, sa);
        return ball_.to_class(out, a.tag.removed_nodes);
    }
    SchubertClass out;
    out.tag = a.tag;
    const auto& offs = ball_.level_offsets();
    for (const auto& [u, cu] : a.support)
        for (const auto& [v, cv] : b.support) {
            int m = u.length + v.length;
            for (int widx = offs[m]; widx < offs[m + 1]; ++widx) {
                const WeylElement& w = ball_.element(widx);
                auto c = structure_constant(rd, u, v, w, cache);
                if (c.value != 0) out.add(w, cu * cv * Rat(c.value));
            }
        }
    return out;
}

// ---- coinvariant oracle ------------------------------------------------

CoinvariantOracle coinvariant_oracle(const RootDatum& rd) {
    if (rd.rank > 3) throw Error("coinvariant_oracle: rank too large (cost guard)");
    CohomologyContext ctx(rd, rd.num_pos_roots());
    const WeylBall& ball = ctx.ball();
    int n = ball.size();
    int top = rd.num_pos_roots();

    CoinvariantOracle oracle;
    oracle.basis.reserve(n);
    for (int i = 0; i < n; ++i) oracle.basis.push_back(ball.element(i));
    oracle.table.assign(n, std::vector<std::map<int, Rat>>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (ball.length(i) + ball.length(j) > top) continue;
            WeylBall::Sparse a{{i, Rat(1)}}, b{{j, Rat(1)}};
            auto prod = ctx.mult_by_class(a, b);
            for (auto& [idx, c] : prod) oracle.table[i][j][idx] = c;
        }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (ball.length(i) + ball.length(j) <= top && oracle.table[i][j] != oracle.table[j][i])
                throw Error("oracle: commutativity failed");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                if (ball.length(i) + ball.length(j) + ball.length(k) > top) continue;
                std::map<int, Rat> left, right;
                for (const auto& [m, c] : oracle.table[i][j])
                    for (const auto& [t, d2] : oracle.table[m][k]) left[t] += c * d2;
                for (const auto& [m, c] : oracle.table[j][k])
                    for (const auto& [t, d2] : oracle.table[i][m]) right[t] += c * d2;
                for (auto* mp : {&left, &right})
                    for (auto it = mp->begin(); it != mp->end();)
                        it = (it->second == 0) ? mp->erase(it) : std::next(it);
                if (left != right) throw Error("oracle: associativity failed");
            }
    int w0 = n - 1;
    if (ball.length(w0) != top) throw Error("oracle: missing top class");
    for (int i = 0; i < n; ++i) {
        int hits = 0;
        for (int j = 0; j < n; ++j) {
            if (ball.length(i) + ball.length(j) != top) continue;
            auto it = oracle.table[i][j].find(w0);
            Rat c = (it == oracle.table[i][j].end()) ? Rat(0) : it->second;
            if (c != 0) {
                if (c != 1) throw Error("oracle: duality pairing entry is not 1");
                ++hits;
            }
        }
        if (hits != 1) throw Error("oracle: duality pairing is not a permutation");
    }
    return oracle;
}

// ---- cache -------------------------------------------------------------

ConstantCache::ConstantCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : line) {
            if (ch == '|') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 5) throw Error("cache: malformed record: " + line);
        auto trim = [](const std::string& s) {
            size_t a = s.find_first_not_of(" \t");
            size_t b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(fields[0]) + "|" + trim(fields[1]) + "|" + trim(fields[2]) + "|" +
                          trim(fields[3]);
        entries_[key] = std::stol(trim(fields[4]));
    }
}

std::string ConstantCache::key(const RootDatum& rd, const std::vector<int>& w,
                               const std::vector<int>& u, const std::vector<int>& v) {
    auto join = [](const std::vector<int>& xs) {
        if (xs.empty()) return std::string("-");
        std::string s;
        for (size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(xs[i]);
        }
        return s;
    };
    return std::string(1, rd.type) + " " + std::to_string(rd.rank) + "|" + join(w) + "|" +
           join(u) + "|" + join(v);
}

std::optional<long> ConstantCache::get(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ConstantCache::put(const RootDatum& rd, const std::vector<int>& w,
                        const std::vector<int>& u, const std::vector<int>& v, long value) {
    std::string k = key(rd, w, u, v);
    if (!entries_.emplace(k, value).second) return;
    if (!path_.empty()) {
        std::ofstream out(path_, std::ios::app);
        out << k << "|" << value << "\n";
    }
}

size_t ConstantCache::verify_sample(double fraction, unsigned seed) const {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    size_t checked = 0;
    std::map<std::string, RootDatum> data;
    auto parse_word = [](const std::string& s) {
        std::vector<int> w;
        if (s == "-") return w;
        std::string cur;
        for (char ch : s) {
            if (ch == ',') {
                w.push_back(std::stoi(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        if (!cur.empty()) w.push_back(std::stoi(cur));
        return w;
    };
    for (const auto& [key, value] : entries_) {
        if (pick(rng) > fraction) continue;
        std::vector<std::string> fields;
        std::string cur;
        for (char ch : key) {
            if (ch == '|') {
                fields.push_back(cur);
                cur.clear();
            } else {
                cur += ch;
            }
        }
        fields.push_back(cur);
        if (fields.size() != 4) throw Error("cache: malformed key: " + key);
        auto it = data.find(fields[0]);
        if (it == data.end()) {
            char type = fields[0][0];
            int rank = std::stoi(fields[0].substr(2));
            it = data.emplace(fields[0], rootsys::build_root_datum(type, rank)).first;
        }
        const RootDatum& rd = it->second;
        auto u = weyl_from_word(rd, parse_word(fields[2]));
        auto v = weyl_from_word(rd, parse_word(fields[3]));
        long recomputed = structure_constant_with_word(rd, u, v, parse_word(fields[1]));
        if (recomputed != value)
            throw Error("cache integrity failure at " + key + ": stored " +
                        std::to_string(value) + ", recomputed " + std::to_string(recomputed));
        ++checked;
    }
    return checked;
}

}  // namespace flagrep::schubert
