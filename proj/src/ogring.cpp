#include "flagrep/ogring.hpp"

#include <limits>
#include <set>

namespace flagrep::ogring {

std::vector<KStrictPartition> kstrict_enumerate(int k, int n, int m) {
    if (k < 2) throw Error("kstrict_enumerate: need k >= 2");
    int max_part = (n > 0) ? n + k - 1 : m;
    int max_rows = (n > 0) ? n - k : m;
    std::vector<KStrictPartition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int rem, int bound) {
        if (rem == 0) {
            KStrictPartition lam;
            lam.parts = parts;
            lam.k = k;
            bool has_k = std::find(parts.begin(), parts.end(), k) != parts.end();
            if (has_k) {
                lam.type = 1;
                out.push_back(lam);
                lam.type = 2;
                out.push_back(lam);
            } else {
                lam.type = 0;
                out.push_back(lam);
            }
            return;
        }
        if (static_cast<int>(parts.size()) >= max_rows) return;
        int hi = std::min(rem, bound);
        for (int p = hi; p >= 1; --p) {
            // parts greater than k may not repeat
            if (p > k && !parts.empty() && parts.back() == p) continue;
            parts.push_back(p);
            rec(rem - p, p);
            parts.pop_back();
        }
    };
    if (m == 0) {
        out.push_back(KStrictPartition{{}, k, 0});
        return out;
    }
    rec(m, max_part);
    std::sort(out.begin(), out.end());
    return out;
}

int special_class_index(int k, int n, int p) {
    if (p < 1 || p > n + k - 1) throw Error("special_class_index: p out of range");
    return n + k - p + (p <= k ? 2 : 1);
}

std::vector<int> index_set(const KStrictPartition& lam, int n) {
    int k = lam.k;
    if (n <= 0) throw Error("index_set needs a finite n");
    if (lam.rows() > n - k || (lam.rows() > 0 && lam.parts[0] > n + k - 1))
        throw Error("index_set: partition outside the rectangle");
    std::vector<int> ps;
    for (int j = 1; j <= lam.rows(); ++j) {
        int lj = lam.parts[j - 1];
        int count = 0;
        for (int i = 1; i < j; ++i)
            if (lam.parts[i - 1] + lj <= 2 * k - 1 + j - i) ++count;
        int prev = (j == 1) ? std::numeric_limits<int>::max() : lam.parts[j - 2];
        int extra;
        if (lj > k || (lj == k && k < prev && (n - 1 + j + lam.type) % 2 == 0))
            extra = 1;
        else
            extra = 2;
        ps.push_back(n + k - 1 - lj + count + extra);
    }
    for (size_t i = 0; i + 1 < ps.size(); ++i)
        if (ps[i] >= ps[i + 1]) throw Error("index_set: values are not strictly increasing");
    for (int p : ps)
        if (p < 1 || p > 2 * n) throw Error("index_set: value out of [1, 2n]");
    return ps;
}

// ---- PresentedRing -----------------------------------------------------

template <class F>
std::string PresentedRing<F>::Elt::str() const {
    if (coords.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : coords) {
        if (!s.empty()) s += " + ";
        std::string mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring->gens()[i].name;
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if constexpr (std::is_same_v<F, QField>) {
            s += rat_str(c);
        } else {
            s += std::to_string(static_cast<int>(c));
        }
        if (!mono.empty()) s += "*" + mono;
    }
    return s;
}

template <class F>
int PresentedRing<F>::tau_index(int p) const {
    if (p < 1 || p == k_) throw Error("tau_index: use tau_k/tau_k' accessors for p = k");
    if (p < k_) return p - 1;
    int top = is_stable() ? max_degree_ : n_ + k_ - 1;
    if (p > top) return -1;
    return p + 1 - 1;  // shifted by the extra tau'_k slot
}

template <class F>
int PresentedRing<F>::mono_degree(const Mono& m) const {
    int d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += m[i] * gens_[i].degree;
    return d;
}

template <class F>
typename PresentedRing<F>::RawPoly PresentedRing<F>::raw_c(int p) const {
    RawPoly out;
    int ng = static_cast<int>(gens_.size());
    if (p == 0) {
        out.emplace(Mono(ng, 0), F::one());
        return out;
    }
    if (p < 0) return out;
    int top = is_stable() ? max_degree_ : n_ + k_ - 1;
    if (p > top) return out;
    Mono m(ng, 0);
    if (p < k_) {
        m[tau_index(p)] = 1;
        out.emplace(m, F::one());
    } else if (p == k_) {
        m[tau_k_index()] = 1;
        out.emplace(m, F::one());
        Mono m2(ng, 0);
        m2[tau_k_prime_index()] = 1;
        out.emplace(m2, F::one());
    } else {
        m[tau_index(p)] = 1;
        out.emplace(m, F::from_long(2));
    }
    return out;
}

template <class F>
typename PresentedRing<F>::RawPoly PresentedRing<F>::raw_mul(const RawPoly& a,
                                                             const RawPoly& b) const {
    RawPoly out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) {
            Mono m(ma.size());
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            T prod = F::mul(ca, cb);
            auto it = out.find(m);
            if (it == out.end()) {
                if (!F::is_zero(prod)) out.emplace(std::move(m), prod);
            } else {
                it->second = F::add(it->second, prod);
                if (F::is_zero(it->second)) out.erase(it);
            }
        }
    return out;
}

template <class F>
typename PresentedRing<F>::RawPoly PresentedRing<F>::raw_delta(int s) const {
    if (s == 0) {
        RawPoly one;
        one.emplace(Mono(gens_.size(), 0), F::one());
        return one;
    }
    // det(c_{1+j-i})_{1<=i,j<=s} by minor expansion over the first column,
    // memoized on the surviving row set
    std::map<std::vector<int>, RawPoly> memo;
    std::function<RawPoly(std::vector<int>, int)> det = [&](std::vector<int> rows,
                                                            int col) -> RawPoly {
        if (rows.empty()) {
            RawPoly one;
            one.emplace(Mono(gens_.size(), 0), F::one());
            return one;
        }
        auto it = memo.find(rows);
        if (it != memo.end()) return it->second;
        RawPoly acc;
        for (size_t t = 0; t < rows.size(); ++t) {
            int i = rows[t];
            RawPoly entry = raw_c(1 + col - i);
            if (entry.empty()) continue;
            std::vector<int> rest;
            for (size_t u = 0; u < rows.size(); ++u)
                if (u != t) rest.push_back(rows[u]);
            RawPoly minor = det(rest, col + 1);
            RawPoly prod = raw_mul(entry, minor);
            for (auto& [m, c] : prod) {
                T v = (t % 2 == 0) ? c : F::neg(c);
                auto jt = acc.find(m);
                if (jt == acc.end()) {
                    if (!F::is_zero(v)) acc.emplace(m, v);
                } else {
                    jt->second = F::add(jt->second, v);
                    if (F::is_zero(jt->second)) acc.erase(jt);
                }
            }
        }
        memo.emplace(rows, acc);
        return acc;
    };
    std::vector<int> rows(s);
    for (int i = 0; i < s; ++i) rows[i] = i + 1;
    return det(rows, 1);
}

namespace {

template <class F>
void raw_axpy(typename PresentedRing<F>::RawPoly& acc,
              const typename PresentedRing<F>::RawPoly& p, const typename F::T& c) {
    for (const auto& [m, v] : p) {
        auto it = acc.find(m);
        typename F::T add = F::mul(v, c);
        if (it == acc.end()) {
            if (!F::is_zero(add)) acc.emplace(m, add);
        } else {
            it->second = F::add(it->second, add);
            if (F::is_zero(it->second)) acc.erase(it);
        }
    }
}

}  // namespace

template <class F>
PresentedRing<F> PresentedRing<F>::finite(int k, int n) {
    if (k < 2 || n < k + 2) throw Error("PresentedRing::finite needs k >= 2, n >= k+2");
    PresentedRing r;
    r.k_ = k;
    r.n_ = n;
    int top = n + k - 1;
    for (int p = 1; p < k; ++p) r.gens_.push_back({"t" + std::to_string(p), p});
    r.gens_.push_back({"t" + std::to_string(k), k});
    r.gens_.push_back({"t" + std::to_string(k) + "'", k});
    for (int p = k + 1; p <= top; ++p) r.gens_.push_back({"t" + std::to_string(p), p});

    // max degree: the largest weight with a nonempty partition level
    int d = 0;
    for (int m = 0; m <= (n - k) * (n + k - 1); ++m)
        if (!kstrict_enumerate(k, n, m).empty()) d = m;
    r.max_degree_ = d;

    auto tau = [&](int p) {
        RawPoly out;
        if (p == 0) {
            out.emplace(Mono(r.gens_.size(), 0), F::one());
            return out;
        }
        if (p < 0 || p >= n + k) return out;
        Mono m(r.gens_.size(), 0);
        m[p == k ? r.tau_k_index() : r.tau_index(p)] = 1;
        out.emplace(m, F::one());
        return out;
    };
    auto tau_prime = [&]() {
        RawPoly out;
        Mono m(r.gens_.size(), 0);
        m[r.tau_k_prime_index()] = 1;
        out.emplace(m, F::one());
        return out;
    };

    // (3.15)
    for (int s = n - k + 1; s < n; ++s) r.relations_.push_back(r.raw_delta(s));
    // (3.16), both versions
    {
        RawPoly rhs;
        for (int p = k + 1; p <= n; ++p) {
            RawPoly prod = r.raw_mul(tau(p), r.raw_delta(n - p));
            raw_axpy<F>(rhs, prod, ((p + k + 1) % 2 == 0) ? F::one() : F::neg(F::one()));
        }
        RawPoly lhs1 = r.raw_mul(tau(k), r.raw_delta(n - k));
        raw_axpy<F>(lhs1, rhs, F::neg(F::one()));
        r.relations_.push_back(std::move(lhs1));
        RawPoly lhs2 = r.raw_mul(tau_prime(), r.raw_delta(n - k));
        raw_axpy<F>(lhs2, rhs, F::neg(F::one()));
        r.relations_.push_back(std::move(lhs2));
    }
    // (3.17)
    for (int s = n + 1; s < n + k; ++s) {
        RawPoly rel;
        for (int p = k + 1; p <= s; ++p) {
            RawPoly prod = r.raw_mul(tau(p), r.raw_delta(s - p));
            raw_axpy<F>(rel, prod, (p % 2 == 0) ? F::one() : F::neg(F::one()));
        }
        r.relations_.push_back(std::move(rel));
    }
    // (3.18)
    for (int s = k + 1; s < n; ++s) {
        RawPoly rel = r.raw_mul(tau(s), tau(s));
        for (int p = 1; p <= s; ++p) {
            RawPoly prod = r.raw_mul(tau(s + p), r.raw_c(s - p));
            raw_axpy<F>(rel, prod, (p % 2 == 0) ? F::one() : F::neg(F::one()));
        }
        r.relations_.push_back(std::move(rel));
    }
    // (3.19)
    {
        RawPoly rel = r.raw_mul(tau(k), tau_prime());
        for (int p = 1; p <= k; ++p) {
            RawPoly prod = r.raw_mul(tau(k + p), tau(k - p));
            raw_axpy<F>(rel, prod, (p % 2 == 0) ? F::one() : F::neg(F::one()));
        }
        r.relations_.push_back(std::move(rel));
    }
    r.build();
    return r;
}

template <class F>
PresentedRing<F> PresentedRing<F>::stable(int k, int truncation) {
    if (k < 2 || truncation < 2 * k) throw Error("PresentedRing::stable needs truncation >= 2k");
    PresentedRing r;
    r.k_ = k;
    r.n_ = -1;
    r.max_degree_ = truncation;
    for (int p = 1; p < k; ++p) r.gens_.push_back({"t" + std::to_string(p), p});
    r.gens_.push_back({"t" + std::to_string(k), k});
    r.gens_.push_back({"t" + std::to_string(k) + "'", k});
    for (int p = k + 1; p <= truncation; ++p) r.gens_.push_back({"t" + std::to_string(p), p});

    auto tau = [&](int p) {
        RawPoly out;
        if (p == 0) {
            out.emplace(Mono(r.gens_.size(), 0), F::one());
            return out;
        }
        if (p < 0 || p > truncation) return out;
        Mono m(r.gens_.size(), 0);
        m[p == k ? r.tau_k_index() : r.tau_index(p)] = 1;
        out.emplace(m, F::one());
        return out;
    };
    // tau_s^2 + sum (-1)^p tau_{s+p} c_{s-p} = 0 for s >= k+1, within truncation
    for (int s = k + 1; 2 * s <= truncation; ++s) {
        RawPoly rel = r.raw_mul(tau(s), tau(s));
        for (int p = 1; p <= s; ++p) {
            RawPoly prod = r.raw_mul(tau(s + p), r.raw_c(s - p));
            raw_axpy<F>(rel, prod, (p % 2 == 0) ? F::one() : F::neg(F::one()));
        }
        r.relations_.push_back(std::move(rel));
    }
    {
        RawPoly rel = r.raw_mul(tau(k), [&] {
            RawPoly out;
            Mono m(r.gens_.size(), 0);
            m[r.tau_k_prime_index()] = 1;
            out.emplace(m, F::one());
            return out;
        }());
        for (int p = 1; p <= k; ++p) {
            RawPoly prod = r.raw_mul(tau(k + p), tau(k - p));
            raw_axpy<F>(rel, prod, (p % 2 == 0) ? F::one() : F::neg(F::one()));
        }
        r.relations_.push_back(std::move(rel));
    }
    r.build();
    return r;
}

template <class F>
void PresentedRing<F>::build() {
    int ng = static_cast<int>(gens_.size());
    levels_.resize(max_degree_ + 1);
    hilbert_.assign(max_degree_ + 1, 0);

    // monomials per degree
    for (int d = 0; d <= max_degree_; ++d) {
        auto& lvl = levels_[d];
        Mono m(ng, 0);
        std::function<void(int, int)> gen = [&](int pos, int rem) {
            if (rem == 0) {
                lvl.monos.push_back(m);
                return;
            }
            if (pos >= ng) return;
            int deg = gens_[pos].degree;
            for (int c = rem / deg; c >= 0; --c) {
                m[pos] = c;
                gen(pos + 1, rem - c * deg);
            }
            m[pos] = 0;
        };
        gen(0, d);
        std::sort(lvl.monos.begin(), lvl.monos.end());
        for (size_t i = 0; i < lvl.monos.size(); ++i) lvl.index.emplace(lvl.monos[i], i);
    }

    for (int d = 0; d <= max_degree_; ++d) {
        auto& lvl = levels_[d];
        int dim = static_cast<int>(lvl.monos.size());
        // rows: relation * monomial, dense over the degree-d monomials
        std::vector<std::vector<T>> rows;
        for (const auto& rel : relations_) {
            if (rel.empty()) continue;
            int dr = mono_degree(rel.begin()->first);
            if (dr > d) continue;
            for (const Mono& m : levels_[d - dr].monos) {
                std::vector<T> row(dim, F::zero());
                bool nonzero = false;
                for (const auto& [rm, c] : rel) {
                    Mono prod(ng);
                    for (int i = 0; i < ng; ++i) prod[i] = rm[i] + m[i];
                    row[lvl.index.at(prod)] = F::add(row[lvl.index.at(prod)], c);
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        // row reduce; record pivot -> reduction over non-pivot monomials
        std::vector<int> pivot_col;
        int rr = 0;
        for (int col = 0; col < dim && rr < static_cast<int>(rows.size()); ++col) {
            int piv = -1;
            for (int r = rr; r < static_cast<int>(rows.size()); ++r)
                if (!F::is_zero(rows[r][col])) { piv = r; break; }
            if (piv < 0) continue;
            std::swap(rows[piv], rows[rr]);
            T inv = F::div(F::one(), rows[rr][col]);
            for (int j = 0; j < dim; ++j) rows[rr][j] = F::mul(rows[rr][j], inv);
            for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
                if (r == rr || F::is_zero(rows[r][col])) continue;
                T f = rows[r][col];
                for (int j = 0; j < dim; ++j)
                    rows[r][j] = F::sub(rows[r][j], F::mul(f, rows[rr][j]));
            }
            pivot_col.push_back(col);
            ++rr;
        }
        std::vector<char> is_pivot(dim, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        for (int t = 0; t < rr; ++t) {
            int col = pivot_col[t];
            RawPoly reduction;  // pivot monomial = - sum of non-pivot tail
            for (int j = 0; j < dim; ++j) {
                if (j == col || F::is_zero(rows[t][j])) continue;
                reduction.emplace(lvl.monos[j], F::neg(rows[t][j]));
            }
            lvl.pivot_reduction.emplace(lvl.monos[col], std::move(reduction));
        }
        hilbert_[d] = dim - rr;

        long expect = static_cast<long>(kstrict_enumerate(k_, n_, d).size());
        if (hilbert_[d] != expect)
            throw Error("Hilbert mismatch in degree " + std::to_string(d) + ": ring has " +
                        std::to_string(hilbert_[d]) + ", partition count is " +
                        std::to_string(expect));
    }
}

template <class F>
typename PresentedRing<F>::Elt PresentedRing<F>::one() const {
    Elt e{this, {}};
    e.coords.emplace(Mono(gens_.size(), 0), F::one());
    return e;
}

template <class F>
typename PresentedRing<F>::Elt PresentedRing<F>::generator(int gen_index) const {
    RawPoly p;
    Mono m(gens_.size(), 0);
    m[gen_index] = 1;
    p.emplace(m, F::one());
    return from_raw(p);
}

template <class F>
typename PresentedRing<F>::Elt PresentedRing<F>::from_raw(const RawPoly& p) const {
    // reduce repeatedly: substitute pivot monomials until only basis monomials remain
    Elt out{this, {}};
    RawPoly work = p;
    while (!work.empty()) {
        // pick the largest monomial to make progress deterministic
        auto last = std::prev(work.end());
        Mono m = last->first;
        T c = last->second;
        work.erase(last);
        int d = mono_degree(m);
        if (d > max_degree_)
            throw Error("degree " + std::to_string(d) + " exceeds the ring truncation " +
                        std::to_string(max_degree_));
        const auto& lvl = levels_[d];
        auto piv = lvl.pivot_reduction.find(m);
        if (piv == lvl.pivot_reduction.end()) {
            auto jt = out.coords.find(m);
            if (jt == out.coords.end()) {
                if (!F::is_zero(c)) out.coords.emplace(m, c);
            } else {
                jt->second = F::add(jt->second, c);
                if (F::is_zero(jt->second)) out.coords.erase(jt);
            }
        } else {
            raw_axpy<F>(work, piv->second, c);
        }
    }
    return out;
}

template <class F>
typename PresentedRing<F>::Elt PresentedRing<F>::add(const Elt& a, const Elt& b) const {
    Elt out = a;
    raw_axpy<F>(out.coords, b.coords, F::one());
    return out;
}

template <class F>
typename PresentedRing<F>::Elt PresentedRing<F>::mul(const Elt& a, const Elt& b) const {
    return from_raw(raw_mul(a.coords, b.coords));
}

template <class F>
typename PresentedRing<F>::Elt PresentedRing<F>::scale(const Elt& a, const T& c) const {
    Elt out{this, {}};
    if (F::is_zero(c)) return out;
    for (const auto& [m, v] : a.coords) {
        T p = F::mul(v, c);
        if (!F::is_zero(p)) out.coords.emplace(m, p);
    }
    return out;
}

template <class F>
typename PresentedRing<F>::Elt xi_generator_image_stable(const PresentedRing<F>& ring, int i) {
    if (i < 1 || i > ring.k()) throw Error("xi_generator_image_stable: need 1 <= i <= k");
    if (2 * i > ring.max_degree())
        throw Error("xi_generator_image_stable: truncation too small");
    using RP = typename PresentedRing<F>::RawPoly;
    RP acc = ring.raw_mul(ring.raw_c(i), ring.raw_c(i));
    for (int j = 1; j <= i; ++j) {
        RP prod = ring.raw_mul(ring.raw_c(i + j), ring.raw_c(i - j));
        raw_axpy<F>(acc, prod, (j % 2 == 0) ? F::from_long(2) : F::neg(F::from_long(2)));
    }
    return ring.from_raw(acc);
}

template typename PresentedRing<QField>::Elt xi_generator_image_stable(
    const PresentedRing<QField>&, int);
template typename PresentedRing<F2Field>::Elt xi_generator_image_stable(
    const PresentedRing<F2Field>&, int);

RingQ::Elt restriction_map(const RingQ& stable_ring, const RingQ& finite_ring,
                           const RingQ::Elt& elt) {
    if (stable_ring.k() != finite_ring.k()) throw Error("restriction_map: incompatible k");
    int k = finite_ring.k(), n = finite_ring.n();
    RingQ::RawPoly out;
    int ngf = static_cast<int>(finite_ring.gens().size());
    for (const auto& [m, c] : elt.coords) {
        RingQ::Mono img(ngf, 0);
        bool killed = false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            // generator i of the stable ring: p from the name layout
            int p;
            if (static_cast<int>(i) < k - 1) p = static_cast<int>(i) + 1;
            else if (static_cast<int>(i) == k - 1 || static_cast<int>(i) == k) p = k;
            else p = static_cast<int>(i);
            if (p >= n + k) { killed = true; break; }
            int target;
            if (static_cast<int>(i) == k - 1) target = finite_ring.tau_k_index();
            else if (static_cast<int>(i) == k) target = finite_ring.tau_k_prime_index();
            else target = finite_ring.tau_index(p);
            img[target] += m[i];
        }
        if (killed) continue;
        auto it = out.find(img);
        if (it == out.end()) out.emplace(img, c);
        else it->second += c;
    }
    return finite_ring.from_raw(out);
}

Mod2InjectivityReport mod2_injectivity_check(int k, int truncation) {
    Mod2InjectivityReport rep;
    rep.k = k;
    rep.truncation = truncation;
    RingF2 ring = RingF2::stable(k, truncation);

    std::vector<RingF2::Elt> xi(k + 1, ring.zero());
    for (int i = 1; i <= k; ++i) xi[i] = xi_generator_image_stable(ring, i);

    // displayed mod-2 forms: e_i -> c_i^2 (i < k) and e_k -> (tau_k - tau'_k)^2
    bool displayed = true;
    for (int i = 1; i < k; ++i) {
        auto ci2 = ring.from_raw(ring.raw_mul(ring.raw_c(i), ring.raw_c(i)));
        if (!(xi[i] == ci2)) displayed = false;
    }
    {
        RingF2::RawPoly diff;  // tau_k - tau'_k = tau_k + tau'_k over F2
        RingF2::Mono m(ring.gens().size(), 0);
        m[ring.tau_k_index()] = 1;
        diff.emplace(m, F2Field::one());
        RingF2::Mono m2(ring.gens().size(), 0);
        m2[ring.tau_k_prime_index()] = 1;
        diff.emplace(m2, F2Field::one());
        auto sq = ring.from_raw(ring.raw_mul(diff, diff));
        if (!(xi[k] == sq)) displayed = false;
        auto ck2 = ring.from_raw(ring.raw_mul(ring.raw_c(k), ring.raw_c(k)));
        if (!(xi[k] == ck2)) displayed = false;
    }
    rep.images_match_displayed = displayed;

    // injectivity degree by degree: source = Z2[e_1..e_k], weight(e_i) = 2i
    for (int w = 0; w <= truncation; ++w) {
        Mod2InjectivityReport::Degree deg;
        deg.weight = w;
        // source monomials e^a with sum 2 i a_i = w
        std::vector<std::vector<int>> monos;
        std::vector<int> a(k + 1, 0);
        std::function<void(int, int)> gen = [&](int pos, int rem) {
            if (rem == 0) {
                monos.push_back(a);
                return;
            }
            if (pos > k) return;
            for (int c = rem / (2 * pos); c >= 0; --c) {
                a[pos] = c;
                gen(pos + 1, rem - 2 * pos * c);
            }
            a[pos] = 0;
        };
        gen(1, w);
        deg.source_dim = static_cast<long>(monos.size());
        // images
        std::vector<RingF2::Elt> rows;
        for (const auto& mono : monos) {
            RingF2::Elt prod = ring.one();
            for (int i = 1; i <= k; ++i)
                for (int c = 0; c < mono[i]; ++c) prod = ring.mul(prod, xi[i]);
            rows.push_back(prod);
        }
        // rank over F2
        std::map<RingF2::Mono, int> col_index;
        for (const auto& r : rows)
            for (const auto& [m, c] : r.coords)
                col_index.emplace(m, static_cast<int>(col_index.size()));
        std::vector<std::vector<unsigned char>> dense(
            rows.size(), std::vector<unsigned char>(col_index.size(), 0));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [m, c] : rows[r].coords) dense[r][col_index[m]] = c;
        long rank = 0;
        size_t ncols = col_index.size();
        for (size_t col = 0; col < ncols && rank < static_cast<long>(rows.size()); ++col) {
            int piv = -1;
            for (size_t r = rank; r < rows.size(); ++r)
                if (dense[r][col]) { piv = static_cast<int>(r); break; }
            if (piv < 0) continue;
            std::swap(dense[piv], dense[rank]);
            for (size_t r = 0; r < rows.size(); ++r) {
                if (static_cast<long>(r) == rank || !dense[r][col]) continue;
                for (size_t j = col; j < ncols; ++j) dense[r][j] ^= dense[rank][j];
            }
            ++rank;
        }
        deg.rank = rank;
        deg.injective = (rank == deg.source_dim);
        if (!deg.injective) rep.all_injective = false;
        rep.degrees.push_back(deg);
    }

    // parity core: the leading e_k-degree of f^2 is even, of e_k g^2 odd
    rep.parity_core_holds = true;
    for (int fdeg = 0; fdeg <= 2 && rep.parity_core_holds; ++fdeg)
        for (int gdeg = 0; gdeg <= 2; ++gdeg) {
            int lead_f_sq = 2 * fdeg;       // top e_k-degree of f^2 with deg_{e_k} f = fdeg
            int lead_ekg_sq = 2 * gdeg + 1; // top e_k-degree of e_k g^2
            if (lead_f_sq == lead_ekg_sq) {
                rep.parity_core_holds = false;
                break;
            }
        }
    return rep;
}

template class PresentedRing<QField>;
template class PresentedRing<F2Field>;

}  // namespace flagrep::ogring
