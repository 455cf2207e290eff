#include "flagrep/rootdata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace flagrep::rootsys {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
    auto bad = [&]() {
        throw Error(std::string("invalid simple type ") + type + std::to_string(rank));
    };
    int n = rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j, int cij = -1, int cji = -1) {
        c[i][j] = cij;
        c[j][i] = cji;
    };
    switch (type) {
        case 'A':
            if (n < 1) bad();
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':
            if (n < 2) bad();
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1, -2, -1);  // alpha_{n-1}(alpha_n^vee) = -2
            break;
        case 'C':
            if (n < 2) bad();
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            link(n - 2, n - 1, -1, -2);
            break;
        case 'D':
            if (n < 3) bad();
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            if (n < 6 || n > 8) bad();
            link(0, 2);
            link(1, 3);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'F':
            if (n != 4) bad();
            link(0, 1);
            link(1, 2, -2, -1);  // alpha_2(alpha_3^vee) = -2
            link(2, 3);
            break;
        case 'G':
            if (n != 2) bad();
            link(0, 1, -1, -3);  // alpha_1(alpha_2^vee) = -1, alpha_2(alpha_1^vee) = -3
            break;
        default:
            bad();
    }
    return c;
}

// Positive roots by root-string closure from the simple roots.
std::vector<std::vector<int>> close_positive_roots(const std::vector<std::vector<int>>& cartan) {
    int n = static_cast<int>(cartan.size());
    std::set<std::vector<int>> known;
    std::vector<std::vector<int>> by_height_all;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        known.insert(a);
        frontier.push_back(a);
        by_height_all.push_back(a);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& r : frontier) {
            for (int i = 0; i < n; ++i) {
                // p = length of the downward alpha_i-string through r
                int pairing = 0;
                for (int j = 0; j < n; ++j) pairing += r[j] * cartan[j][i];
                int p = 0;
                std::vector<int> down = r;
                for (;;) {
                    down[i] -= 1;
                    bool neg = std::all_of(down.begin(), down.end(), [](int x) { return x <= 0; });
                    if (!neg && down[i] >= 0 && known.count(down)) { ++p; continue; }
                    if (neg && std::accumulate(down.begin(), down.end(), 0) == 0) { ++p; continue; }
                    break;
                }
                if (p - pairing > 0) {
                    std::vector<int> up = r;
                    up[i] += 1;
                    if (known.insert(up).second) {
                        next.push_back(up);
                        by_height_all.push_back(up);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    std::sort(by_height_all.begin(), by_height_all.end(), [](const auto& a, const auto& b) {
        int ha = std::accumulate(a.begin(), a.end(), 0);
        int hb = std::accumulate(b.begin(), b.end(), 0);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    return by_height_all;
}

std::vector<Rat> symmetrizer(const std::vector<std::vector<int>>& cartan) {
    int n = static_cast<int>(cartan.size());
    std::vector<Rat> d(n, 0);
    std::vector<int> stack{0};
    d[0] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < n; ++j) {
            if (i == j || cartan[i][j] == 0 || d[j] != 0) continue;
            d[j] = d[i] * cartan[j][i] / cartan[i][j];
            stack.push_back(j);
        }
    }
    for (int i = 0; i < n; ++i)
        if (d[i] == 0) throw Error("disconnected Dynkin diagram");
    return d;
}

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (int j = 0; j < n; ++j) { m[col][j] /= p; inv[col][j] /= p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

}  // namespace

Rat RootDatum::inner(const std::vector<Rat>& mu, const std::vector<Rat>& nu) const {
    // (mu, nu) = sum_j r_j(nu) * mu_j * d_j where r(nu) are alpha-coordinates.
    // alpha-coordinates solve C^T r = nu; use fweight_in_roots: nu = sum nu_i omega_i
    // and omega_i = sum_j fw[i][j] alpha_j, so r_j = sum_i nu_i fw[i][j].
    Rat acc = 0;
    int n = rank;
    for (int j = 0; j < n; ++j) {
        Rat rj = 0;
        for (int i = 0; i < n; ++i) rj += nu[i] * fweight_in_roots[i][j];
        acc += rj * mu[j] * dsym[j];
    }
    return acc;
}

RootDatum build_root_datum(char type, int rank) {
    if (rank < 1 || rank > 9) throw Error("rank out of supported range");
    RootDatum rd;
    rd.type = type;
    rd.rank = rank;
    rd.cartan = cartan_matrix(type, rank);
    rd.pos_root = close_positive_roots(rd.cartan);
    rd.dsym = symmetrizer(rd.cartan);

    std::vector<std::vector<Rat>> c(rank, std::vector<Rat>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) c[i][j] = rd.cartan[i][j];
    rd.fweight_in_roots = invert(std::move(c));

    rd.pos_root_w.reserve(rd.pos_root.size());
    rd.pos_coroot.reserve(rd.pos_root.size());
    for (const auto& r : rd.pos_root) {
        std::vector<int> w(rank, 0);
        for (int k = 0; k < rank; ++k)
            for (int j = 0; j < rank; ++j) w[k] += r[j] * rd.cartan[j][k];
        rd.pos_root_w.push_back(std::move(w));

        // beta^vee = sum_i r_i (d_i / d_beta) alpha_i^vee
        Rat dbeta = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                dbeta += Rat(r[i] * r[j]) * rd.cartan[i][j] * rd.dsym[j];
        dbeta /= 2;
        std::vector<int> cv(rank);
        for (int i = 0; i < rank; ++i) {
            Rat x = Rat(r[i]) * rd.dsym[i] / dbeta;
            if (!rat_is_integer(x)) throw Error("non-integral coroot coordinate");
            cv[i] = static_cast<int>(rat_to_long(x));
        }
        rd.pos_coroot.push_back(std::move(cv));
    }
    return rd;
}

namespace {

std::vector<int> mat_identity(int n) {
    std::vector<int> m(n * n, 0);
    for (int i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

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

void simple_matrices(const RootDatum& rd, int i0, std::vector<int>& aw, std::vector<int>& ar) {
    int n = rd.rank;
    aw = mat_identity(n);
    ar = mat_identity(n);
    for (int k = 0; k < n; ++k) aw[k * n + i0] -= rd.cartan[i0][k];
    for (int j = 0; j < n; ++j) ar[i0 * n + j] -= rd.cartan[j][i0];
}

struct ActKey {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(static_cast<unsigned>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

WeylElement weyl_identity(const RootDatum& rd) {
    WeylElement w;
    w.rank = rd.rank;
    w.act_w = mat_identity(rd.rank);
    w.act_r = mat_identity(rd.rank);
    return w;
}

int weyl_length_of_action(const RootDatum& rd, const std::vector<int>& act_r) {
    int n = rd.rank;
    int flips = 0;
    for (const auto& r : rd.pos_root) {
        // image = act_r * r; roots are sign-definite, test the first nonzero entry
        for (int i = 0; i < n; ++i) {
            int s = 0;
            for (int j = 0; j < n; ++j) s += act_r[i * n + j] * r[j];
            if (s < 0) { ++flips; break; }
            if (s > 0) break;
        }
    }
    return flips;
}

namespace {

// Greedy smallest-left-descent canonical word; also fills `length`.
void finalize(const RootDatum& rd, WeylElement& w) {
    int n = rd.rank;
    w.length = weyl_length_of_action(rd, w.act_r);
    w.word.clear();
    std::vector<int> cur_w = w.act_w, cur_r = w.act_r;
    int len = w.length;
    std::vector<int> sw, sr;
    while (len > 0) {
        int chosen = -1;
        std::vector<int> next_w, next_r;
        for (int i = 0; i < n && chosen < 0; ++i) {
            simple_matrices(rd, i, sw, sr);
            auto cand_r = mat_mul(n, sr, cur_r);
            int l = weyl_length_of_action(rd, cand_r);
            if (l == len - 1) {
                chosen = i;
                next_r = std::move(cand_r);
                next_w = mat_mul(n, sw, cur_w);
            }
        }
        if (chosen < 0) throw Error("descent search failed (non-group matrix?)");
        w.word.push_back(chosen + 1);
        cur_w = std::move(next_w);
        cur_r = std::move(next_r);
        --len;
    }
}

}  // namespace

WeylElement weyl_simple(const RootDatum& rd, int i) {
    if (i < 1 || i > rd.rank) throw Error("simple reflection index out of range");
    WeylElement w;
    w.rank = rd.rank;
    simple_matrices(rd, i - 1, w.act_w, w.act_r);
    w.length = 1;
    w.word = {i};
    return w;
}

WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word) {
    WeylElement w = weyl_identity(rd);
    std::vector<int> sw, sr;
    for (int letter : word) {
        if (letter < 1 || letter > rd.rank) throw Error("word letter out of range");
        simple_matrices(rd, letter - 1, sw, sr);
        w.act_w = mat_mul(rd.rank, w.act_w, sw);
        w.act_r = mat_mul(rd.rank, w.act_r, sr);
    }
    finalize(rd, w);
    return w;
}

WeylElement weyl_mul(const RootDatum& rd, const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.rank = rd.rank;
    w.act_w = mat_mul(rd.rank, a.act_w, b.act_w);
    w.act_r = mat_mul(rd.rank, a.act_r, b.act_r);
    finalize(rd, w);
    return w;
}

WeylElement weyl_inverse(const RootDatum& rd, const WeylElement& w) {
    std::vector<int> rev(w.word.rbegin(), w.word.rend());
    return weyl_from_word(rd, rev);
}

WeylElement weyl_reflection(const RootDatum& rd, int p) {
    int n = rd.rank;
    const auto& beta_w = rd.pos_root_w[p];
    const auto& beta_r = rd.pos_root[p];
    const auto& bv = rd.pos_coroot[p];
    WeylElement w;
    w.rank = n;
    w.act_w.assign(n * n, 0);
    w.act_r.assign(n * n, 0);
    // s_beta(x) = x - x(beta^vee) beta
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            w.act_w[k * n + j] = (k == j ? 1 : 0) - beta_w[k] * bv[j];
        }
    // on root coordinates: x(beta^vee) = sum_j r_j alpha_j(beta^vee), alpha_j(beta^vee) = (C bv)_j
    std::vector<int> cbv(n, 0);
    for (int j = 0; j < n; ++j)
        for (int m = 0; m < n; ++m) cbv[j] += rd.cartan[j][m] * bv[m];
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) w.act_r[k * n + j] = (k == j ? 1 : 0) - beta_r[k] * cbv[j];
    finalize(rd, w);
    return w;
}

std::vector<Rat> apply_weyl(const WeylElement& w, const std::vector<Rat>& v) {
    int n = w.rank;
    std::vector<Rat> r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (w.act_w[i * n + j] != 0) r[i] += Rat(w.act_w[i * n + j]) * v[j];
    return r;
}

std::vector<int> apply_weyl(const WeylElement& w, const std::vector<int>& v) {
    int n = w.rank;
    std::vector<int> r(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r[i] += w.act_w[i * n + j] * v[j];
    return r;
}

std::vector<Rat> reflect(const RootDatum& rd, int i, const std::vector<Rat>& v) {
    if (i < 1 || i > rd.rank) throw Error("simple reflection index out of range");
    std::vector<Rat> r = v;
    Rat vi = v[i - 1];
    for (int k = 0; k < rd.rank; ++k) r[k] -= vi * rd.cartan[i - 1][k];
    return r;
}

std::vector<Poly> weyl_poly_images(const RootDatum& rd, const WeylElement& w, const VarSpacePtr& vs) {
    int n = rd.rank;
    std::vector<Poly> images;
    images.reserve(n);
    for (int j = 0; j < n; ++j) {
        Poly img(vs);
        for (int k = 0; k < n; ++k) {
            int a = w.act_w[k * n + j];
            if (a != 0) img += Poly::variable(vs, k) * Rat(a);
        }
        images.push_back(std::move(img));
    }
    return images;
}

Poly reflect_poly(const RootDatum& rd, int i, const Poly& p) {
    return p.substitute(weyl_poly_images(rd, weyl_simple(rd, i), p.vars()));
}

namespace {

// Shared BFS core. `allowed_letters` restricts the generators (0-based);
// `keep` filters newly discovered elements (used for minimal coset reps).
template <class Keep>
WeylLevels bfs_enumerate(const RootDatum& rd, int max_length,
                         const std::vector<int>& allowed_letters, Keep keep) {
    int n = rd.rank;
    struct Node {
        std::vector<int> act_w, act_r;
        int letter = 0;   // 1-based minimal discovering letter
        int parent = -1;  // index into previous level's nodes
    };
    std::unordered_map<std::vector<int>, char, ActKey> seen;  // act_w -> kept?
    std::vector<std::vector<int>> sw(n), sr(n);
    for (int i = 0; i < n; ++i) simple_matrices(rd, i, sw[i], sr[i]);

    WeylLevels out;
    std::vector<Node> level;
    {
        Node e;
        e.act_w = mat_identity(n);
        e.act_r = mat_identity(n);
        seen.emplace(e.act_w, 1);
        level.push_back(std::move(e));
    }
    std::vector<std::vector<int>> words_prev{{}};

    for (int len = 0; len <= max_length; ++len) {
        // materialize this level, sorted by canonical word
        std::vector<int> order(level.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
        std::vector<std::vector<int>> words(level.size());
        for (size_t i = 0; i < level.size(); ++i) {
            if (len == 0) continue;
            words[i].reserve(len);
            words[i].push_back(level[i].letter);
            const auto& pw = words_prev[level[i].parent];
            words[i].insert(words[i].end(), pw.begin(), pw.end());
        }
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return words[a] < words[b]; });
        std::vector<WeylElement> elems;
        elems.reserve(level.size());
        for (int idx : order) {
            WeylElement w;
            w.rank = n;
            w.act_w = level[idx].act_w;
            w.act_r = level[idx].act_r;
            w.length = len;
            w.word = words[idx];
            elems.push_back(std::move(w));
        }
        out.by_length.push_back(std::move(elems));
        if (len == max_length) break;

        // discover next level by left multiplication
        std::unordered_map<std::vector<int>, int, ActKey> next_index;
        std::vector<Node> next;
        for (size_t u = 0; u < level.size(); ++u) {
            for (int i : allowed_letters) {
                auto vw = mat_mul(n, sw[i], level[u].act_w);
                auto it = seen.find(vw);
                if (it != seen.end()) {
                    if (it->second) {
                        // Already discovered in this level: keep the smallest
                        // discovering letter (its parent is determined by it).
                        auto jt = next_index.find(vw);
                        if (jt != next_index.end() && i + 1 < next[jt->second].letter) {
                            next[jt->second].letter = i + 1;
                            next[jt->second].parent = static_cast<int>(u);
                        }
                    }
                    continue;
                }
                Node v;
                v.act_w = std::move(vw);
                v.act_r = mat_mul(n, sr[i], level[u].act_r);
                v.letter = i + 1;
                v.parent = static_cast<int>(u);
                bool kept = keep(v.act_r);
                seen.emplace(v.act_w, kept ? 1 : 0);
                if (kept) {
                    next_index.emplace(v.act_w, static_cast<int>(next.size()));
                    next.push_back(std::move(v));
                }
            }
        }
        words_prev = std::move(words);
        level = std::move(next);
        if (level.empty()) break;
    }
    return out;
}

std::vector<int> all_letters(int rank) {
    std::vector<int> v(rank);
    for (int i = 0; i < rank; ++i) v[i] = i;
    return v;
}

}  // namespace

WeylLevels enumerate_weyl(const RootDatum& rd, int max_length) {
    if (max_length > rd.num_pos_roots())
        max_length = rd.num_pos_roots();
    return bfs_enumerate(rd, max_length, all_letters(rd.rank),
                         [](const std::vector<int>&) { return true; });
}

std::vector<int> weyl_exponents(const RootDatum& rd) {
    // Heights of positive roots; the dual partition of the height counts.
    std::map<int, int> count;
    for (const auto& r : rd.pos_root)
        count[std::accumulate(r.begin(), r.end(), 0)] += 1;
    // exponents = dual partition of the height counts
    std::vector<int> exps;
    int cols = count[1];  // = rank
    for (int j = 1; j <= cols; ++j) {
        int e = 0;
        for (auto& [h, c] : count)
            if (c >= j) ++e;
        exps.push_back(e);
    }
    std::sort(exps.begin(), exps.end());
    return exps;
}

Int weyl_order(const RootDatum& rd) {
    Int n = 1;
    for (int m : weyl_exponents(rd)) n *= (m + 1);
    return n;
}

std::vector<long> poincare_polynomial(const RootDatum& rd, long limit) {
    Int order = weyl_order(rd);
    if (order > limit)
        throw Error("poincare_polynomial: |W| = " + order.get_str() +
                    " exceeds the enumeration limit");
    WeylLevels lv = enumerate_weyl(rd, rd.num_pos_roots());
    std::vector<long> coeffs;
    coeffs.reserve(lv.by_length.size());
    for (const auto& level : lv.by_length) coeffs.push_back(static_cast<long>(level.size()));
    return coeffs;
}

bool is_minimal_rep(const RootDatum& rd, const std::vector<int>& removed_nodes,
                    const WeylElement& w) {
    int n = rd.rank;
    for (int j = 0; j < n; ++j) {
        bool removed = false;
        for (int r : removed_nodes)
            if (r - 1 == j) { removed = true; break; }
        if (removed) continue;
        for (int k = 0; k < n; ++k)
            if (w.act_r[k * n + j] < 0) return false;
    }
    return true;
}

CosetSystem minimal_coset_reps(const RootDatum& rd, const std::vector<int>& removed_nodes,
                               int max_length) {
    for (int r : removed_nodes)
        if (r < 1 || r > rd.rank) throw Error("parabolic node out of range");
    int n = rd.rank;
    std::vector<char> removed(n, 0);
    for (int r : removed_nodes) removed[r - 1] = 1;
    auto keep = [&](const std::vector<int>& act_r) {
        for (int j = 0; j < n; ++j) {
            if (removed[j]) continue;
            for (int k = 0; k < n; ++k)
                if (act_r[k * n + j] < 0) return false;
        }
        return true;
    };
    CosetSystem cs;
    cs.removed_nodes = removed_nodes;
    std::sort(cs.removed_nodes.begin(), cs.removed_nodes.end());
    if (max_length > rd.num_pos_roots()) max_length = rd.num_pos_roots();
    cs.reps = bfs_enumerate(rd, max_length, all_letters(n), keep);
    return cs;
}

CosetSystem minimal_coset_reps(const RootDatum& rd, int r, int max_length) {
    return minimal_coset_reps(rd, std::vector<int>{r}, max_length);
}

Int levi_weyl_order(const RootDatum& rd, const std::vector<int>& removed_nodes) {
    std::vector<char> removed(rd.rank, 0);
    for (int r : removed_nodes) removed[r - 1] = 1;
    std::vector<int> letters;
    for (int i = 0; i < rd.rank; ++i)
        if (!removed[i]) letters.push_back(i);
    WeylLevels lv = bfs_enumerate(rd, rd.num_pos_roots(), letters,
                                  [](const std::vector<int>&) { return true; });
    return Int(lv.total());
}

}  // namespace flagrep::rootsys
