#include "flagrep/weights.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace flagrep::springer {

namespace {

std::vector<Rat> to_rat(const std::vector<int>& v) {
    return std::vector<Rat>(v.begin(), v.end());
}

bool is_dominant(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

// Sort a weight into the dominant chamber by simple reflections.
std::vector<int> dominant_rep(const RootDatum& rd, std::vector<int> v) {
    int n = rd.rank;
    for (;;) {
        int i = -1;
        for (int k = 0; k < n; ++k)
            if (v[k] < 0) { i = k; break; }
        if (i < 0) return v;
        int vi = v[i];
        for (int k = 0; k < n; ++k) v[k] -= vi * rd.cartan[i][k];
    }
}

}  // namespace

Rat weyl_dimension(const RootDatum& rd, const std::vector<int>& lambda) {
    std::vector<Rat> lam = to_rat(lambda), rho(rd.rank, 1);
    std::vector<Rat> lr(rd.rank);
    for (int i = 0; i < rd.rank; ++i) lr[i] = lam[i] + rho[i];
    Rat num = 1, den = 1;
    for (size_t p = 0; p < rd.pos_root.size(); ++p) {
        std::vector<Rat> beta_w(rd.rank);
        for (int i = 0; i < rd.rank; ++i) beta_w[i] = rd.pos_root_w[p][i];
        num *= rd.inner(lr, beta_w);
        den *= rd.inner(rho, beta_w);
    }
    return num / den;
}

WeightSystem weight_system(const RootDatum& rd, const std::vector<int>& lambda) {
    if (static_cast<int>(lambda.size()) != rd.rank)
        throw Error("weight_system: wrong coordinate length");
    if (!is_dominant(lambda)) throw Error("weight_system: highest weight is not dominant");
    int n = rd.rank;

    std::vector<Rat> rho(n, 1);
    std::vector<Rat> lam = to_rat(lambda);
    std::vector<Rat> lam_rho(n);
    for (int i = 0; i < n; ++i) lam_rho[i] = lam[i] + rho[i];
    Rat bound = rd.inner(lam_rho, lam_rho);

    // Dominant candidates mu = lambda - (nonneg alpha sum) with
    // (dom(mu)+rho, dom(mu)+rho) <= (lambda+rho, lambda+rho); BFS over
    // simple-root drops.
    std::set<std::vector<int>> visited;
    std::vector<std::vector<int>> frontier{lambda};
    visited.insert(lambda);
    std::vector<std::vector<int>> dominant;
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& mu : frontier) {
            if (is_dominant(mu)) dominant.push_back(mu);
            for (int i = 0; i < n; ++i) {
                std::vector<int> nu = mu;
                for (int k = 0; k < n; ++k) nu[k] -= rd.cartan[i][k];
                if (visited.count(nu)) continue;
                std::vector<Rat> nu_rho(n);
                auto dom = dominant_rep(rd, nu);
                for (int k = 0; k < n; ++k) nu_rho[k] = Rat(dom[k]) + rho[k];
                if (rd.inner(nu_rho, nu_rho) > bound) continue;
                visited.insert(nu);
                next.push_back(std::move(nu));
            }
        }
        frontier = std::move(next);
    }
    // Increasing depth below lambda.
    auto height = [&](const std::vector<int>& mu) {
        Rat h = 0;
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) h += Rat(lambda[i] - mu[i]) * rd.fweight_in_roots[i][j];
        return h;
    };
    std::sort(dominant.begin(), dominant.end(), [&](const auto& a, const auto& b) {
        Rat ha = height(a), hb = height(b);
        if (ha != hb) return ha < hb;
        return a < b;
    });

    // Freudenthal recursion on dominant weights.
    std::map<std::vector<int>, Rat> mult;
    auto mult_of = [&](const std::vector<int>& mu) -> Rat {
        auto it = mult.find(dominant_rep(rd, mu));
        return it == mult.end() ? Rat(0) : it->second;
    };
    for (const auto& mu : dominant) {
        if (mu == lambda) {
            mult[mu] = 1;
            continue;
        }
        std::vector<Rat> mu_rho(n);
        for (int i = 0; i < n; ++i) mu_rho[i] = Rat(mu[i]) + rho[i];
        Rat denom = bound - rd.inner(mu_rho, mu_rho);
        if (denom == 0) { mult[mu] = 0; continue; }
        Rat acc = 0;
        for (size_t p = 0; p < rd.pos_root.size(); ++p) {
            const auto& beta = rd.pos_root_w[p];
            std::vector<Rat> beta_r = to_rat(beta);
            for (int j = 1;; ++j) {
                std::vector<int> nu(n);
                for (int i = 0; i < n; ++i) nu[i] = mu[i] + j * beta[i];
                Rat m = mult_of(nu);
                if (m == 0) {
                    // mu + j beta may leave the hull for good; stop once the
                    // dominant representative is beyond the norm bound
                    std::vector<Rat> nu_rho(n);
                    auto dom = dominant_rep(rd, nu);
                    for (int i = 0; i < n; ++i) nu_rho[i] = Rat(dom[i]) + rho[i];
                    if (rd.inner(nu_rho, nu_rho) > bound) break;
                    continue;
                }
                std::vector<Rat> nu_r = to_rat(nu);
                acc += m * rd.inner(nu_r, beta_r);
            }
        }
        mult[mu] = 2 * acc / denom;
    }

    // Expand W-orbits.
    WeightSystem ws;
    ws.highest = lambda;
    std::map<std::vector<int>, long> all;
    for (const auto& [mu, m] : mult) {
        if (m == 0) continue;
        if (!rat_is_integer(m) || m < 0)
            throw Error("Freudenthal produced a non-integral multiplicity");
        long mm = rat_to_long(m);
        std::set<std::vector<int>> orbit;
        std::vector<std::vector<int>> stack{mu};
        orbit.insert(mu);
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (int i = 0; i < n; ++i) {
                std::vector<int> w = v;
                int vi = v[i];
                for (int k = 0; k < n; ++k) w[k] -= vi * rd.cartan[i][k];
                if (orbit.insert(w).second) stack.push_back(w);
            }
        }
        for (const auto& v : orbit) all[v] += mm;
    }
    for (auto& [v, m] : all) ws.entries.emplace_back(v, m);

    Rat dim = weyl_dimension(rd, lambda);
    if (Rat(ws.dimension()) != dim)
        throw Error("weight system dimension " + std::to_string(ws.dimension()) +
                    " does not match the Weyl dimension formula " + rat_str(dim));
    return ws;
}

std::vector<std::vector<Rat>> trace_form(const RootDatum& rd, const WeightSystem& ws) {
    int n = rd.rank;
    if (ws.entries.empty()) throw Error("trace_form: empty weight system");
    std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n, 0));
    for (const auto& [mu, m] : ws.entries)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) b[i][j] += Rat(m) * Rat(mu[i]) * Rat(mu[j]);
    // reject degenerate forms (trivial or otherwise non-almost-faithful lambda)
    std::vector<std::vector<Rat>> m = b;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("trace form is degenerate: weight is not almost faithful");
        std::swap(m[piv], m[col]);
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rat f = m[r][col] / m[col][col];
            for (int j = col; j < n; ++j) m[r][j] -= f * m[col][j];
        }
    }
    return b;
}

}  // namespace flagrep::springer
