#include "flagrep/springer.hpp"

namespace flagrep::springer {

namespace {

std::vector<std::vector<Rat>> invert(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("singular basis configuration");
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

BasisConfig finish_config(std::string name, int rank, std::vector<std::vector<Rat>> x) {
    BasisConfig cfg;
    cfg.name = std::move(name);
    cfg.x_in_omega = x;
    cfg.omega_to_t = invert(std::move(x));
    cfg.tvars = polyalg::make_vars("t", rank, /*laurent=*/true);
    return cfg;
}

}  // namespace

BasisConfig omega_basis_config(const RootDatum& rd) {
    int n = rd.rank;
    std::vector<std::vector<Rat>> x(n, std::vector<Rat>(n, 0));
    for (int i = 0; i < n; ++i) x[i][i] = 1;
    return finish_config("omega", n, std::move(x));
}

BasisConfig g2_basis_config(const RootDatum& rd) {
    if (rd.type != 'G') throw Error("g2_basis_config needs type G2");
    // columns: x1 = w1, x2 = w2 - w1
    std::vector<std::vector<Rat>> x{{1, -1}, {0, 1}};
    return finish_config("g2", 2, std::move(x));
}

std::vector<int> dn_delta_in_omega(int n, int p) {
    if (p < 1 || p > n) throw Error("delta index out of range");
    std::vector<int> d(n, 0);
    if (p == 1) {
        d[0] = 1;
    } else if (p <= n - 2) {
        d[p - 1] = 1;
        d[p - 2] = -1;
    } else if (p == n - 1) {
        d[n - 2] = 1;
        d[n - 1] = 1;
        d[n - 3] = -1;
    } else {
        d[n - 1] = 1;
        d[n - 2] = -1;
    }
    return d;
}

BasisConfig dn_basis_config(const RootDatum& rd) {
    if (rd.type != 'D') throw Error("dn_basis_config needs type D");
    int n = rd.rank;
    std::vector<std::vector<Rat>> x(n, std::vector<Rat>(n, 0));
    for (int p = 1; p <= n; ++p) {
        auto d = dn_delta_in_omega(n, p);
        for (int k = 0; k < n; ++k) x[k][p - 1] = d[k];
    }
    return finish_config("dn-diagonal", n, std::move(x));
}

TorusMap theta_torus(const RootDatum& rd, const WeightSystem& ws, const BasisConfig& config) {
    int n = rd.rank;
    auto b = trace_form(rd, ws);  // throws if singular

    // m_i(t) = sum_mu mult(mu) t^mu mu_i with exponents X^{-1} mu
    std::vector<Poly> m(n, Poly(config.tvars));
    for (const auto& [mu, mult] : ws.entries) {
        polyalg::Exp e(n);
        for (int k = 0; k < n; ++k) {
            Rat x = 0;
            for (int j = 0; j < n; ++j) x += config.omega_to_t[k][j] * Rat(mu[j]);
            if (!rat_is_integer(x))
                throw Error("weight has non-integral coordinates in the chosen torus basis");
            e[k] = static_cast<int>(rat_to_long(x));
        }
        for (int i = 0; i < n; ++i)
            if (mu[i] != 0) m[i].add_term(e, Rat(mult) * Rat(mu[i]));
    }

    // solve b * theta = m by Gaussian elimination with Poly right-hand sides
    std::vector<Poly> rhs = m;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (b[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw Error("singular trace form");
        std::swap(b[piv], b[col]);
        std::swap(rhs[piv], rhs[col]);
        Rat p = b[col][col];
        for (int j = 0; j < n; ++j) b[col][j] /= p;
        rhs[col] = rhs[col] * (Rat(1) / p);
        for (int r = 0; r < n; ++r) {
            if (r == col || b[r][col] == 0) continue;
            Rat f = b[r][col];
            for (int j = 0; j < n; ++j) b[r][j] -= f * b[col][j];
            rhs[r] -= rhs[col] * f;
        }
    }

    TorusMap tm;
    tm.config = config;
    tm.coords = std::move(rhs);
    // theta_lambda(1) = 0
    for (const auto& c : tm.coords) {
        Rat at_one = 0;
        for (const auto& [e, coeff] : c.terms()) at_one += coeff;
        if (at_one != 0) throw Error("theta coordinate does not vanish at t = 1");
    }
    return tm;
}

std::vector<int> minimal_dynkin_weight(const RootDatum& rd) {
    std::vector<int> lambda(rd.rank, 0);
    switch (rd.type) {
        case 'G': lambda[0] = 1; break;                  // omega1
        case 'F': lambda[3] = 1; break;                  // omega4
        case 'E':
            if (rd.rank == 6) lambda[0] = 1;             // omega1
            else if (rd.rank == 7) lambda[6] = 1;        // omega7
            else throw Error("E8 is out of scope");
            break;
        case 'D': lambda[0] = 1; break;                  // defining representation
        default: throw Error("no tabulated weight choice for this type");
    }
    return lambda;
}

TorusMap theta_for_group(const RootDatum& rd) {
    auto lambda = minimal_dynkin_weight(rd);
    WeightSystem ws = weight_system(rd, lambda);
    BasisConfig cfg;
    if (rd.type == 'G') cfg = g2_basis_config(rd);
    else if (rd.type == 'D') cfg = dn_basis_config(rd);
    else cfg = omega_basis_config(rd);
    return theta_torus(rd, ws, cfg);
}

}  // namespace flagrep::springer
