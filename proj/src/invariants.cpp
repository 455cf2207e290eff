#include "flagrep/invariants.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "flagrep/springer.hpp"

namespace flagrep::invariants {

using nlohmann::json;
using polyalg::Exp;
using polyalg::parse_poly;
using rootsys::build_root_datum;
using rootsys::reflect_poly;

const GeneratorFamily& CaseLibrary::get(const std::string& group, int r) const {
    for (const auto& c : cases)
        if (c.group == group && c.r == r) return c;
    throw Error("untabulated case " + group + " P" + std::to_string(r));
}

std::vector<int> CaseLibrary::parabolics(const std::string& group) const {
    std::vector<int> rs;
    for (const auto& c : cases)
        if (c.group == group) rs.push_back(c.r);
    std::sort(rs.begin(), rs.end());
    return rs;
}

namespace {

RootDatum datum_for(const std::string& group) {
    if (group.size() != 2) throw Error("bad group label " + group);
    return build_root_datum(group[0], group[1] - '0');
}

}  // namespace

CaseLibrary load_case_library(const std::string& data_dir) {
    std::ifstream in(data_dir + "/case_library.json");
    if (!in) throw Error("cannot open " + data_dir + "/case_library.json");
    json j = json::parse(in);
    if (j.at("schema") != "flagrep-case-library-v1") throw Error("unexpected case-library schema");
    CaseLibrary lib;
    for (const auto& c : j.at("cases")) {
        GeneratorFamily fam;
        fam.group = c.at("group");
        fam.r = c.at("r");
        RootDatum rd = datum_for(fam.group);
        auto wvars = polyalg::make_vars("w", rd.rank);

        // extended space with the y-names appended, for parsing expressions
        std::vector<std::string> extnames = wvars->names;
        std::vector<std::string> ynames;
        for (const auto& y : c.at("y")) {
            ynames.push_back(y.at("name"));
            extnames.push_back(y.at("name"));
        }
        auto ext = polyalg::make_vars(extnames);
        std::vector<Poly> images;
        for (int i = 0; i < rd.rank; ++i) images.push_back(Poly::variable(wvars, i));
        for (const auto& y : c.at("y")) {
            Poly yp = parse_poly(wvars, y.at("expr").get<std::string>());
            fam.y.emplace(y.at("name").get<std::string>(), yp);
            images.push_back(yp);
        }
        auto materialize = [&](const std::string& expr) {
            return parse_poly(ext, expr).substitute(images);
        };

        for (const auto& rel : c.at("relations")) {
            fam.relations.push_back(materialize(rel.get<std::string>()));
        }
        for (const auto& g : c.at("generators")) {
            GeneratorDef def;
            def.name = g.at("name");
            def.degree = g.at("degree");
            if (g.contains("scale")) def.scale = rat_parse(g.at("scale").get<std::string>());
            if (g.contains("expr")) {
                def.poly = materialize(g.at("expr").get<std::string>());
            } else if (g.contains("esym")) {
                std::vector<Poly> args;
                for (const auto& a : g.at("args"))
                    args.push_back(materialize(a.get<std::string>()));
                def.poly = polyalg::elementary_symmetric(g.at("esym").get<int>(), args);
            } else if (g.contains("psi")) {
                def.poly = e6_psi(rd, g.at("psi").get<int>());
            } else {
                throw Error("generator " + def.name + " has no construction");
            }
            int d = 0;
            if (!def.poly.is_homogeneous(&d) || d != def.degree)
                throw Error("generator " + def.name + " of " + fam.group + " P" +
                            std::to_string(fam.r) + " has degree " + std::to_string(d) +
                            ", declared " + std::to_string(def.degree));
            fam.generators.push_back(std::move(def));
        }
        lib.cases.push_back(std::move(fam));
    }
    return lib;
}

InvarianceResult check_invariance(const RootDatum& rd, const std::vector<int>& removed,
                                  const Poly& p) {
    InvarianceResult res;
    for (int j = 1; j <= rd.rank; ++j) {
        if (std::find(removed.begin(), removed.end(), j) != removed.end()) continue;
        Poly img = reflect_poly(rd, j, p);
        if (!(img == p)) {
            res.pass = false;
            res.witness = j;
            res.diff = img - p;
            return res;
        }
    }
    return res;
}

InvarianceResult check_invariance(const RootDatum& rd, int r, const Poly& p) {
    return check_invariance(rd, std::vector<int>{r}, p);
}

Poly e6_psi(const RootDatum& e7, int m) {
    if (e7.type != 'E' || e7.rank != 7) throw Error("e6_psi expects the E7 datum");
    static const std::set<int> allowed{2, 5, 6, 8, 9, 12};
    if (!allowed.count(m)) throw Error("psi_m is only defined for m in {2,5,6,8,9,12}");
    auto avars = polyalg::make_vars("a", 7);
    auto mono = [&](std::initializer_list<int> coeffs) {
        Poly p(avars);
        int i = 0;
        for (int c : coeffs) {
            if (c != 0) p += Poly::variable(avars, i) * Rat(c);
            ++i;
        }
        return p;
    };
    // weights of the E6 reflection representation, in the simple-root basis
    std::vector<Poly> x{
        mono({5, 0, 4, 3, 2, 1, 0}),
        mono({-1, 0, 4, 3, 2, 1, 0}),
        mono({-1, 0, -2, 3, 2, 1, 0}),
        mono({-1, 0, -2, -3, 2, 1, 0}),
        mono({-1, 0, -2, -3, -4, 1, 0}),
        mono({-1, 0, -2, -3, -4, -5, 0}),
    };
    Poly xc = mono({-3, -6, -6, -9, -6, -3, 0});

    Poly psi(avars);
    for (int i = 0; i < 6; ++i) psi += (x[i] + xc).pow(m);       // a_i
    for (int i = 0; i < 6; ++i) psi += (x[i] - xc).pow(m);       // b_i
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) psi += (-x[i] - x[j]).pow(m);  // c_ij

    // alpha_i = sum_j cartan[i][j] omega_j
    auto wvars = polyalg::make_vars("w", 7);
    std::vector<Poly> alpha;
    for (int i = 0; i < 7; ++i) {
        Poly a(wvars);
        for (int j = 0; j < 7; ++j)
            if (e7.cartan[i][j] != 0) a += Poly::variable(wvars, j) * Rat(e7.cartan[i][j]);
        alpha.push_back(std::move(a));
    }
    return psi.substitute(alpha);
}

DnLeviGenerators dn_levi_generators(int n, int k) {
    if (n < 4 || k < 2 || k > n - 1) throw Error("dn_levi_generators: out-of-range (n, k)");
    auto wvars = polyalg::make_vars("w", n);
    auto delta = [&](int p) {
        auto coords = flagrep::springer::dn_delta_in_omega(n, p);
        Poly d(wvars);
        for (int i = 0; i < n; ++i)
            if (coords[i] != 0) d += Poly::variable(wvars, i) * Rat(coords[i]);
        return d;
    };
    DnLeviGenerators out;
    out.n = n;
    out.k = k;
    std::vector<Poly> so_sq, gl_args;
    Poly odd(wvars, 1);
    for (int p = n - k + 1; p <= n; ++p) {
        Poly d = delta(p);
        so_sq.push_back(d * d);
        odd = odd * d;
    }
    for (int p = 1; p <= n - k; ++p) gl_args.push_back(delta(p));
    for (int i = 1; i <= k; ++i) out.so_even.push_back(polyalg::elementary_symmetric(i, so_sq));
    out.so_odd = odd;
    for (int i = 1; i <= n - k; ++i) out.gl.push_back(polyalg::elementary_symmetric(i, gl_args));
    return out;
}

Poly reynolds_average(const RootDatum& rd, const std::vector<int>& removed, const Poly& p,
                      long levi_order_limit) {
    Int order = rootsys::levi_weyl_order(rd, removed);
    if (order > levi_order_limit)
        throw Error("reynolds_average: Levi Weyl group too large (" + order.get_str() + ")");
    // enumerate W_L via the Levi letters
    std::vector<char> is_removed(rd.rank + 1, 0);
    for (int r : removed) is_removed[r] = 1;
    std::vector<rootsys::WeylElement> frontier{rootsys::weyl_identity(rd)};
    std::set<std::vector<int>> seen{frontier[0].act_w};
    Poly acc = p;
    long count = 1;
    while (!frontier.empty()) {
        std::vector<rootsys::WeylElement> next;
        for (const auto& w : frontier) {
            for (int i = 1; i <= rd.rank; ++i) {
                if (is_removed[i]) continue;
                auto v = rootsys::weyl_mul(rd, rootsys::weyl_simple(rd, i), w);
                if (seen.insert(v.act_w).second) {
                    acc += p.substitute(rootsys::weyl_poly_images(rd, v, p.vars()));
                    ++count;
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    return acc * Rat(1, count);
}

int span_dimension(const std::vector<Poly>& polys) {
    // coordinates over the union of monomials, rational row reduction
    std::vector<Exp> monos;
    std::set<Exp> seen;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms())
            if (seen.insert(e).second) monos.push_back(e);
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : polys) {
        std::vector<Rat> row(monos.size(), 0);
        for (size_t j = 0; j < monos.size(); ++j) row[j] = p.coeff(monos[j]);
        rows.push_back(std::move(row));
    }
    int rank = 0;
    size_t col = 0;
    for (; col < monos.size() && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(rows[piv], rows[rank]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat f = rows[r][col] / rows[rank][col];
            for (size_t j = col; j < monos.size(); ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

std::vector<Poly> invariant_space(const RootDatum& rd, const std::vector<int>& removed, int d,
                                  long levi_order_limit) {
    auto wvars = polyalg::make_vars("w", rd.rank);
    // all degree-d monomials
    std::vector<Poly> out;
    Exp e(rd.rank, 0);
    std::function<void(int, int)> gen = [&](int pos, int rem) {
        if (pos == rd.rank - 1) {
            e[pos] = rem;
            Poly avg = reynolds_average(rd, removed, Poly::monomial(wvars, e, 1),
                                        levi_order_limit);
            if (!avg.is_zero()) out.push_back(avg);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            e[pos] = v;
            gen(pos + 1, rem - v);
        }
    };
    gen(0, d);
    return out;
}

std::vector<Poly> generator_products_of_degree(const GeneratorFamily& fam, int d) {
    std::vector<Poly> out;
    int ng = static_cast<int>(fam.generators.size());
    std::vector<int> counts(ng, 0);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (rem == 0) {
            Poly prod = Poly(fam.generators.front().poly.vars(), 1);
            for (int i = 0; i < ng; ++i)
                for (int c = 0; c < counts[i]; ++c) prod = prod * fam.generators[i].poly;
            out.push_back(prod);
            return;
        }
        if (pos >= ng) return;
        int deg = fam.generators[pos].degree;
        for (int c = 0; c * deg <= rem; ++c) {
            counts[pos] = c;
            rec(pos + 1, rem - c * deg);
            counts[pos] = 0;
        }
    };
    rec(0, d);
    return out;
}

}  // namespace flagrep::invariants
