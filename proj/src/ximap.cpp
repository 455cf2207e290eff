#include "flagrep/ximap.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "flagrep/springer.hpp"

namespace flagrep::ximap {

using golden::XiGoldenRow;
using polyalg::elementary_symmetric;
using rootsys::weyl_from_word;
using schubert::SpaceTag;

SchubertClass xi_image(CohomologyContext& ctx, const GeneratorDef& gen, int r, Engine engine,
                       int jobs) {
    SchubertClass img = ctx.borel_image(gen.poly, {r}, engine, jobs);
    return img * gen.scale;
}

int XiReport::matched() const {
    int n = 0;
    for (const auto& row : rows) n += row.status == "match";
    return n;
}

int XiReport::mismatched() const {
    int n = 0;
    for (const auto& row : rows) n += row.status == "mismatch(paper)";
    return n;
}

int XiReport::skipped() const {
    int n = 0;
    for (const auto& row : rows) n += row.status == "skipped";
    return n;
}

SchubertClass golden_class(const RootDatum& rd, const XiGoldenRow& row) {
    SchubertClass c;
    c.tag = SpaceTag{rd.type, rd.rank, {row.r}};
    for (const auto& term : row.image) c.add(weyl_from_word(rd, term.word), term.coeff);
    return c;
}

XiReport report_section(const RootDatum& rd, const CaseLibrary& lib,
                        const golden::XiTable& table, int parabolic, int degree_ceiling,
                        int jobs, const std::function<void(const XiRow&)>& on_row) {
    XiReport report;
    report.group = table.group;
    report.ceiling = degree_ceiling;

    // published rows keyed by (r, generator label)
    std::map<std::pair<int, std::string>, const XiGoldenRow*> published;
    for (const auto& row : table.rows) published[{row.r, row.generator}] = &row;

    CohomologyContext ctx(rd, degree_ceiling);
    for (int r : lib.parabolics(table.group)) {
        if (parabolic != 0 && r != parabolic) continue;
        const GeneratorFamily& fam = lib.get(table.group, r);
        for (const auto& gen : fam.generators) {
            XiRow row;
            row.r = r;
            row.generator = gen.name;
            row.degree = gen.degree;
            auto it = published.find({r, gen.name});
            if (it == published.end())
                throw Error("no published row for " + table.group + " P" + std::to_string(r) +
                            " " + gen.name);
            SchubertClass paper = golden_class(rd, *it->second);
            row.paper = paper.str();
            if (gen.degree > degree_ceiling) {
                row.status = "skipped";
                if (on_row) on_row(row);
                report.rows.push_back(std::move(row));
                continue;
            }
            row.image = xi_image(ctx, gen, r, Engine::chevalley, jobs);
            row.computed = row.image.str();
            if (row.image == paper) {
                row.status = "match";
            } else {
                // a discrepancy is only reportable when stable across engines
                SchubertClass again = xi_image(ctx, gen, r, Engine::duan, jobs);
                if (!(again == row.image))
                    throw Error("engine disagreement on " + table.group + " P" +
                                std::to_string(r) + " " + gen.name +
                                ": chevalley " + row.image.str() + ", duan " + again.str());
                row.status = "mismatch(paper)";
            }
            if (on_row) on_row(row);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

std::vector<SchubertClass> chern_quotient_D(CohomologyContext& ctx, int n, int k) {
    const RootDatum& rd = ctx.datum();
    if (rd.type != 'D' || rd.rank != n) throw Error("chern_quotient_D: wrong datum");
    if (n < 4 || k < 2 || k > n - 1) throw Error("chern_quotient_D: out-of-range (n, k)");
    auto wvars = polyalg::make_vars("w", n);
    std::vector<Poly> x;
    for (int p = 1; p <= n - k; ++p) {
        auto coords = springer::dn_delta_in_omega(n, p);
        Poly d(wvars);
        for (int i = 0; i < n; ++i)
            if (coords[i] != 0) d += Poly::variable(wvars, i) * Rat(coords[i]);
        x.push_back(std::move(d));
    }
    // c(Q) = 1 / prod_p (1 - x_p) = sum_m h_m(x)
    std::vector<SchubertClass> c;
    for (int m = 0; m <= n + k; ++m) {
        if (m > ctx.ceiling())
            throw Error("chern_quotient_D: ceiling too small for c_" + std::to_string(m));
        Poly hm = polyalg::complete_homogeneous(m, x);
        c.push_back(ctx.borel_image(hm, {n - k}));
    }
    if (c[0].support.begin()->second != 1) throw Error("c_0 is not the unit class");
    // classes above the bundle rank vanish
    int top = std::min(ctx.ceiling(), n + k + 2);
    for (int m = n + k + 1; m <= top; ++m) {
        Poly hm = polyalg::complete_homogeneous(m, x);
        SchubertClass extra = ctx.borel_image(hm, {n - k});
        if (!extra.is_zero())
            throw Error("c_" + std::to_string(m) + " does not vanish beyond the bundle rank");
    }
    return c;
}

bool verify_chern_identity_D(CohomologyContext& ctx, int n, int k, int i) {
    if (i < 1 || i > k) throw Error("verify_chern_identity_D: need 1 <= i <= k");
    const RootDatum& rd = ctx.datum();
    auto gens = invariants::dn_levi_generators(n, k);
    SchubertClass lhs = ctx.borel_image(gens.so_even[i - 1], {n - k});

    auto c = chern_quotient_D(ctx, n, k);
    SchubertClass rhs = ctx.cup_product(c[i], c[i], Engine::chevalley);
    for (int j = 1; j <= i; ++j) {
        if (i + j >= static_cast<int>(c.size())) break;
        SchubertClass prod = ctx.cup_product(c[i + j], c[i - j], Engine::chevalley);
        rhs += prod * Rat(j % 2 == 0 ? 2 : -2);
    }
    return lhs == rhs;
}

bool functoriality_check(CohomologyContext& ctx, const Poly& f,
                         const std::vector<int>& removed_p, const std::vector<int>& removed_q) {
    for (int q : removed_q)
        if (std::find(removed_p.begin(), removed_p.end(), q) == removed_p.end())
            throw Error("functoriality_check: parabolics are not nested");
    SchubertClass via_p = ctx.borel_image(f, removed_p);
    SchubertClass via_q = ctx.borel_image(f, removed_q);
    if (via_p.support.size() != via_q.support.size()) return false;
    auto it = via_q.support.begin();
    for (const auto& [w, coeff] : via_p.support) {
        if (!(it->first == w) || it->second != coeff) return false;
        ++it;
    }
    return true;
}

}  // namespace flagrep::ximap
