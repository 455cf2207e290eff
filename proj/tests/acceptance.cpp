// Acceptance suite: one line per criterion, exact tolerances throughout.
// Exit status is the number of failed criteria.

#include <cstdio>
#include <iostream>
#include <numeric>
#include <sstream>

#include "flagrep/golden.hpp"
#include "flagrep/invariants.hpp"
#include "flagrep/ogring.hpp"
#include "flagrep/schubert.hpp"
#include "flagrep/springer.hpp"
#include "flagrep/ximap.hpp"

using namespace flagrep;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name;
    if (!detail.empty()) std::cout << "  -- " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
}

const std::string kDataDir = golden::default_data_dir();

// 1. Springer tables, exact: every Laurent coefficient of the published
//    G2/F4/E6/E7 tables, zero tolerance.
void criterion1() {
    std::ostringstream detail;
    bool pass = true;
    for (const char* g : {"G2", "F4", "E6", "E7"}) {
        rootsys::RootDatum rd = rootsys::build_root_datum(g[0], g[1] - '0');
        springer::TorusMap tm = springer::theta_for_group(rd);
        golden::ThetaTable table = golden::load_theta_table(kDataDir, g);
        bool ok = table.coordinates.size() == tm.coords.size();
        for (size_t i = 0; ok && i < tm.coords.size(); ++i)
            ok = table.coordinates[i].str() == tm.coords[i].str();
        if (!ok) {
            // diagnose scalar discrepancies: the published E6 table is exactly
            // 3x the map with d(theta)|_1 = id (3 = Dynkin index of the 27);
            // the published table thereby violates the defining retraction
            // property, and the published E6 xi rows require the unscaled
            // normalization.
            for (const Rat& s : {Rat(3), Rat(2), Rat(6)}) {
                bool scaled = table.coordinates.size() == tm.coords.size();
                for (size_t i = 0; scaled && i < tm.coords.size(); ++i)
                    scaled = table.coordinates[i] == tm.coords[i] * s;
                if (scaled) {
                    detail << g << " MISMATCH (published = " << rat_str(s)
                           << " x computed; published violates d(theta)|_1 = id) ";
                    break;
                }
            }
        } else {
            detail << g << " ok ";
        }
        pass = pass && ok;
    }
    report(1, "Springer theta tables reproduce the published tables exactly", pass,
           detail.str());
}

// 2. xi tables for G2 (4 rows) and F4 (18 rows): status `match` on every row.
void criterion2() {
    auto lib = invariants::load_case_library(kDataDir);
    std::ostringstream detail;
    bool pass = true;
    for (const char* g : {"G2", "F4"}) {
        rootsys::RootDatum rd = rootsys::build_root_datum(g[0], g[1] - '0');
        auto table = golden::load_xi_table(kDataDir, g);
        ximap::XiReport rep = ximap::report_section(rd, lib, table, 0, 6, 2);
        bool ok = rep.skipped() == 0 && rep.mismatched() == 0;
        detail << g << ": " << rep.matched() << "/" << rep.rows.size() << " match";
        if (rep.mismatched() > 0) {
            detail << " (" << rep.mismatched() << " cross-engine-stable mismatch(paper):";
            for (const auto& row : rep.rows)
                if (row.status == "mismatch(paper)")
                    detail << " [P" << row.r << " " << row.generator << " computed "
                           << row.computed << " vs published " << row.paper << "]";
            detail << ")";
        }
        detail << "; ";
        pass = pass && ok;
    }
    report(2, "xi tables match for G2 and F4 on every row", pass, detail.str());
}

// 3. E6 rows of degree <= 4 (all six parabolics) + the E7 P7 rows psi2, psi5,
//    psi6, omega7: every row match or cross-engine-stable mismatch(paper),
//    and >= 90% match.
void criterion3() {
    auto lib = invariants::load_case_library(kDataDir);
    int match = 0, mismatch = 0, other = 0;
    std::ostringstream mismatches;
    {
        rootsys::RootDatum rd = rootsys::build_root_datum('E', 6);
        auto table = golden::load_xi_table(kDataDir, "E6");
        ximap::XiReport rep = ximap::report_section(rd, lib, table, 0, 4, 2);
        for (const auto& row : rep.rows) {
            if (row.status == "skipped") continue;
            if (row.status == "match") ++match;
            else if (row.status == "mismatch(paper)") {
                ++mismatch;
                mismatches << " [E6 P" << row.r << " " << row.generator << ": computed "
                           << row.computed << ", published " << row.paper << "]";
            } else ++other;
        }
    }
    {
        rootsys::RootDatum rd = rootsys::build_root_datum('E', 7);
        auto table = golden::load_xi_table(kDataDir, "E7");
        ximap::XiReport rep = ximap::report_section(rd, lib, table, 7, 6, 2);
        for (const auto& row : rep.rows) {
            if (row.status == "skipped") continue;  // psi8/9/12 are not gated
            if (row.status == "match") ++match;
            else if (row.status == "mismatch(paper)") {
                ++mismatch;
                mismatches << " [E7 P" << row.r << " " << row.generator << "]";
            } else ++other;
        }
    }
    int total = match + mismatch + other;
    bool all_stable = other == 0;
    double rate = total ? 100.0 * match / total : 0.0;
    bool pass = all_stable && rate >= 90.0;
    std::ostringstream detail;
    detail.precision(1);
    detail << std::fixed << match << "/" << total << " match (" << rate
           << "%), every discrepancy cross-engine stable: " << (all_stable ? "yes" : "NO");
    if (mismatch) detail << ";" << mismatches.str();
    report(3, "E6 desk-scale rows and E7 P7 rows: >= 90% match, all stable", pass,
           detail.str());
}

// 4. Engine equivalence, exhaustive over A2, B2, G2, A3, B3.
void criterion4() {
    bool pass = true;
    long pairs = 0;
    for (auto [t, r] : {std::pair<char, int>{'A', 2}, {'B', 2}, {'G', 2}, {'A', 3}, {'B', 3}}) {
        rootsys::RootDatum rd = rootsys::build_root_datum(t, r);
        schubert::CohomologyContext ctx(rd, rd.num_pos_roots());
        const auto& ball = ctx.ball();
        for (int i = 0; i < ball.size() && pass; ++i)
            for (int j = 0; j < ball.size() && pass; ++j) {
                if (ball.length(i) + ball.length(j) > rd.num_pos_roots()) continue;
                schubert::SchubertClass a, b;
                a.tag = b.tag = schubert::SpaceTag{rd.type, rd.rank, {}};
                a.add(ball.element(i), 1);
                b.add(ball.element(j), 1);
                pass = ctx.cup_product(a, b, schubert::Engine::chevalley) ==
                       ctx.cup_product(a, b, schubert::Engine::duan);
                ++pairs;
            }
    }
    report(4, "Duan and Chevalley engines agree on every pair in A2,B2,G2,A3,B3", pass,
           std::to_string(pairs) + " products compared");
}

// 5. Weyl combinatorics: Poincare polynomials against the degree product
//    formula; |W^{P_7}(E7)| = 56 by bounded coset enumeration.
void criterion5() {
    auto poincare_from_degrees = [](const std::vector<int>& deg) {
        std::vector<long> p{1};
        for (int d : deg) {
            std::vector<long> q(p.size() + d - 1, 0);
            for (size_t i = 0; i < p.size(); ++i)
                for (int j = 0; j < d; ++j) q[i + j] += p[i];
            p = std::move(q);
        }
        return p;
    };
    struct Case {
        char t;
        int r;
        std::vector<int> degrees;
    };
    std::vector<Case> cases = {
        {'A', 1, {2}},
        {'A', 2, {2, 3}},
        {'A', 3, {2, 3, 4}},
        {'B', 2, {2, 4}},
        {'B', 3, {2, 4, 6}},
        {'D', 4, {2, 4, 4, 6}},
        {'D', 5, {2, 4, 5, 6, 8}},
        {'F', 4, {2, 6, 8, 12}},
        {'E', 6, {2, 5, 6, 8, 9, 12}},
    };
    bool pass = true;
    for (const auto& c : cases) {
        rootsys::RootDatum rd = rootsys::build_root_datum(c.t, c.r);
        if (rootsys::poincare_polynomial(rd) != poincare_from_degrees(c.degrees)) {
            pass = false;
            break;
        }
    }
    rootsys::RootDatum e7 = rootsys::build_root_datum('E', 7);
    auto cs = rootsys::minimal_coset_reps(e7, 7, e7.num_pos_roots());
    bool fifty_six = cs.reps.total() == 56;
    report(5, "Poincare polynomials match the product formula; |W^{P7}(E7)| = 56",
           pass && fifty_six);
}

// 6. Type-D generator identity at (4,2), (5,2), (5,3), all i.
void criterion6() {
    bool pass = true;
    std::ostringstream detail;
    for (auto [n, k] : {std::pair<int, int>{4, 2}, {5, 2}, {5, 3}}) {
        rootsys::RootDatum rd = rootsys::build_root_datum('D', n);
        schubert::CohomologyContext ctx(rd, rd.num_pos_roots());
        for (int i = 1; i <= k; ++i) {
            bool ok = ximap::verify_chern_identity_D(ctx, n, k, i);
            pass = pass && ok;
            detail << "(" << n << "," << k << ",i=" << i << (ok ? ") ok " : ") FAIL ");
        }
    }
    report(6, "type-D Chern identity for the e_i generators", pass, detail.str());
}

// 7. Presented rings: Hilbert functions equal the partition counts and the
//    coset totals; every defining relation reduces to zero.
void criterion7() {
    bool pass = true;
    std::ostringstream detail;
    for (auto [n, k] : {std::pair<int, int>{4, 2}, {5, 2}, {5, 3}}) {
        // construction aborts on a Hilbert mismatch, so reaching here means
        // the partition-count certificate held degree by degree
        ogring::RingQ ring = ogring::RingQ::finite(k, n);
        long total = std::accumulate(ring.hilbert().begin(), ring.hilbert().end(), 0L);
        rootsys::RootDatum rd = rootsys::build_root_datum('D', n);
        auto cs = rootsys::minimal_coset_reps(rd, n - k, rd.num_pos_roots());
        bool ok = total == cs.reps.total();
        for (const auto& rel : ring.relations())
            ok = ok && ring.from_raw(rel).is_zero();
        detail << "OG(" << n - k << "," << 2 * n << "): dim " << total << (ok ? " ok " : " FAIL ");
        pass = pass && ok;
    }
    report(7, "presented-ring Hilbert functions and relations", pass, detail.str());
}

// 8. Mod-2 core: displayed images hold verbatim; full rank in every graded
//    degree <= 4k for k = 2, 3.
void criterion8() {
    bool pass = true;
    std::ostringstream detail;
    for (auto [k, d] : {std::pair<int, int>{2, 8}, {3, 12}}) {
        auto rep = ogring::mod2_injectivity_check(k, d);
        bool ok = rep.all_injective && rep.images_match_displayed && rep.parity_core_holds;
        detail << "k=" << k << " D=" << d << (ok ? " injective " : " FAIL ");
        pass = pass && ok;
    }
    report(8, "mod-2 generator images and injectivity ranks", pass, detail.str());
}

// 9. Structural suites: invariance of every case-library generator, relation
//    polynomials vanish, the ring-homomorphism law on sampled pairs, and
//    functoriality for B in P_r (G2, F4).
void criterion9() {
    auto lib = invariants::load_case_library(kDataDir);
    bool inv_ok = true, rel_ok = true;
    for (const auto& fam : lib.cases) {
        rootsys::RootDatum rd = rootsys::build_root_datum(fam.group[0], fam.group[1] - '0');
        for (const auto& gen : fam.generators)
            inv_ok = inv_ok && invariants::check_invariance(rd, fam.r, gen.poly).pass;
        for (const auto& rel : fam.relations) rel_ok = rel_ok && rel.is_zero();
    }

    // ring-homomorphism law: xi(f g) = xi(f) xi(g) on >= 20 pairs per group;
    // candidates are the family generators together with their pairwise
    // products (G2 has too few bare generators to reach twenty pairs)
    bool hom_ok = true;
    std::ostringstream detail;
    for (const char* g : {"G2", "F4", "E6", "E7"}) {
        rootsys::RootDatum rd = rootsys::build_root_datum(g[0], g[1] - '0');
        schubert::CohomologyContext ctx(rd, 6);
        int checked = 0;
        for (int r : lib.parabolics(g)) {
            const auto& fam = lib.get(g, r);
            std::vector<std::pair<polyalg::Poly, int>> cands;
            for (const auto& gen : fam.generators)
                if (gen.degree <= 3) cands.emplace_back(gen.poly, gen.degree);
            size_t ngen = cands.size();
            for (size_t a = 0; a < ngen; ++a)
                for (size_t b = a; b < ngen; ++b)
                    if (cands[a].second + cands[b].second <= 3)
                        cands.emplace_back(cands[a].first * cands[b].first,
                                           cands[a].second + cands[b].second);
            for (size_t a = 0; a < cands.size() && checked < 20; ++a)
                for (size_t b = a; b < cands.size() && checked < 20; ++b) {
                    if (cands[a].second + cands[b].second > 6) continue;
                    polyalg::Poly prod = cands[a].first * cands[b].first;
                    schubert::SchubertClass lhs = ctx.borel_image(prod, {r});
                    schubert::SchubertClass rhs =
                        ctx.cup_product(ctx.borel_image(cands[a].first, {r}),
                                        ctx.borel_image(cands[b].first, {r}),
                                        schubert::Engine::chevalley);
                    hom_ok = hom_ok && lhs == rhs;
                    ++checked;
                }
            if (checked >= 20) break;
        }
        detail << g << ":" << checked << " pairs ";
        hom_ok = hom_ok && checked >= 20;
    }

    bool fun_ok = true;
    {
        rootsys::RootDatum g2 = rootsys::build_root_datum('G', 2);
        schubert::CohomologyContext ctx(g2, 6);
        for (int r = 1; r <= 2; ++r)
            for (const auto& gen : lib.get("G2", r).generators)
                fun_ok = fun_ok && ximap::functoriality_check(ctx, gen.poly, {1, 2}, {r});
        rootsys::RootDatum f4 = rootsys::build_root_datum('F', 4);
        schubert::CohomologyContext ctx4(f4, 6);
        for (int r = 1; r <= 4; ++r)
            for (const auto& gen : lib.get("F4", r).generators)
                fun_ok = fun_ok && ximap::functoriality_check(ctx4, gen.poly, {1, 2, 3, 4}, {r});
    }
    report(9, "invariance, relations, ring-homomorphism law, functoriality",
           inv_ok && rel_ok && hom_ok && fun_ok,
           detail.str() + (inv_ok ? "" : "invariance FAIL ") + (rel_ok ? "" : "relations FAIL ") +
               (fun_ok ? "" : "functoriality FAIL"));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::cout << (failures == 0 ? "all criteria passed"
                                : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures;
}
