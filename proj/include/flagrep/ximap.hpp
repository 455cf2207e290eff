#pragma once

#include <string>
#include <vector>

#include "flagrep/golden.hpp"
#include "flagrep/invariants.hpp"
#include "flagrep/schubert.hpp"

namespace flagrep::ximap {

using invariants::CaseLibrary;
using invariants::GeneratorDef;
using invariants::GeneratorFamily;
using polyalg::Poly;
using rootsys::RootDatum;
using schubert::CohomologyContext;
using schubert::Engine;
using schubert::SchubertClass;

// xi^{P_r} on a case-library generator: the scaled Borel image, supported on
// the minimal representatives of P_r.
SchubertClass xi_image(CohomologyContext& ctx, const GeneratorDef& gen, int r,
                       Engine engine = Engine::chevalley, int jobs = 1);

struct XiRow {
    int r = 0;
    std::string generator;
    int degree = 0;
    SchubertClass image;      // computed (scaled); empty when skipped
    std::string paper;        // printed value, canonical text
    std::string computed;     // canonical text of `image`
    std::string status;       // "match" | "mismatch(paper)" | "skipped"
};

struct XiReport {
    std::string group;
    int ceiling = 0;
    std::vector<XiRow> rows;

    int matched() const;
    int mismatched() const;
    int skipped() const;
};

// One row per published generator of the group (optionally one parabolic),
// in table order; rows above the degree ceiling are marked skipped. Every
// mismatch is re-derived with the Duan engine and only reported when both
// engines agree (an engine disagreement throws). `on_row`, when set, streams
// each finished row (long E6/E7 runs are hour-scale at high ceilings).
XiReport report_section(const RootDatum& rd, const CaseLibrary& lib,
                        const golden::XiTable& table, int parabolic /*0 = all*/,
                        int degree_ceiling, int jobs = 1,
                        const std::function<void(const XiRow&)>& on_row = {});

// Chern classes c_0..c_{n+k} of the tautological quotient bundle on
// OG(n-k, 2n), in the Schubert basis of P_{n-k}.
std::vector<SchubertClass> chern_quotient_D(CohomologyContext& ctx, int n, int k);

// e_i(x^2_{n-k+1..n}) |-> c_i^2 + 2 sum_j (-1)^j c_{i+j} c_{i-j}, checked
// entirely in the Schubert basis.
bool verify_chern_identity_D(CohomologyContext& ctx, int n, int k, int i);

// xi^P(f) = pullback of xi^Q(f) for nested parabolics P c Q (more removed
// nodes = smaller parabolic); both sides are computed independently.
bool functoriality_check(CohomologyContext& ctx, const Poly& f,
                         const std::vector<int>& removed_p, const std::vector<int>& removed_q);

SchubertClass golden_class(const RootDatum& rd, const golden::XiGoldenRow& row);

}  // namespace flagrep::ximap
