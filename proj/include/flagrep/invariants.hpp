#pragma once

#include <map>
#include <string>
#include <vector>

#include "flagrep/poly.hpp"
#include "flagrep/rootdata.hpp"

namespace flagrep::invariants {

using polyalg::Poly;
using polyalg::VarSpacePtr;
using rootsys::RootDatum;

struct GeneratorDef {
    std::string name;
    Poly poly;  // in the omega-variables
    int degree = 0;
    Rat scale = 1;  // applied to the xi image, as printed
};

struct GeneratorFamily {
    std::string group;
    int r = 0;
    std::map<std::string, Poly> y;  // named linear forms
    std::vector<Poly> relations;    // must expand to zero
    std::vector<GeneratorDef> generators;
};

struct CaseLibrary {
    std::vector<GeneratorFamily> cases;

    const GeneratorFamily& get(const std::string& group, int r) const;
    std::vector<int> parabolics(const std::string& group) const;
};

// Loads data/case_library.json; every y-definition and generator is parsed
// and materialized as a polynomial in the omega-variables of its group.
CaseLibrary load_case_library(const std::string& data_dir);

struct InvarianceResult {
    bool pass = true;
    int witness = 0;  // violating Levi node (1-based)
    Poly diff;
};

// pass iff s_j p = p for every Levi node j (all nodes except `removed`).
InvarianceResult check_invariance(const RootDatum& rd, const std::vector<int>& removed,
                                  const Poly& p);
InvarianceResult check_invariance(const RootDatum& rd, int r, const Poly& p);

// The degree-m Weyl-invariant generators for the E6 Levi inside E7,
// as a polynomial in the omega-variables of E7. m in {2,5,6,8,9,12}.
Poly e6_psi(const RootDatum& e7, int m);

// Levi-invariant generators for SO(2n)/P_{n-k}: the SO(2k)-factor family
// e_i(x_{n-k+1}^2, ..., x_n^2), the odd product x_{n-k+1}...x_n, and the
// GL(n-k)-factor elementary symmetric functions, all in omega-variables.
struct DnLeviGenerators {
    int n = 0, k = 0;
    std::vector<Poly> so_even;  // i = 1..k
    Poly so_odd;
    std::vector<Poly> gl;  // i = 1..n-k
};

DnLeviGenerators dn_levi_generators(int n, int k);

// Reynolds average over W_L (small Levis only); exact.
Poly reynolds_average(const RootDatum& rd, const std::vector<int>& removed, const Poly& p,
                      long levi_order_limit = 3000);

// Dimension of the span of the given polynomials' degree-d pieces; used to
// compare the case library against Reynolds-derived invariants.
int span_dimension(const std::vector<Poly>& polys);

// All W_L-invariants of degree d obtained by averaging the degree-d monomials.
std::vector<Poly> invariant_space(const RootDatum& rd, const std::vector<int>& removed, int d,
                                  long levi_order_limit = 3000);

// Degree-d span of products of the family's generators (including y-relations'
// ambient ring structure): used for the dimension comparison.
std::vector<Poly> generator_products_of_degree(const GeneratorFamily& fam, int d);

}  // namespace flagrep::invariants
