#pragma once

#include <string>
#include <vector>

#include "flagrep/poly.hpp"
#include "flagrep/weights.hpp"

namespace flagrep::springer {

using polyalg::Poly;
using polyalg::VarSpacePtr;

// Torus coordinate convention: the characters x_1..x_l whose values
// t_i = t(x_i) coordinatize T. `x_in_omega` columns are the x_i written in
// omega-coordinates; exponents of t^mu are X^{-1} mu and must be integral
// for every weight that gets exponentiated.
struct BasisConfig {
    std::string name;
    std::vector<std::vector<Rat>> x_in_omega;   // rank x rank, column i = x_i
    std::vector<std::vector<Rat>> omega_to_t;   // X^{-1}
    VarSpacePtr tvars;
};

BasisConfig omega_basis_config(const RootDatum& rd);          // x_i = omega_i (F4/E6/E7)
BasisConfig g2_basis_config(const RootDatum& rd);             // x1 = w1, x2 = w2 - w1
BasisConfig dn_basis_config(const RootDatum& rd);             // x_i = delta_i (diagonal)

// delta_p of SO(2n) in omega-coordinates (1 <= p <= n), integer entries.
std::vector<int> dn_delta_in_omega(int n, int p);

// Coordinates of theta_lambda(t) in the coroot basis; coordinate i is the
// Laurent polynomial Theta_i(t_1..t_l).
struct TorusMap {
    BasisConfig config;
    std::vector<Poly> coords;
};

// Solve B_lambda * theta = m(t) with m_i(t) = sum_mu mult(mu) t^mu mu_i.
TorusMap theta_torus(const RootDatum& rd, const WeightSystem& ws, const BasisConfig& config);

// Tabulated weight choices (minimal Dynkin index) per group.
std::vector<int> minimal_dynkin_weight(const RootDatum& rd);

// theta table for one of the four exceptional groups (or type D with the
// defining representation), with the matching basis config.
TorusMap theta_for_group(const RootDatum& rd);

}  // namespace flagrep::springer
