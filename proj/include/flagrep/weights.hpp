#pragma once

#include <vector>

#include "flagrep/rootdata.hpp"

namespace flagrep::springer {

using rootsys::RootDatum;

// Full weight system of the irreducible module with the given dominant
// highest weight (omega-coordinates), multiplicities by Freudenthal's
// recursion, dimension certified against the Weyl dimension formula.
struct WeightSystem {
    std::vector<int> highest;
    std::vector<std::pair<std::vector<int>, long>> entries;  // (weight, multiplicity)

    long dimension() const {
        long d = 0;
        for (const auto& [w, m] : entries) d += m;
        return d;
    }
};

Rat weyl_dimension(const RootDatum& rd, const std::vector<int>& lambda);

WeightSystem weight_system(const RootDatum& rd, const std::vector<int>& lambda);

// B_lambda(alpha_i^vee, alpha_j^vee) = sum_mu mult(mu) mu_i mu_j. Throws for a
// degenerate form (lambda not almost faithful for the simple type).
std::vector<std::vector<Rat>> trace_form(const RootDatum& rd, const WeightSystem& ws);

}  // namespace flagrep::springer
