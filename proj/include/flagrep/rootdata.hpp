#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "flagrep/poly.hpp"
#include "flagrep/rational.hpp"

namespace flagrep::rootsys {

using polyalg::Poly;
using polyalg::VarSpacePtr;

// Simple root datum in Bourbaki numbering. Throughout, cartan[i][j] is the
// pairing alpha_i(alpha_j^vee) (rows are roots, columns coroots, 0-based);
// with this layout row i is alpha_i written in omega-coordinates, and the
// simple reflection acts on a weight v by v -> v - v[i]*row_i.
struct RootDatum {
    char type = 0;
    int rank = 0;
    std::vector<std::vector<int>> cartan;

    std::vector<std::vector<int>> pos_root;    // simple-root coordinates
    std::vector<std::vector<int>> pos_root_w;  // omega coordinates
    std::vector<std::vector<int>> pos_coroot;  // beta^vee in the coroot basis
    std::vector<Rat> dsym;                     // symmetrizer: (alpha_i, alpha_i)/2 up to scale
    std::vector<std::vector<Rat>> fweight_in_roots;  // row i: omega_i in the alpha basis

    int num_pos_roots() const { return static_cast<int>(pos_root.size()); }
    std::string label() const { return std::string(1, type) + std::to_string(rank); }

    // (mu, nu) for omega-coordinate rational vectors, via the symmetrizer.
    Rat inner(const std::vector<Rat>& mu, const std::vector<Rat>& nu) const;
};

RootDatum build_root_datum(char type, int rank);

// Weyl group element; act_w / act_r are the rank x rank row-major integer
// matrices of the action on omega- resp. simple-root coordinates. `word` is
// the canonical (lexicographically smallest) reduced word, 1-based letters.
struct WeylElement {
    int rank = 0;
    std::vector<int> act_w;
    std::vector<int> act_r;
    int length = 0;
    std::vector<int> word;

    bool is_identity() const { return length == 0; }
    bool operator==(const WeylElement& o) const { return act_w == o.act_w; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }
};

// Deterministic order: by (length, canonical word).
struct WeylLess {
    bool operator()(const WeylElement& a, const WeylElement& b) const {
        if (a.length != b.length) return a.length < b.length;
        return a.word < b.word;
    }
};

WeylElement weyl_identity(const RootDatum& rd);
WeylElement weyl_simple(const RootDatum& rd, int i);        // 1-based
WeylElement weyl_from_word(const RootDatum& rd, const std::vector<int>& word);
WeylElement weyl_mul(const RootDatum& rd, const WeylElement& a, const WeylElement& b);
WeylElement weyl_inverse(const RootDatum& rd, const WeylElement& w);

// Reflection s_beta for the p-th positive root, as a WeylElement.
WeylElement weyl_reflection(const RootDatum& rd, int pos_root_index);

int weyl_length_of_action(const RootDatum& rd, const std::vector<int>& act_r);

// Apply w to a rational vector in omega-coordinates.
std::vector<Rat> apply_weyl(const WeylElement& w, const std::vector<Rat>& v);
std::vector<int> apply_weyl(const WeylElement& w, const std::vector<int>& v);

// s_i applied to a rational weight vector in omega-coordinates (1-based i).
std::vector<Rat> reflect(const RootDatum& rd, int i, const std::vector<Rat>& v);

// Images of the omega-variables under w, for substitution into polynomials.
std::vector<Poly> weyl_poly_images(const RootDatum& rd, const WeylElement& w, const VarSpacePtr& vs);
Poly reflect_poly(const RootDatum& rd, int i, const Poly& p);

// All elements of length <= max_length, grouped by length; each level sorted
// by canonical word. Deterministic.
struct WeylLevels {
    std::vector<std::vector<WeylElement>> by_length;

    long total() const {
        long n = 0;
        for (const auto& lv : by_length) n += static_cast<long>(lv.size());
        return n;
    }
};

WeylLevels enumerate_weyl(const RootDatum& rd, int max_length);

// Exponents m_1 <= ... <= m_rank, read off from the height distribution of
// the positive roots (dual partition); degrees are m_i + 1.
std::vector<int> weyl_exponents(const RootDatum& rd);
Int weyl_order(const RootDatum& rd);

// Coefficients of the Poincare polynomial sum_w q^{l(w)} by full enumeration.
// Refuses groups with |W| > limit.
std::vector<long> poincare_polynomial(const RootDatum& rd, long limit = 2000000);

// Minimal-length representatives of W/W_L where the Levi L keeps all simple
// roots except `removed_nodes` (1-based). For B take removed = all nodes.
struct CosetSystem {
    std::vector<int> removed_nodes;
    WeylLevels reps;
};

CosetSystem minimal_coset_reps(const RootDatum& rd, const std::vector<int>& removed_nodes,
                               int max_length);
CosetSystem minimal_coset_reps(const RootDatum& rd, int r, int max_length);

// w is a minimal coset representative iff w(alpha_j) > 0 for every Levi node j.
bool is_minimal_rep(const RootDatum& rd, const std::vector<int>& removed_nodes,
                    const WeylElement& w);

// Order of the Levi Weyl subgroup generated by the non-removed nodes.
Int levi_weyl_order(const RootDatum& rd, const std::vector<int>& removed_nodes);

}  // namespace flagrep::rootsys
