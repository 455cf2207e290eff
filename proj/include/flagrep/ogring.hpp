#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "flagrep/rational.hpp"

namespace flagrep::ogring {

// k-strict partition with its type tag (0 iff no part equals k; partitions
// with a part equal to k occur once with each of the types 1 and 2).
struct KStrictPartition {
    std::vector<int> parts;
    int k = 0;
    int type = 0;

    int weight() const {
        int w = 0;
        for (int p : parts) w += p;
        return w;
    }
    int rows() const { return static_cast<int>(parts.size()); }
    bool operator==(const KStrictPartition& o) const {
        return parts == o.parts && k == o.k && type == o.type;
    }
    bool operator<(const KStrictPartition& o) const {
        if (parts != o.parts) return parts < o.parts;
        return type < o.type;
    }
};

// All k-strict partitions of weight m (with type multiplicity), bounded by the
// (n-k) x (n+k-1) rectangle when n > 0, unbounded when n <= 0.
std::vector<KStrictPartition> kstrict_enumerate(int k, int n, int m);

// The index set p'_1 < ... < p'_l of a partition in the rectangle.
std::vector<int> index_set(const KStrictPartition& lam, int n);

// Codimension condition index of the special class of degree p:
// epsilon(p) = n + k - p + (2 if p <= k else 1).
int special_class_index(int k, int n, int p);

// ---- coefficient fields ------------------------------------------------

struct QField {
    using T = Rat;
    static T zero() { return 0; }
    static T one() { return 1; }
    static T from_long(long v) { return v; }
    static bool is_zero(const T& x) { return x == 0; }
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T div(const T& a, const T& b) { return a / b; }
    static T neg(const T& a) { return -a; }
};

struct F2Field {
    using T = unsigned char;
    static T zero() { return 0; }
    static T one() { return 1; }
    static T from_long(long v) { return static_cast<T>(((v % 2) + 2) % 2); }
    static bool is_zero(const T& x) { return x == 0; }
    static T add(T a, T b) { return a ^ b; }
    static T sub(T a, T b) { return a ^ b; }
    static T mul(T a, T b) { return a & b; }
    static T div(T a, T b) {
        if (!b) throw Error("division by zero in F2");
        return a;
    }
    static T neg(T a) { return a; }
};

// ---- presented rings ---------------------------------------------------

// H*(OG(n-k,2n)) in the tau-generators, or the stable ring truncated at a
// top degree. Normal forms are computed degree by degree by linear algebra;
// the graded dimensions are certified against the k-strict partition counts
// at construction time.
template <class F>
class PresentedRing {
  public:
    using T = typename F::T;
    using Mono = std::vector<int>;          // exponents over the generators
    using RawPoly = std::map<Mono, T>;      // not necessarily reduced

    struct Gen {
        std::string name;
        int degree;
    };

    struct Elt {
        const PresentedRing* ring = nullptr;
        RawPoly coords;  // supported on basis monomials

        bool is_zero() const { return coords.empty(); }
        bool operator==(const Elt& o) const { return coords == o.coords; }
        std::string str() const;
    };

    static PresentedRing finite(int k, int n);
    static PresentedRing stable(int k, int truncation);

    bool is_stable() const { return n_ < 0; }
    int k() const { return k_; }
    int n() const { return n_; }
    int max_degree() const { return max_degree_; }
    const std::vector<Gen>& gens() const { return gens_; }
    int tau_index(int p) const;   // index of tau_p (p != k), p <= top degree
    int tau_k_index() const { return k_ - 1; }
    int tau_k_prime_index() const { return k_; }

    // graded dimensions 0..max_degree
    const std::vector<long>& hilbert() const { return hilbert_; }

    Elt zero() const { return Elt{this, {}}; }
    Elt one() const;
    Elt generator(int gen_index) const;
    Elt from_raw(const RawPoly& p) const;  // reduce to normal form

    Elt add(const Elt& a, const Elt& b) const;
    Elt mul(const Elt& a, const Elt& b) const;
    Elt scale(const Elt& a, const T& c) const;

    // c_p as a raw polynomial: tau_p (p<k), tau_k + tau'_k (p=k), 2 tau_p
    // (k<p<=top), 1 (p=0), 0 otherwise.
    RawPoly raw_c(int p) const;
    RawPoly raw_delta(int s) const;  // Schur determinant det(c_{1+j-i})
    RawPoly raw_mul(const RawPoly& a, const RawPoly& b) const;

    // the defining relations, as raw polynomials (used by tests to re-verify
    // that every relation reduces to zero post-build)
    const std::vector<RawPoly>& relations() const { return relations_; }

    int mono_degree(const Mono& m) const;

  private:
    PresentedRing() = default;
    void build();

    int k_ = 0, n_ = -1;
    int max_degree_ = 0;
    std::vector<Gen> gens_;
    std::vector<RawPoly> relations_;
    std::vector<long> hilbert_;

    // per degree: monomial list, index map, and for each pivot monomial the
    // normal form (over basis monomials)
    struct Level {
        std::vector<Mono> monos;
        std::map<Mono, int> index;
        std::map<Mono, RawPoly> pivot_reduction;
    };
    std::vector<Level> levels_;
};

using RingQ = PresentedRing<QField>;
using RingF2 = PresentedRing<F2Field>;

// The stable image of e_i((x_1)^2, ..., (x_k)^2):
// c_i^2 + 2 sum_{j=1}^i (-1)^j c_{i+j} c_{i-j}, in normal form.
template <class F>
typename PresentedRing<F>::Elt xi_generator_image_stable(const PresentedRing<F>& ring, int i);

// phi_{k,n}: stable -> finite, tau_p -> tau_p (p < n+k) else 0.
RingQ::Elt restriction_map(const RingQ& stable_ring, const RingQ& finite_ring,
                           const RingQ::Elt& elt);

struct Mod2InjectivityReport {
    int k = 0;
    int truncation = 0;
    struct Degree {
        int weight = 0;           // internal weight (cohomological degree / 2)
        long source_dim = 0;
        long rank = 0;
        bool injective = false;
    };
    std::vector<Degree> degrees;
    bool all_injective = true;
    bool images_match_displayed = false;  // e_i -> c_i^2 and e_k -> (tau_k - tau'_k)^2
    bool parity_core_holds = false;       // leading e_k-degrees of f^2 vs e_k g^2 differ
};

Mod2InjectivityReport mod2_injectivity_check(int k, int truncation);

extern template class PresentedRing<QField>;
extern template class PresentedRing<F2Field>;

}  // namespace flagrep::ogring
