#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagrep/poly.hpp"
#include "flagrep/rootdata.hpp"

namespace flagrep::schubert {

using polyalg::Poly;
using rootsys::CosetSystem;
using rootsys::RootDatum;
using rootsys::WeylElement;
using rootsys::WeylLess;

enum class Engine { chevalley, duan };

// Which flag variety a class lives on: removed_nodes empty means G/B,
// {r} the maximal parabolic P_r.
struct SpaceTag {
    char type = 0;
    int rank = 0;
    std::vector<int> removed_nodes;

    bool operator==(const SpaceTag& o) const {
        return type == o.type && rank == o.rank && removed_nodes == o.removed_nodes;
    }
};

struct SchubertClass {
    SpaceTag tag;
    std::map<WeylElement, Rat, WeylLess> support;

    bool is_zero() const { return support.empty(); }
    void add(const WeylElement& w, const Rat& c);
    SchubertClass& operator+=(const SchubertClass& o);
    SchubertClass operator*(const Rat& c) const;
    bool operator==(const SchubertClass& o) const {
        return tag == o.tag && support == o.support;
    }
    // cohomological degree/2 when homogeneous; -1 for zero class
    int degree() const;
    bool is_homogeneous() const;
    std::string str() const;
};

// All elements of length <= max_length with index lookup and the up-edges
// (w, beta) -> w s_beta of length l(w)+1 needed by the Chevalley rule.
class WeylBall {
  public:
    WeylBall(const RootDatum& rd, int max_length);

    const RootDatum& datum() const { return rd_; }
    int max_length() const { return max_length_; }
    int size() const { return static_cast<int>(elements_.size()); }
    const WeylElement& element(int idx) const { return elements_[idx]; }
    int length(int idx) const { return elements_[idx].length; }
    // first index of each length (plus a trailing end sentinel)
    const std::vector<int>& level_offsets() const { return level_offsets_; }
    int index_of(const WeylElement& w) const;          // -1 if absent
    int index_of_action(const std::vector<int>& act_w) const;

    struct Edge {
        int target;
        int root;  // positive-root index
    };
    const std::vector<Edge>& edges_up(int idx) const { return edges_[idx]; }

    // Sparse class over ball indices, sorted by index.
    using Sparse = std::vector<std::pair<int, Rat>>;

    Sparse mult_simple(int i0, const Sparse& c) const;  // by eps_{s_{i0+1}}, Chevalley rule
    SchubertClass to_class(const Sparse& c, const std::vector<int>& removed_nodes) const;
    Sparse from_class(const SchubertClass& c) const;

  private:
    RootDatum rd_;
    int max_length_;
    std::vector<WeylElement> elements_;
    std::vector<int> level_offsets_;
    std::unordered_map<size_t, std::vector<int>> index_;  // hash -> candidate indices
    std::vector<std::vector<Edge>> edges_;
};

// ---- Duan operator ----------------------------------------------------

struct DuanMatrix {
    int size = 0;
    std::vector<std::vector<int>> a;  // strictly upper triangular
};

// A_w for the given reduced word (validated). Entries are negated Cartan
// pairings along the word, oriented so that T_{A_w} matches the Chevalley
// oracle (exhaustively enforced by the engine-agreement suite).
DuanMatrix duan_matrix(const RootDatum& rd, const std::vector<int>& word);

// T_A on a homogeneous polynomial of degree size(A) in x_1..x_size.
Rat duan_operator(const DuanMatrix& a, const Poly& h);

struct ConstantResult {
    long value = 0;
    bool graded_zero = false;  // length mismatch, zero by grading
};

class ConstantCache;

ConstantResult structure_constant(const RootDatum& rd, const WeylElement& u,
                                  const WeylElement& v, const WeylElement& w,
                                  ConstantCache* cache = nullptr);

// Same constant evaluated with an explicitly chosen reduced word of w.
long structure_constant_with_word(const RootDatum& rd, const WeylElement& u,
                                  const WeylElement& v, const std::vector<int>& word);

// ---- products and the Borel map ---------------------------------------

SchubertClass chevalley_multiply(const RootDatum& rd, int i, const SchubertClass& cls);

// Shared computation context: ball, degree-2 re-expression tables, caches.
class CohomologyContext {
  public:
    CohomologyContext(const RootDatum& rd, int ceiling);

    const WeylBall& ball() const { return ball_; }
    const RootDatum& datum() const { return ball_.datum(); }
    int ceiling() const { return ball_.max_length(); }

    // beta(f) for a polynomial f in the omega-variables; support restricted
    // to minimal representatives when removed_nodes is non-empty (error on a
    // non-invariant f). Engine duan replaces every Chevalley step by Duan
    // structure constants.
    SchubertClass borel_image(const Poly& f, const std::vector<int>& removed_nodes,
                              Engine engine = Engine::chevalley, int jobs = 1,
                              ConstantCache* cache = nullptr);

    SchubertClass cup_product(const SchubertClass& a, const SchubertClass& b, Engine engine,
                              ConstantCache* cache = nullptr);

    // eps_u expressed through products of degree-2 classes, applied to b.
    WeylBall::Sparse mult_by_class(const WeylBall::Sparse& a, const WeylBall::Sparse& b);

    WeylBall::Sparse mult_simple_duan(int i0, const WeylBall::Sparse& c, ConstantCache* cache);

  private:
    struct Decomp {
        // eps_u = sum_k coeff_k * eps_{s_{i_k}} * eps_{v_k}
        std::vector<std::tuple<Rat, int, int>> parts;  // (coeff, i0, v index)
    };
    const Decomp& decomposition(int idx);
    int degree_hint(const WeylBall::Sparse& c) const;

    WeylBall ball_;
    std::vector<std::optional<Decomp>> decomp_;
};

// Full multiplication table of H*(G/B, Q) for rank <= 3, built from the
// Chevalley rule alone; construction verifies associativity, graded
// commutativity and Poincare duality.
struct CoinvariantOracle {
    std::vector<WeylElement> basis;                       // all of W, sorted
    std::vector<std::vector<std::map<int, Rat>>> table;   // table[i][j]: index -> coeff
};

CoinvariantOracle coinvariant_oracle(const RootDatum& rd);

// ---- persistent structure-constant cache ------------------------------

class ConstantCache {
  public:
    ConstantCache() = default;
    explicit ConstantCache(std::string path);  // loads if the file exists

    static std::string key(const RootDatum& rd, const std::vector<int>& w,
                           const std::vector<int>& u, const std::vector<int>& v);

    std::optional<long> get(const std::string& key) const;
    void put(const RootDatum& rd, const std::vector<int>& w, const std::vector<int>& u,
             const std::vector<int>& v, long value);
    size_t size() const { return entries_.size(); }

    // Recompute a sample fraction and compare; returns number checked.
    // Throws on any disagreement.
    size_t verify_sample(double fraction, unsigned seed) const;

  private:
    std::map<std::string, long> entries_;
    std::string path_;
};

}  // namespace flagrep::schubert
