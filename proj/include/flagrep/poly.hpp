#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "flagrep/rational.hpp"

namespace flagrep::polyalg {

// Ordered, named variable list. `laurent` selects the exponent domain:
// ordinary polynomials reject negative exponents at term insertion.
struct VarSpace {
    std::vector<std::string> names;
    bool laurent = false;

    int index_of(const std::string& name) const;  // -1 if absent
};

using VarSpacePtr = std::shared_ptr<const VarSpace>;

VarSpacePtr make_vars(std::vector<std::string> names, bool laurent = false);
// Convenience: prefix1..prefixN, e.g. make_vars("w", 4) -> w1,w2,w3,w4.
VarSpacePtr make_vars(const std::string& prefix, int count, bool laurent = false);

using Exp = std::vector<int>;

// Graded lexicographic, descending: higher total degree first, then
// lexicographically larger exponent vector first. Fixes term iteration
// and serialization order.
struct TermOrder {
    bool operator()(const Exp& a, const Exp& b) const;
};

class Poly {
  public:
    Poly() = default;
    explicit Poly(VarSpacePtr vs) : vs_(std::move(vs)) {}
    Poly(VarSpacePtr vs, const Rat& constant);

    static Poly variable(const VarSpacePtr& vs, int index, int exponent = 1);
    static Poly monomial(const VarSpacePtr& vs, const Exp& e, const Rat& coeff);

    const VarSpacePtr& vars() const { return vs_; }
    const std::map<Exp, Rat, TermOrder>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_term() const;

    // Total degree of the leading term; 0 for the zero polynomial.
    int degree() const;
    bool is_homogeneous(int* deg_out = nullptr) const;

    void add_term(const Exp& e, const Rat& c);
    Rat coeff(const Exp& e) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    Poly operator*(const Rat& c) const;
    Poly pow(int n) const;  // n >= 0

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Replace every variable by `images[i]` (all images in a common space).
    // Exact composition; throws if an image is missing.
    Poly substitute(const std::vector<Poly>& images) const;

    // Monomial substitution t_i -> prod t_j^{m[j][i]} (columns are images);
    // only valid on Laurent spaces mapping into the same space.
    Poly substitute_monomial(const std::vector<std::vector<int>>& m) const;

    // Canonical text form, e.g. "1/2*t1 - 1/2*t1^-1"; "0" for zero.
    std::string str() const;

  private:
    void check_compatible(const Poly& o) const;

    VarSpacePtr vs_;
    std::map<Exp, Rat, TermOrder> terms_;
};

inline Poly operator*(const Rat& c, const Poly& p) { return p * c; }

// add | mul entry point mirroring the coarse operation contract.
Poly poly_arith(const Poly& a, const Poly& b, const std::string& op);

// Elementary symmetric polynomial e_i of the given expressions (i = 0 gives 1).
Poly elementary_symmetric(int i, const std::vector<Poly>& args);

// Complete homogeneous symmetric polynomial h_m of the given expressions.
Poly complete_homogeneous(int m, const std::vector<Poly>& args);

// Recursive-descent parser for the canonical text form. Accepts rationals
// ("3", "1/2"), variable names from `vs` with optional integer exponents
// ("t1^-2"), '*', '+', '-', unary minus and parentheses. Adjacent factors
// require an explicit '*'.
Poly parse_poly(const VarSpacePtr& vs, const std::string& text);

}  // namespace flagrep::polyalg
