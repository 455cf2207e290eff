#include "flagrep/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace flagrep::polyalg {

int VarSpace::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

VarSpacePtr make_vars(std::vector<std::string> names, bool laurent) {
    auto vs = std::make_shared<VarSpace>();
    vs->names = std::move(names);
    vs->laurent = laurent;
    return vs;
}

VarSpacePtr make_vars(const std::string& prefix, int count, bool laurent) {
    std::vector<std::string> names;
    names.reserve(count);
    for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
    return make_vars(std::move(names), laurent);
}

static int total_degree(const Exp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool TermOrder::operator()(const Exp& a, const Exp& b) const {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographically larger first
}

Poly::Poly(VarSpacePtr vs, const Rat& constant) : vs_(std::move(vs)) {
    add_term(Exp(vs_->names.size(), 0), constant);
}

Poly Poly::variable(const VarSpacePtr& vs, int index, int exponent) {
    if (index < 0 || index >= static_cast<int>(vs->names.size()))
        throw Error("variable index out of range");
    Exp e(vs->names.size(), 0);
    e[index] = exponent;
    return monomial(vs, e, 1);
}

Poly Poly::monomial(const VarSpacePtr& vs, const Exp& e, const Rat& coeff) {
    Poly p(vs);
    p.add_term(e, coeff);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    return total_degree(terms_.begin()->first) == 0 &&
           *std::min_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) >= 0 &&
           *std::max_element(terms_.begin()->first.begin(), terms_.begin()->first.end()) <= 0;
}

Rat Poly::constant_term() const {
    Exp zero(vs_ ? vs_->names.size() : 0, 0);
    return coeff(zero);
}

int Poly::degree() const {
    if (terms_.empty()) return 0;
    return total_degree(terms_.begin()->first);
}

bool Poly::is_homogeneous(int* deg_out) const {
    if (terms_.empty()) {
        if (deg_out) *deg_out = 0;
        return true;
    }
    int d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    if (deg_out) *deg_out = d;
    return true;
}

void Poly::add_term(const Exp& e, const Rat& c) {
    if (!vs_) throw Error("polynomial has no variable space");
    if (e.size() != vs_->names.size()) throw Error("exponent vector has wrong length");
    if (!vs_->laurent)
        for (int x : e)
            if (x < 0) throw Error("negative exponent in a non-Laurent polynomial");
    if (c == 0) return;
    Rat cc = c;
    cc.canonicalize();
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, cc);
    } else {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

Rat Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::check_compatible(const Poly& o) const {
    if (!vs_ || !o.vs_) throw Error("polynomial has no variable space");
    if (vs_ == o.vs_) return;
    if (vs_->names != o.vs_->names || vs_->laurent != o.vs_->laurent)
        throw Error("mismatched variable spaces");
}

Poly Poly::operator-() const {
    Poly r(vs_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(vs_);
    Exp e(vs_->names.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(vs_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::pow(int n) const {
    if (n < 0) throw Error("negative power");
    int d = 0;
    if (n >= 3 && is_homogeneous(&d) && d == 1 && terms_.size() > 1) {
        // multinomial expansion for powers of linear forms
        std::vector<std::pair<Exp, Rat>> lin(terms_.begin(), terms_.end());
        size_t k = lin.size();
        std::vector<Int> fact(n + 1);
        fact[0] = 1;
        for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * i;
        Poly r(vs_);
        std::vector<int> part(k, 0);
        Exp e(vs_->names.size());
        std::function<void(size_t, int)> rec = [&](size_t pos, int rem) {
            if (pos + 1 == k) {
                part[pos] = rem;
                Rat coeff = Rat(fact[n]);
                std::fill(e.begin(), e.end(), 0);
                for (size_t i = 0; i < k; ++i) {
                    if (part[i] == 0) continue;
                    coeff /= Rat(fact[part[i]]);
                    Rat cp = 1;
                    for (int t = 0; t < part[i]; ++t) cp *= lin[i].second;
                    coeff *= cp;
                    for (size_t j = 0; j < e.size(); ++j) e[j] += part[i] * lin[i].first[j];
                }
                r.add_term(e, coeff);
                return;
            }
            for (int v = 0; v <= rem; ++v) {
                part[pos] = v;
                rec(pos + 1, rem - v);
            }
        };
        rec(0, n);
        return r;
    }
    Poly r(vs_, 1);
    Poly base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    size_t n = vs_->names.size();
    if (images.size() != n)
        throw Error("substitute: unassigned variable (need one image per variable)");
    VarSpacePtr target = images.empty() ? vs_ : images.front().vars();
    size_t m = target->names.size();
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) throw Error("substitute: negative exponent needs a monomial substitution");

    // Work in an extended space (source vars + target vars) and eliminate one
    // source variable at a time by Horner evaluation.
    std::vector<std::string> extnames;
    extnames.reserve(n + m);
    for (size_t i = 0; i < n; ++i) extnames.push_back("#s" + std::to_string(i));
    for (const auto& t : target->names) extnames.push_back(t);
    auto ext = make_vars(std::move(extnames), vs_->laurent || target->laurent);

    Poly cur(ext);
    for (const auto& [e, c] : terms_) {
        Exp ee(n + m, 0);
        std::copy(e.begin(), e.end(), ee.begin());
        cur.add_term(ee, c);
    }
    std::vector<Poly> img(n, Poly(ext));
    for (size_t i = 0; i < n; ++i)
        for (const auto& [e, c] : images[i].terms()) {
            Exp ee(n + m, 0);
            std::copy(e.begin(), e.end(), ee.begin() + n);
            img[i].add_term(ee, c);
        }
    for (size_t i = n; i-- > 0;) {
        // cur = sum_r g_r * (#s_i)^r; evaluate with Horner at img[i]
        std::map<int, Poly> parts;
        for (const auto& [e, c] : cur.terms()) {
            Exp ee = e;
            int r = ee[i];
            ee[i] = 0;
            auto it = parts.find(r);
            if (it == parts.end()) it = parts.emplace(r, Poly(ext)).first;
            it->second.add_term(ee, c);
        }
        Poly acc(ext);
        int prev = -1;
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            if (prev >= 0)
                for (int t = 0; t < prev - it->first; ++t) acc = acc * img[i];
            acc += it->second;
            prev = it->first;
        }
        if (prev > 0)
            for (int t = 0; t < prev; ++t) acc = acc * img[i];
        cur = std::move(acc);
    }
    Poly out(target);
    for (const auto& [e, c] : cur.terms()) {
        Exp ee(e.begin() + n, e.end());
        out.add_term(ee, c);
    }
    return out;
}

Poly Poly::substitute_monomial(const std::vector<std::vector<int>>& m) const {
    size_t n = vs_->names.size();
    if (m.size() != n) throw Error("substitute_monomial: wrong matrix size");
    Poly r(vs_);
    Exp img(n);
    for (const auto& [e, c] : terms_) {
        std::fill(img.begin(), img.end(), 0);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) img[j] += m[j][i] * e[i];
        r.add_term(img, c);
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::string vars;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += vs_->names[i];
            if (e[i] != 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out << rat_str(a);
        } else if (a == 1) {
            out << vars;
        } else {
            out << rat_str(a) << "*" << vars;
        }
    }
    return out.str();
}

Poly poly_arith(const Poly& a, const Poly& b, const std::string& op) {
    if (op == "add") return a + b;
    if (op == "mul") return a * b;
    throw Error("poly_arith: unknown op '" + op + "'");
}

Poly elementary_symmetric(int i, const std::vector<Poly>& args) {
    if (i < 0 || i > static_cast<int>(args.size()))
        throw Error("elementary_symmetric: index out of range");
    if (args.empty()) throw Error("elementary_symmetric: empty argument list");
    VarSpacePtr vs = args.front().vars();
    std::vector<Poly> e(i + 1, Poly(vs));
    e[0] = Poly(vs, 1);
    for (size_t a = 0; a < args.size(); ++a)
        for (int k = std::min<int>(i, static_cast<int>(a) + 1); k >= 1; --k)
            e[k] += e[k - 1] * args[a];
    return e[i];
}

Poly complete_homogeneous(int m, const std::vector<Poly>& args) {
    if (m < 0) throw Error("complete_homogeneous: negative degree");
    if (args.empty()) throw Error("complete_homogeneous: empty argument list");
    VarSpacePtr vs = args.front().vars();
    // h_m = sum over multisets; Newton-style recursion against e_i keeps it short:
    // sum_{j=0..m} (-1)^j e_j h_{m-j} = 0 for m >= 1.
    std::vector<Poly> h(m + 1, Poly(vs));
    h[0] = Poly(vs, 1);
    std::vector<Poly> e(m + 1, Poly(vs));
    for (int j = 0; j <= m; ++j)
        e[j] = (j <= static_cast<int>(args.size())) ? elementary_symmetric(j, args) : Poly(vs);
    for (int d = 1; d <= m; ++d) {
        Poly acc(vs);
        for (int j = 1; j <= d; ++j) {
            Poly t = e[j] * h[d - j];
            if (j % 2 == 0) acc -= t; else acc += t;
        }
        h[d] = acc;
    }
    return h[m];
}

namespace {

struct Parser {
    const VarSpacePtr& vs;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw Error("parse error at position " + std::to_string(pos) + ": " + msg +
                    " in '" + s + "'");
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    Poly parse_expr() {
        skip_ws();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Poly acc = parse_term();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            if (eat('+')) acc += parse_term();
            else if (eat('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    Poly parse_term() {
        Poly acc = parse_factor();
        while (eat('*')) acc = acc * parse_factor();
        return acc;
    }

    Poly parse_factor() {
        Poly base = parse_base();
        skip_ws();
        if (eat('^')) {
            long e = parse_int();
            if (e >= 0) return base.pow(static_cast<int>(e));
            // Negative powers are only defined for single Laurent variables.
            if (base.terms().size() != 1 || base.terms().begin()->second != 1)
                fail("negative exponent on a non-monomial");
            Exp ex = base.terms().begin()->first;
            for (int& x : ex) x *= static_cast<int>(e);
            return Poly::monomial(vs, ex, 1);
        }
        return base;
    }

    Poly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of input");
        if (eat('(')) {
            Poly inner = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            std::string num = s.substr(start, pos - start);
            skip_ws();
            if (pos < s.size() && s[pos] == '/') {
                ++pos;
                skip_ws();
                size_t dstart = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (dstart == pos) fail("expected a denominator");
                return Poly(vs, rat_parse(num + "/" + s.substr(dstart, pos - dstart)));
            }
            return Poly(vs, rat_parse(num));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string name = s.substr(start, pos - start);
            int idx = vs->index_of(name);
            if (idx < 0) fail("unknown variable '" + name + "'");
            return Poly::variable(vs, idx);
        }
        fail("unexpected character");
    }
};

}  // namespace

Poly parse_poly(const VarSpacePtr& vs, const std::string& text) {
    Parser p{vs, text};
    Poly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace flagrep::polyalg
