#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "flagrep/poly.hpp"

using namespace flagrep;
using namespace flagrep::polyalg;

TEST_CASE("basic arithmetic") {
    auto vs = make_vars("x", 3);
    Poly x1 = Poly::variable(vs, 0), x2 = Poly::variable(vs, 1);

    CHECK(poly_arith(x1, x2, "mul").str() == "x1*x2");
    CHECK((x1 + x2 - x1) == x2);
    CHECK((x1 * x2).degree() == 2);
    CHECK_THROWS_AS(poly_arith(x1, x2, "div"), Error);

    auto other = make_vars("y", 3);
    CHECK_THROWS_AS((void)(x1 + Poly::variable(other, 0)), Error);
}

TEST_CASE("laurent difference of squares") {
    auto vs = make_vars("t", 2, /*laurent=*/true);
    Poly t1 = Poly::variable(vs, 0);
    Poly t1inv = Poly::variable(vs, 0, -1);
    Poly prod = (t1 - t1inv) * (t1 + t1inv);
    CHECK(prod == parse_poly(vs, "t1^2 - t1^-2"));
    CHECK(prod.str() == "t1^2 - t1^-2");
}

TEST_CASE("newton identity e1^2 - 2e2") {
    auto vs = make_vars(std::vector<std::string>{"a", "b"});
    Poly a = Poly::variable(vs, 0), b = Poly::variable(vs, 1);
    Poly e1 = elementary_symmetric(1, {a, b});
    Poly e2 = elementary_symmetric(2, {a, b});
    CHECK(e1 * e1 - Rat(2) * e2 == a * a + b * b);
}

TEST_CASE("elementary symmetric basics") {
    auto vs = make_vars(std::vector<std::string>{"a", "b", "c"});
    Poly a = Poly::variable(vs, 0), b = Poly::variable(vs, 1), c = Poly::variable(vs, 2);
    CHECK(elementary_symmetric(0, {a, b, c}) == Poly(vs, 1));
    CHECK(elementary_symmetric(2, {a, b, c}) == a * b + a * c + b * c);
    CHECK_THROWS_AS(elementary_symmetric(4, {a, b, c}), Error);
    // e_k of squares of k things is the full product squared
    Poly prod = a * b * c;
    CHECK(elementary_symmetric(3, {a * a, b * b, c * c}) == prod * prod);
}

TEST_CASE("substitution") {
    // x2 - 1/2 x1 with x1 = w1, x2 = w2 - w1  ->  w2 - 3/2 w1
    auto xs = make_vars("x", 2);
    auto ws = make_vars("w", 2);
    Poly p = parse_poly(xs, "x2 - 1/2*x1");
    Poly img = p.substitute({parse_poly(ws, "w1"), parse_poly(ws, "w2 - w1")});
    CHECK(img == parse_poly(ws, "w2 - 3/2*w1"));

    // identity assignment
    Poly q = parse_poly(xs, "x1^3 - 2*x1*x2");
    CHECK(q.substitute({Poly::variable(xs, 0), Poly::variable(xs, 1)}) == q);

    // linear substitutions preserve total degree
    CHECK(img.degree() == p.degree());
}

TEST_CASE("cayley transform substitution") {
    auto ts = make_vars("t", 1, /*laurent=*/true);
    auto xs = make_vars(std::vector<std::string>{"tb1"});
    Poly e1 = Poly::variable(xs, 0);
    Poly img = e1.substitute({parse_poly(ts, "1/2*t1 - 1/2*t1^-1")});
    CHECK(img == parse_poly(ts, "1/2*(t1 - t1^-1)"));
    CHECK(img.str() == "1/2*t1 - 1/2*t1^-1");
}

TEST_CASE("ring axioms on random triples") {
    auto vs = make_vars("x", 3, /*laurent=*/true);
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> ec(-2, 2), cc(-5, 5), nt(1, 4);
    auto rand_poly = [&]() {
        Poly p(vs);
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            Exp e(3);
            for (auto& x : e) x = ec(rng);
            p.add_term(e, cc(rng));
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        Poly a = rand_poly(), b = rand_poly(), c = rand_poly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("homogeneous degree bookkeeping") {
    auto vs = make_vars("x", 2);
    Poly f = parse_poly(vs, "x1^2 + x1*x2");
    Poly g = parse_poly(vs, "x1 - 3*x2");
    int d = 0;
    CHECK(f.is_homogeneous(&d));
    CHECK(d == 2);
    CHECK((f * g).is_homogeneous(&d));
    CHECK(d == 3);
    CHECK_FALSE((f + g).is_homogeneous());
}

TEST_CASE("parser round trip") {
    auto vs = make_vars("t", 3, /*laurent=*/true);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> ec(-3, 3), num(-9, 9), den(1, 4), nt(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        Poly p(vs);
        int terms = nt(rng);
        for (int t = 0; t < terms; ++t) {
            Exp e(3);
            for (auto& x : e) x = ec(rng);
            p.add_term(e, Rat(num(rng), den(rng)));
        }
        CHECK(parse_poly(vs, p.str()) == p);
    }
    CHECK(parse_poly(vs, "0") == Poly(vs));
    CHECK_THROWS_AS(parse_poly(vs, "t4 + 1"), Error);
    CHECK_THROWS_AS(parse_poly(vs, "t1 +"), Error);
}

TEST_CASE("substitution requires a full assignment") {
    auto vs = make_vars("x", 2);
    Poly p = parse_poly(vs, "x1*x2");
    CHECK_THROWS_AS(p.substitute({Poly::variable(vs, 0)}), Error);
}

TEST_CASE("non-laurent rejects negative exponents") {
    auto vs = make_vars("x", 1);
    Poly x = Poly::variable(vs, 0);
    CHECK_THROWS_AS(Poly::variable(vs, 0, -1), Error);
}
