#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "flagrep/rootdata.hpp"

using namespace flagrep;
using namespace flagrep::rootsys;

namespace {

// Classical degree tables, used as an independent oracle only here.
std::vector<int> degrees(char type, int rank) {
    switch (type) {
        case 'A': {
            std::vector<int> d;
            for (int i = 2; i <= rank + 1; ++i) d.push_back(i);
            return d;
        }
        case 'B':
        case 'C': {
            std::vector<int> d;
            for (int i = 1; i <= rank; ++i) d.push_back(2 * i);
            return d;
        }
        case 'D': {
            std::vector<int> d;
            for (int i = 1; i < rank; ++i) d.push_back(2 * i);
            d.push_back(rank);
            std::sort(d.begin(), d.end());
            return d;
        }
        case 'G': return {2, 6};
        case 'F': return {2, 6, 8, 12};
        case 'E':
            if (rank == 6) return {2, 5, 6, 8, 9, 12};
            if (rank == 7) return {2, 6, 8, 10, 12, 14, 18};
            return {2, 8, 12, 14, 18, 20, 24, 30};
    }
    return {};
}

std::vector<long> poincare_from_degrees(const std::vector<int>& deg) {
    std::vector<long> p{1};
    for (int d : deg) {
        std::vector<long> q(p.size() + d - 1, 0);
        for (size_t i = 0; i < p.size(); ++i)
            for (int j = 0; j < d; ++j) q[i + j] += p[i];
        p = std::move(q);
    }
    return p;
}

}  // namespace

TEST_CASE("root datum invariants across types") {
    struct Case { char t; int r; int npos; };
    for (auto [t, r, npos] : {Case{'A', 1, 1}, Case{'A', 3, 6}, Case{'B', 2, 4},
                              Case{'B', 3, 9}, Case{'C', 3, 9}, Case{'D', 4, 12},
                              Case{'D', 5, 20}, Case{'G', 2, 6}, Case{'F', 4, 24},
                              Case{'E', 6, 36}, Case{'E', 7, 63}}) {
        RootDatum rd = build_root_datum(t, r);
        CAPTURE(rd.label());
        CHECK(rd.num_pos_roots() == npos);
        for (int i = 0; i < r; ++i) {
            CHECK(rd.cartan[i][i] == 2);
            for (int j = 0; j < r; ++j)
                if (i != j) CHECK(rd.cartan[i][j] <= 0);
        }
        // cartan times the fundamental-weight change of basis is the identity
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Rat s = 0;
                for (int k = 0; k < r; ++k) s += rd.fweight_in_roots[i][k] * Rat(rd.cartan[k][j]);
                CHECK(s == (i == j ? 1 : 0));
            }
    }
    CHECK_THROWS_AS(build_root_datum('F', 5), Error);
    CHECK_THROWS_AS(build_root_datum('G', 3), Error);
    CHECK_THROWS_AS(build_root_datum('Z', 2), Error);
    CHECK_THROWS_AS(build_root_datum('E', 5), Error);
}

TEST_CASE("A1 rank one") {
    RootDatum rd = build_root_datum('A', 1);
    CHECK(rd.cartan == std::vector<std::vector<int>>{{2}});
    CHECK(rd.num_pos_roots() == 1);
    WeylLevels lv = enumerate_weyl(rd, 1);
    CHECK(lv.total() == 2);
}

TEST_CASE("G2 conventions pinned by the torus actions") {
    RootDatum rd = build_root_datum('G', 2);
    CHECK(rd.cartan[0][1] * rd.cartan[1][0] == 3);
    // x1 = w1, x2 = w2 - w1; s1 swaps x1,x2 and s2 sends x2 to x1 - x2
    std::vector<Rat> x1{1, 0}, x2{-1, 1};
    CHECK(reflect(rd, 1, x1) == x2);
    CHECK(reflect(rd, 1, x2) == x1);
    CHECK(reflect(rd, 2, x1) == x1);
    std::vector<Rat> x1_minus_x2{2, -1};
    CHECK(reflect(rd, 2, x2) == x1_minus_x2);
    // involution
    CHECK(reflect(rd, 2, reflect(rd, 2, x2)) == x2);
    // reflections preserve the pairing
    std::vector<Rat> v{3, -2}, u{1, 5};
    CHECK(rd.inner(reflect(rd, 1, v), reflect(rd, 1, u)) == rd.inner(v, u));
    CHECK_THROWS_AS(reflect(rd, 3, v), Error);
    CHECK_THROWS_AS(reflect(rd, 0, v), Error);
}

TEST_CASE("s_i fixes other fundamental weights") {
    RootDatum rd = build_root_datum('F', 4);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            std::vector<Rat> w(4, 0);
            w[j - 1] = 1;
            auto img = reflect(rd, i, w);
            if (i != j) CHECK(img == w);
        }
}

TEST_CASE("word machinery") {
    RootDatum rd = build_root_datum('G', 2);
    WeylElement w = weyl_from_word(rd, {2, 1});
    CHECK(w.length == 2);
    CHECK(w.word == std::vector<int>{2, 1});
    WeylElement winv = weyl_inverse(rd, w);
    CHECK(winv.word == std::vector<int>{1, 2});
    CHECK(weyl_mul(rd, w, winv).is_identity());

    // non-reduced input words reduce
    WeylElement e = weyl_from_word(rd, {1, 1});
    CHECK(e.is_identity());

    // replaying the canonical word reproduces the action
    WeylElement replay = weyl_from_word(rd, w.word);
    CHECK(replay == w);
}

TEST_CASE("enumeration counts match the degree product formula") {
    struct Case { char t; int r; };
    for (auto [t, r] : {Case{'A', 1}, Case{'A', 2}, Case{'A', 3}, Case{'B', 2}, Case{'B', 3},
                        Case{'D', 4}, Case{'D', 5}, Case{'G', 2}, Case{'F', 4}}) {
        RootDatum rd = build_root_datum(t, r);
        CAPTURE(rd.label());
        auto expect = poincare_from_degrees(degrees(t, r));
        auto got = poincare_polynomial(rd);
        CHECK(got == expect);
        CHECK(std::accumulate(got.begin(), got.end(), 0L) ==
              weyl_order(rd).get_si());
    }
}

TEST_CASE("every enumerated element replays its word and length") {
    RootDatum rd = build_root_datum('B', 3);
    WeylLevels lv = enumerate_weyl(rd, rd.num_pos_roots());
    for (size_t len = 0; len < lv.by_length.size(); ++len) {
        for (const auto& w : lv.by_length[len]) {
            CHECK(w.length == static_cast<int>(len));
            CHECK(w.word.size() == len);
            WeylElement replay = weyl_from_word(rd, w.word);
            CHECK(replay == w);
            CHECK(weyl_length_of_action(rd, w.act_r) == static_cast<int>(len));
        }
    }
}

TEST_CASE("E7 low lengths match the Poincare coefficients") {
    RootDatum rd = build_root_datum('E', 7);
    auto expect = poincare_from_degrees(degrees('E', 7));
    WeylLevels lv = enumerate_weyl(rd, 3);
    REQUIRE(lv.by_length.size() == 4);
    for (int m = 0; m <= 3; ++m)
        CHECK(static_cast<long>(lv.by_length[m].size()) == expect[m]);
    CHECK(lv.by_length[1].size() == 7);
}

TEST_CASE("minimal coset representatives") {
    RootDatum g2 = build_root_datum('G', 2);
    CosetSystem cs = minimal_coset_reps(g2, 1, g2.num_pos_roots());
    CHECK(cs.reps.total() == 6);
    CHECK(cs.reps.by_length[0].size() == 1);  // identity is always a representative
    // closure under the minimality criterion
    for (const auto& lvl : cs.reps.by_length)
        for (const auto& w : lvl) CHECK(is_minimal_rep(g2, {1}, w));
    CHECK(Int(cs.reps.total()) * levi_weyl_order(g2, {1}) == weyl_order(g2));

    RootDatum d4 = build_root_datum('D', 4);
    CosetSystem d4c = minimal_coset_reps(d4, 2, d4.num_pos_roots());
    CHECK(Int(d4c.reps.total()) * levi_weyl_order(d4, {2}) == weyl_order(d4));
    CHECK(d4c.reps.total() == 24);

    CHECK_THROWS_AS(minimal_coset_reps(g2, 3, 6), Error);
}

TEST_CASE("E7 P7 has 56 representatives") {
    RootDatum rd = build_root_datum('E', 7);
    CosetSystem cs = minimal_coset_reps(rd, 7, rd.num_pos_roots());
    CHECK(cs.reps.total() == 56);
}

TEST_CASE("D4 signed permutation cross-check") {
    // W(D_n) as permutations (a_1...a_2n) with a_i + a_{2n+1-i} = 2n+1 and an
    // even number of i <= n with a_i > n. The matrix model must act on the
    // delta basis by exactly these signed permutations, and the count must
    // be 2^{n-1} n!.
    int n = 4;
    RootDatum rd = build_root_datum('D', n);
    // delta_p in omega coordinates
    std::vector<std::vector<Rat>> delta(n, std::vector<Rat>(n, 0));
    delta[0][0] = 1;
    for (int p = 1; p + 2 <= n; ++p) { delta[p][p] = 1; delta[p][p - 1] = -1; }
    delta[n - 2] = std::vector<Rat>(n, 0);
    delta[n - 2][n - 2] = 1; delta[n - 2][n - 1] = 1; delta[n - 2][n - 3] = -1;
    delta[n - 1] = std::vector<Rat>(n, 0);
    delta[n - 1][n - 1] = 1; delta[n - 1][n - 2] = -1;

    WeylLevels lv = enumerate_weyl(rd, rd.num_pos_roots());
    CHECK(lv.total() == 192);  // 2^3 * 4!
    long checked = 0;
    for (const auto& lvl : lv.by_length)
        for (const auto& w : lvl) {
            // w(delta_p) must be +-delta_q, a signed permutation with an even
            // number of sign flips
            int flips = 0;
            std::vector<char> used(n, 0);
            for (int p = 0; p < n; ++p) {
                auto img = apply_weyl(w, delta[p]);
                bool matched = false;
                for (int q = 0; q < n && !matched; ++q) {
                    if (used[q]) continue;
                    bool plus = true, minus = true;
                    for (int k = 0; k < n; ++k) {
                        if (img[k] != delta[q][k]) plus = false;
                        if (img[k] != -delta[q][k]) minus = false;
                    }
                    if (plus || minus) {
                        matched = true;
                        used[q] = 1;
                        if (minus && !plus) ++flips;
                    }
                }
                CHECK(matched);
            }
            CHECK(flips % 2 == 0);
            ++checked;
        }
    CHECK(checked == 192);
}

TEST_CASE("exponents from height distribution") {
    CHECK(weyl_exponents(build_root_datum('E', 6)) == std::vector<int>{1, 4, 5, 7, 8, 11});
    CHECK(weyl_exponents(build_root_datum('E', 7)) == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
    CHECK(weyl_order(build_root_datum('F', 4)) == 1152);
    CHECK(weyl_order(build_root_datum('E', 7)) == 2903040);
}
