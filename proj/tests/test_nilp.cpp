#include <doctest.h>

#include "loopkit/errors.hpp"
#include "loopkit/nilp.hpp"
#include "loopkit/qkz.hpp"

using namespace loopkit;

TEST_CASE("pinned-endpoint family") {
    CHECK(f_bruteforce(0, 2) == TauPoly(1) + TauPoly::tau());
    CHECK(f_lgv(0, 2) == TauPoly(1) + TauPoly::tau());
    CHECK(f_ct(0, 2) == TauPoly(1) + TauPoly::tau());

    CHECK(f_bruteforce(1, 2) == TauPoly(1) + TauPoly::monomial(2, 1));
    CHECK(f_lgv(1, 2) == TauPoly(1) + TauPoly::monomial(2, 1));

    SUBCASE("a single path has weight 1: it is pinned to end at (1,1)") {
        for (int p = 0; p <= 4; ++p) {
            CHECK(f_bruteforce(p, 1) == TauPoly(1));
            CHECK(f_lgv(p, 1) == TauPoly(1));
        }
    }

    CHECK(f_lgv(2, 2).evaluate(Rational(1)) == 4);
    CHECK(f_lgv(0, 0) == TauPoly(1));
}

TEST_CASE("free-endpoint family") {
    CHECK(g_bruteforce(1, 1) == TauPoly(1) + TauPoly::tau());
    CHECK(g_lgv(1, 1) == TauPoly(1) + TauPoly::tau());
    CHECK(g_ct(1, 1) == TauPoly(1) + TauPoly::tau());

    CHECK(g_bruteforce(0, 2) == TauPoly(1) + TauPoly::tau());
    CHECK(g_lgv(1, 2) == TauPoly(std::vector<BigInt>{1, 3, 2, 1}));
    CHECK(g_lgv(1, 2).evaluate(Rational(1)) == 7);

    SUBCASE("r = 0 is the empty family") {
        for (int p = 0; p <= 4; ++p) {
            CHECK(g_bruteforce(p, 0) == TauPoly(1));
            CHECK(g_lgv(p, 0) == TauPoly(1));
        }
    }

    SUBCASE("tau = 1 values at p = 0 are the round numbers 2, 7, 42") {
        CHECK(g_lgv(0, 2).evaluate(Rational(1)) == 2);
        CHECK(g_lgv(0, 3).evaluate(Rational(1)) == 7);
        CHECK(g_lgv(0, 4).evaluate(Rational(1)) == 42);
    }
}

TEST_CASE("all routes agree symbolically on a small grid") {
    for (int p = 0; p <= 2; ++p)
        for (int r = 0; r <= 3; ++r) {
            TauPoly f = f_bruteforce(p, r);
            CHECK(f == f_lgv(p, r));
            CHECK(f == f_ct(p, r));
            TauPoly g = g_bruteforce(p, r);
            CHECK(g == g_lgv(p, r));
            CHECK(g == g_ct(p, r));
            if (r >= 1) CHECK(g == sum_open(p, r));
        }
}

TEST_CASE("coefficients count path families, so they are non-negative") {
    for (int p = 0; p <= 3; ++p)
        for (int r = 0; r <= 3; ++r) {
            for (const BigInt& c : f_lgv(p, r).coefficients()) CHECK(c >= 0);
            for (const BigInt& c : g_lgv(p, r).coefficients()) CHECK(c >= 0);
            CHECK(f_lgv(p, r).coeff(0) == 1);  // the all-east family
        }
}

TEST_CASE("closed product form") {
    CHECK(g_kratt(0, 2) == 2);
    CHECK(g_kratt(1, 1) == 2);
    CHECK(g_kratt(1, 2) == 7);
    CHECK(g_kratt(0, 4) == 42);
    CHECK(g_kratt(2, 1) == 4);
    CHECK(g_kratt(3, 2) == 91);
    CHECK(g_kratt(0, 0) == 1);
    CHECK_THROWS_AS(g_kratt(-1, 2), ValidationError);
}

TEST_CASE("product ratio form") {
    CHECK(g_sratio(1, 1) == 2);
    CHECK(g_sratio(2, 1) == 4);
    CHECK(g_sratio(3, 2) == 91);
    for (int r = 0; r <= 5; ++r) CHECK(g_sratio(0, r) == g_kratt(0, r));

    SUBCASE("both closed forms agree on a grid") {
        for (int p = 0; p <= 4; ++p)
            for (int r = 0; p + r <= 6; ++r) CHECK(g_sratio(p, r) == g_kratt(p, r));
    }
}

TEST_CASE("resource caps") {
    CHECK_THROWS_AS(f_bruteforce(8, 4), ResourceError);
    CHECK_THROWS_AS(g_lgv(9, 3), ResourceError);
}

TEST_CASE("full cross-check report") {
    CrossCheck c = cross_check(1, 2);
    CHECK(c.ok);
    CHECK(c.failures.empty());
    CHECK(c.g_tau1 == 7);
    CHECK(c.kratt == 7);
    CHECK(c.sratio == 7);
    CHECK(c.f_tau1 == 3);
    CHECK(c.psi_tau1 == 3);

    CrossCheck c0 = cross_check(0, 2);
    CHECK(c0.ok);
    CHECK(c0.f_brute == TauPoly(1) + TauPoly::tau());
}
