#include <doctest.h>

#include <random>

#include "loopkit/errors.hpp"
#include "loopkit/json_io.hpp"
#include "loopkit/tau_poly.hpp"
#include "test_util.hpp"

using namespace loopkit;

TEST_CASE("construction trims and reports degree") {
    CHECK(TauPoly().is_zero());
    CHECK(TauPoly().degree() == TauPoly::kZeroDegree);
    CHECK(TauPoly(0).is_zero());
    CHECK(TauPoly(std::vector<BigInt>{0, 0}).is_zero());
    CHECK(TauPoly(std::vector<BigInt>{1, 2, 0}).degree() == 1);
    CHECK(TauPoly(7).degree() == 0);
    CHECK(TauPoly::tau().degree() == 1);
    CHECK(TauPoly::monomial(3, 4).coeff(4) == 3);
    CHECK(TauPoly::monomial(3, 4).coeff(2) == 0);
    CHECK(TauPoly::monomial(0, 4).is_zero());
}

TEST_CASE("chebyshev-like family") {
    CHECK(cheb_u(-1).is_zero());
    CHECK(cheb_u(0) == TauPoly(1));
    CHECK(cheb_u(1) == -TauPoly::tau());
    CHECK(cheb_u(2) == TauPoly(std::vector<BigInt>{-1, 0, 1}));  // tau^2 - 1
    CHECK_THROWS_AS(cheb_u(-2), ValidationError);

    SUBCASE("recurrence holds for higher indices") {
        for (int m = 1; m <= 10; ++m)
            CHECK(cheb_u(m + 1) == -TauPoly::tau() * cheb_u(m) - cheb_u(m - 1));
    }

    SUBCASE("degree grows by one per index") {
        for (int m = 0; m <= 10; ++m) CHECK(cheb_u(m).degree() == m);
    }

    SUBCASE("values at tau = 1 cycle through 1, -1, 0 with period dividing 6") {
        for (int m = 0; m <= 24; ++m) {
            Rational v = cheb_u(m).evaluate(Rational(1));
            CHECK((v == 1 || v == -1 || v == 0));
            CHECK(cheb_u(m + 6).evaluate(Rational(1)) == v);
        }
    }
}

TEST_CASE("ring operations satisfy the usual identities") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 60; ++trial) {
        TauPoly a = testutil::random_poly(rng, 5, 9);
        TauPoly b = testutil::random_poly(rng, 5, 9);
        TauPoly c = testutil::random_poly(rng, 5, 9);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == TauPoly());
        CHECK(a * TauPoly() == TauPoly());
        CHECK(a * TauPoly(1) == a);
    }
}

TEST_CASE("evaluation is exact over rationals") {
    TauPoly p = cheb_u(2);  // tau^2 - 1
    CHECK(p.evaluate(Rational(3)) == 8);
    CHECK(p.evaluate(Rational(1, 2)) == Rational(-3, 4));
    CHECK(TauPoly().evaluate(Rational(5)) == 0);
}

TEST_CASE("exact division") {
    TauPoly t = TauPoly::tau();
    CHECK(exact_div(cheb_u(2), t + TauPoly(1)) == t - TauPoly(1));
    CHECK(exact_div(TauPoly(), t).is_zero());
    CHECK_THROWS_AS(exact_div(t, TauPoly()), VerificationError);
    CHECK_THROWS_AS(exact_div(t + TauPoly(1), TauPoly(2)), VerificationError);
    CHECK_THROWS_AS(exact_div(TauPoly(1), t), VerificationError);

    std::mt19937 rng(92);
    for (int trial = 0; trial < 40; ++trial) {
        TauPoly a = testutil::random_poly(rng, 4, 9);
        TauPoly b = testutil::random_poly(rng, 4, 9);
        if (b.is_zero()) continue;
        CHECK(exact_div(a * b, b) == a);
    }
}

TEST_CASE("rendering") {
    CHECK(TauPoly().str() == "0");
    CHECK(TauPoly(-7).str() == "-7");
    CHECK(TauPoly::tau().str() == "tau");
    CHECK((-TauPoly::tau()).str() == "-tau");
    CHECK((TauPoly::monomial(1, 3) + TauPoly::tau()).str() == "tau^3 + tau");
    CHECK((TauPoly::monomial(2, 2) - TauPoly(1)).str() == "2*tau^2 - 1");
}

TEST_CASE("json serialization round-trips") {
    TauPoly p = TauPoly(std::vector<BigInt>{BigInt("-1000000000000000000000000000001"), 0, 3});
    std::string text = tau_poly_to_json(p);
    CHECK(tau_poly_from_json(text) == p);
    CHECK(text.find("\"var\":\"tau\"") != std::string::npos);
    CHECK(text.find("-1000000000000000000000000000001") != std::string::npos);

    CHECK(tau_poly_to_json(TauPoly()).find("\"coeffs\":[]") != std::string::npos);
    CHECK(tau_poly_from_json(tau_poly_to_json(TauPoly())).is_zero());

    CHECK_THROWS_AS(tau_poly_from_json("{\"var\":\"x\",\"coeffs\":[]}"), ValidationError);
    CHECK_THROWS_AS(tau_poly_from_json("{\"var\":\"tau\"}"), ValidationError);
    CHECK_THROWS_AS(tau_poly_from_json("{\"var\":\"tau\",\"coeffs\":[1]}"), ValidationError);
    CHECK_THROWS_AS(tau_poly_from_json("not json"), ValidationError);
}
