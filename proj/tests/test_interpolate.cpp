#include <doctest.h>

#include <random>

#include "loopkit/errors.hpp"
#include "loopkit/interpolate.hpp"
#include "test_util.hpp"

using namespace loopkit;

TEST_CASE("polynomial arithmetic in the size variable") {
    NPoly n = NPoly::variable();
    NPoly p = n * n - n.scaled(3) + NPoly::constant(2);  // (n-1)(n-2)
    CHECK(p.evaluate(1) == 0);
    CHECK(p.evaluate(2) == 0);
    CHECK(p.evaluate(5) == 12);
    CHECK(p == testutil::linear_root(1) * testutil::linear_root(2));
    CHECK(p.degree() == 2);
    CHECK(NPoly().degree() == NPoly::kZeroDegree);
    CHECK(p.str() == "n^2 - 3*n + 2");
    CHECK(p.scaled(Rational(1, 2)).str() == "1/2*n^2 - 3/2*n + 1");
}

TEST_CASE("interpolation through frozen points") {
    NPoly line = interpolate_rational({{2, 1}, {3, 2}, {4, 3}});
    CHECK(line == NPoly({Rational(-1), Rational(1)}));  // n - 1

    CHECK(interpolate_rational({{0, Rational(7)}}) == NPoly::constant(7));

    CHECK_THROWS_AS(interpolate_rational({{1, 1}, {1, 2}}), ValidationError);
    CHECK_THROWS_AS(interpolate_rational({}), ValidationError);
}

TEST_CASE("cubic through ground-state data") {
    // Samples of (n-2)(2n^2-5n+9)/6 at n = 3..6.
    NPoly q = interpolate_rational({{3, 2}, {4, 7}, {5, 17}, {6, 34}});
    CHECK(q == NPoly({Rational(-3), Rational(19, 6), Rational(-3, 2), Rational(1, 3)}));
    CHECK(q.evaluate(7) == 60);
}

TEST_CASE("interpolation reproduces inputs and finds the minimal degree") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<int> deg(0, 4);
        int d = deg(rng);
        std::vector<Rational> coeffs(d + 1);
        for (auto& c : coeffs) c = testutil::random_rational(rng, 6, 4);
        NPoly truth(coeffs);

        // Oversample: more points than degree + 1.
        std::vector<std::pair<int, Rational>> pts;
        for (int x = 0; x <= d + 3; ++x) pts.emplace_back(x, truth.evaluate(x));
        NPoly back = interpolate_rational(pts);
        CHECK(back == truth);
        for (const auto& [x, y] : pts) CHECK(back.evaluate(x) == y);
    }
}
