#include <doctest.h>

#include "loopkit/errors.hpp"
#include "loopkit/loop_model.hpp"
#include "loopkit/qkz.hpp"
#include "test_util.hpp"

using namespace loopkit;

TEST_CASE("coefficient recursion on frozen pairs") {
    CHECK(coeff_C(ASequence::strict({1, 3, 5, 6, 7}), Matching::parse("((()(())))")) ==
          -TauPoly::tau());

    SUBCASE("diagonal entries are 1") {
        for (int n = 1; n <= 4; ++n)
            for (const Matching& pi : enumerate_matchings(n))
                CHECK(coeff_C(pi.openings(), pi) == TauPoly(1));
    }

    SUBCASE("entries vanish without containment") {
        CHECK(coeff_C(ASequence::strict({1, 2}), Matching::parse("()()")).is_zero());
        CHECK(coeff_C_product(ASequence::strict({1, 3}), Matching::parse("(())")).is_zero());
    }

    SUBCASE("weak sequences") {
        CHECK(coeff_C(ASequence::weak({1, 1}), Matching::parse("()()")).is_zero());
        CHECK(coeff_C(ASequence::weak({1, 1}), Matching::parse("(())")).is_zero());
        CHECK(coeff_C(ASequence::weak({1, 3, 3}), Matching::parse("((()))")) ==
              -TauPoly::tau());
        CHECK(coeff_C(ASequence::weak({1, 3, 3}), Matching::parse("()(())")).is_zero());
    }

    CHECK_THROWS_AS(coeff_C(ASequence::strict({1}), Matching::parse("()()")), ValidationError);
}

TEST_CASE("recursion, product form and arch choice all agree") {
    for (int n = 1; n <= 4; ++n) {
        auto seqs = enumerate_strict_sequences(n);
        auto ms = enumerate_matchings(n);
        for (const ASequence& a : seqs)
            for (const Matching& pi : ms) {
                TauPoly left = coeff_C(a, pi, ArchChoice::leftmost);
                CHECK(left == coeff_C(a, pi, ArchChoice::rightmost));
                CHECK(left == coeff_C_product(a, pi));
            }
    }
    CHECK_THROWS_AS(coeff_C_product(ASequence::weak({1, 1}), Matching::parse("()()")),
                    ValidationError);
}

TEST_CASE("coefficient matrix structure") {
    CoeffMatrix c1 = matrix_C(1);
    CHECK(c1.entries == TauMatrix::identity(1));
    CHECK(matrix_C(2).entries == TauMatrix::identity(2));

    for (int n = 3; n <= 4; ++n) {
        CoeffMatrix c = matrix_C(n);
        int dim = c.entries.rows();
        for (int row = 0; row < dim; ++row) {
            CHECK(c.entries(row, row) == TauPoly(1));
            for (int col = row + 1; col < dim; ++col) CHECK(c.entries(row, col).is_zero());
        }

        SUBCASE("inverse really inverts") {
            CoeffMatrix ct = matrix_Ctilde(n);
            CHECK(ct.entries * c.entries == TauMatrix::identity(dim));
            CHECK(c.entries * ct.entries == TauMatrix::identity(dim));
        }

        SUBCASE("degrees stay below the box-count gap") {
            for (int row = 0; row < dim; ++row)
                for (int col = 0; col < dim; ++col) {
                    const TauPoly& entry = c.entries(row, col);
                    if (entry.is_zero()) continue;
                    int gap = young_of(c.sequences[row]).box_count() -
                              c.matchings[col].young().box_count();
                    if (gap == 0) CHECK(entry == TauPoly(1));
                    else CHECK(entry.degree() <= gap - 2);
                }
        }
    }
}

TEST_CASE("building-block extraction") {
    CHECK(phi(0, {1, 2}) == TauPoly(1));
    CHECK(phi(1, {1, 3}) == TauPoly::monomial(2, 1));
    for (int p = 0; p <= 4; ++p) CHECK(phi(p, {1}) == TauPoly(1));
    CHECK_THROWS_AS(phi(0, {0, 1}), ValidationError);
    CHECK_THROWS_AS(phi(0, {2, 2}), ValidationError);
    CHECK_THROWS_AS(phi(-1, {1}), ValidationError);
}

TEST_CASE("ground-state components in the tau polynomial ring") {
    CHECK(psi(Matching::parse("(())")) == TauPoly(1));
    CHECK(psi(Matching::parse("()()")) == TauPoly::tau());
    CHECK(psi_nested(Matching::parse("()()"), 1) == TauPoly::monomial(2, 1));
    CHECK(psi(Matching::parse("()()()")) ==
          TauPoly::monomial(1, 3) + TauPoly::tau());  // tau^3 + tau
    CHECK(psi(Matching::parse("((()))")) == TauPoly(1));
    CHECK(psi(Matching::parse("(())()")) == TauPoly::monomial(1, 2));

    SUBCASE("fully nested patterns are normalized to 1 at every size") {
        for (int r = 1; r <= 5; ++r) {
            CHECK(psi(Matching::fully_nested(r)) == TauPoly(1));
            CHECK(psi_nested(Matching::fully_nested(r), 2) == TauPoly(1));
        }
    }

    SUBCASE("tau = 1 values reproduce the eigenvector oracle") {
        for (int n = 2; n <= 4; ++n) {
            GroundState g = ground_state_tau1(n);
            for (std::size_t i = 0; i < g.basis.size(); ++i)
                CHECK(psi(g.basis[i]).evaluate(Rational(1)) == g.values[i]);
        }
    }

    SUBCASE("rotation leaves values invariant at tau = 1 but not symbolically") {
        for (int n = 2; n <= 4; ++n)
            for (const Matching& pi : enumerate_matchings(n))
                CHECK(psi(pi).evaluate(Rational(1)) == psi(pi.rotated()).evaluate(Rational(1)));
        CHECK(psi(Matching::parse("(())")) != psi(Matching::parse("()()")));
    }
}

TEST_CASE("sum rule") {
    SumRuleReport s20 = sum_rule(2, 0);
    CHECK(s20.lhs == TauPoly::monomial(2, 1));
    CHECK(s20.rhs == TauPoly::monomial(2, 1));
    CHECK(s20.equal);

    SumRuleReport s10 = sum_rule(1, 0);
    CHECK(s10.lhs == TauPoly(1));
    CHECK(s10.rhs == TauPoly(1));

    CHECK(sum_rule(3, 2).equal);

    SUBCASE("holds on a small grid") {
        for (int r = 1; r <= 3; ++r)
            for (int p = 0; p <= 2; ++p) CHECK(sum_rule(r, p).equal);
    }

    SUBCASE("plain tau = 1 sum matches the one-size-up chain component") {
        for (int r = 1; r <= 3; ++r) {
            Rational total = 0;
            for (const Matching& pi : enumerate_matchings(r))
                total += psi(pi).evaluate(Rational(1));
            CHECK(total == psi(Matching::unit_chain(r + 1)).evaluate(Rational(1)));
        }
    }
}

TEST_CASE("open-boundary sum") {
    CHECK(sum_open(0, 2) == TauPoly(1) + TauPoly::tau());
    CHECK(sum_open(1, 1) == TauPoly(1) + TauPoly::tau());
    CHECK(sum_open(1, 2) ==
          TauPoly(std::vector<BigInt>{1, 3, 2, 1}));  // 1 + 3 tau + 2 tau^2 + tau^3
    CHECK(sum_open(1, 2).evaluate(Rational(1)) == 7);
    CHECK_THROWS_AS(sum_open(0, 0), ValidationError);
}

TEST_CASE("interpolation of components in the total size") {
    NInterpolation chain2 = interpolate_in_n(Matching::parse("()()"), 3);
    CHECK(chain2.boxes == 1);
    CHECK(chain2.tau_degree == 1);
    CHECK(chain2.n_degree == 1);
    REQUIRE(chain2.by_tau_power.size() == 2);
    CHECK(chain2.by_tau_power[0].is_zero());
    CHECK(chain2.by_tau_power[1] == NPoly({Rational(-1), Rational(1)}));  // n - 1
    CHECK(chain2.tau1 == NPoly({Rational(-1), Rational(1)}));
    CHECK(chain2.leading == 1);
    CHECK(chain2.expected_leading == 1);
    CHECK(chain2.leading_ok);
    CHECK(chain2.factorial_clears_denominators);

    NInterpolation hook = interpolate_in_n(Matching::parse("(())()"), 4);
    CHECK(hook.boxes == 2);
    CHECK(hook.by_tau_power[2] ==
          testutil::linear_root(1) * testutil::linear_root(2) * NPoly::constant(Rational(1, 2)));
    CHECK(hook.by_tau_power[0].is_zero());
    CHECK(hook.by_tau_power[1].is_zero());
    CHECK(hook.leading == Rational(1, 2));
    CHECK(hook.leading_ok);

    CHECK_THROWS_AS(interpolate_in_n(Matching::parse("(())()"), 1), ValidationError);
}

TEST_CASE("symmetrized rational identity") {
    SUBCASE("single variable collapses to 1 - u^2") {
        for (int num = -3; num <= 3; ++num) {
            Rational u(num, 2);
            auto [lhs, rhs] = zeileq_sides(Rational(1, 3), {u});
            CHECK(lhs == rhs);
            CHECK(rhs == 1 - u * u);
        }
    }

    SUBCASE("frozen two-variable witness") {
        auto [lhs, rhs] = zeileq_sides(Rational(0), {Rational(1), Rational(2)});
        CHECK(lhs == 3);
        CHECK(rhs == 3);
    }

    SUBCASE("random trials across sizes") {
        for (int r = 1; r <= 3; ++r) CHECK(verify_zeileq(r, 5));
    }

    CHECK_THROWS_AS(zeileq_sides(Rational(1), {Rational(2), Rational(2)}), ValidationError);
    CHECK_THROWS_AS(zeileq_sides(Rational(-2), {Rational(1)}), ValidationError);
}
