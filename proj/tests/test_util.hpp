#pragma once

#include <random>
#include <vector>

#include "loopkit/interpolate.hpp"
#include "loopkit/tau_poly.hpp"

namespace loopkit::testutil {

inline TauPoly random_poly(std::mt19937& rng, int max_degree, int max_abs_coeff) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<int> coeff(-max_abs_coeff, max_abs_coeff);
    std::vector<BigInt> c(deg(rng) + 1);
    for (auto& v : c) v = coeff(rng);
    return TauPoly(std::move(c));
}

inline Rational random_rational(std::mt19937& rng, int max_abs_num, int max_den) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

/// (x - root) as a polynomial in n, for building expected interpolants.
inline NPoly linear_root(int root) {
    return NPoly({Rational(-root), Rational(1)});
}

}  // namespace loopkit::testutil
