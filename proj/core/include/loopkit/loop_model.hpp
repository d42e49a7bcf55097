#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loopkit/combinatorics.hpp"
#include "loopkit/matrix.hpp"

namespace loopkit {

struct TLResult {
    Matching image;
    TauPoly factor;  // 1, or tau when the acted-on pair was already linked
};

/// Action of the generator e_site on a matching, sites 1..2n on a cycle
/// (site 2n acts on the pair (2n, 1)). If the two sites are already linked
/// the matching is kept and a closed loop contributes a factor tau; else the
/// two sites are linked together and their former partners are joined up.
TLResult apply_e(int site, const Matching& m);

/// Matrix of e_site on the canonical matching basis; columns are monomials.
TauMatrix tl_generator(int n, int site);

using TLAction = std::function<TLResult(int site, const Matching& m)>;

struct TLCheckReport {
    bool ok = true;
    std::vector<std::string> violations;  // relation, sites and witness matching
};

/// Verifies, acting on every basis matching with exact tau factors:
/// e_i e_i = tau e_i, e_i e_{i+-1} e_i = e_i, and e_i e_j = e_j e_i for
/// cyclic distance >= 2. Requires n >= 2 (the 2-site loop representation
/// degenerates). The action is injectable so corrupted generators can be
/// shown to fail.
TLCheckReport check_tl_relations(int n, const TLAction& action = apply_e);

/// H = -(e_1 + ... + e_2n) as a matrix over Z[tau].
TauMatrix hamiltonian(int n);

/// H with tau evaluated at a rational.
RationalMatrix hamiltonian_at(int n, const Rational& tau_value);

struct GroundState {
    int n = 0;
    std::vector<Matching> basis;    // canonical order
    std::vector<Rational> values;   // all positive integers, nested entry = 1
    Rational sum() const;
    const Rational& value_of(const Matching& m) const;
};

/// Kernel of H + 2n at tau = 1, normalized so the fully nested matching has
/// value 1. Verifies the kernel is one-dimensional, the eigen-relation
/// H psi = -2n psi holds with zero residual, and every component is positive.
GroundState ground_state_tau1(int n);

}  // namespace loopkit
