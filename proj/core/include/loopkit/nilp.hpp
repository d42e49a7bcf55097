#pragma once

#include <string>
#include <vector>

#include "loopkit/tau_poly.hpp"

namespace loopkit {

/// Weighted counts of r vertex-disjoint east/south lattice path families
/// ending at strictly increasing diagonal points (L_j, L_j); each south step
/// carries a weight tau.
///
/// Family F: path j starts at (j - p, 2j - 1), the first endpoint is pinned
/// to L_1 = 1 and L_j <= 2j - 1. Family G: path j starts at (j, p + 2j - 1)
/// with 1 <= L_1 and L_j <= p + 2j - 1.

TauPoly f_bruteforce(int p, int r);
TauPoly g_bruteforce(int p, int r);

/// Same counts via the disjoint-path determinant: sums over admissible
/// endpoint tuples of det of single-path counts tau^{s} binom(steps, s).
TauPoly f_lgv(int p, int r);
TauPoly g_lgv(int p, int r);

/// Same counts as constant-term extractions over u_1..u_r.
TauPoly f_ct(int p, int r);
TauPoly g_ct(int p, int r);

/// tau = 1 closed product form for the G count.
BigInt g_kratt(int p, int r);

/// tau = 1 value of G as the ratio S(2(p+r), p) / S(2p, p) of round-number
/// products; throws VerificationError if the ratio is not a positive integer.
BigInt g_sratio(int p, int r);

struct CrossCheck {
    int p = 0;
    int r = 0;
    TauPoly f_brute, f_det, f_const;
    TauPoly g_brute, g_det, g_const, open_sum;
    BigInt f_tau1, psi_tau1;
    BigInt g_tau1, kratt, sratio;
    bool ok = true;
    std::vector<std::string> failures;
};

/// Runs every route and the ground-state bridge at one (p, r):
/// symbolic agreement of the three F routes and of the three G routes with
/// the open-boundary sum, G(tau=1) against both closed forms, and F(tau=1)
/// against psi of the nested unit chain.
CrossCheck cross_check(int p, int r);

}  // namespace loopkit
