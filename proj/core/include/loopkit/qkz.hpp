#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopkit/combinatorics.hpp"
#include "loopkit/interpolate.hpp"
#include "loopkit/matrix.hpp"
#include "loopkit/multi_poly.hpp"

namespace loopkit {

enum class ArchChoice { leftmost, rightmost };

/// Basis-change coefficient C_{a,pi} in Z[tau], by peeling little arches:
/// with (i, i+1) a little arch of pi and k the multiplicity of i in a, the
/// value is U_{k-1} times the coefficient of the reduced pair (both a and pi
/// lose the points i, i+1); k = 0 or a reduced entry hitting 0 gives 0.
/// The arch peeled at each step does not affect the result; the choice is
/// exposed so tests can confirm that.
TauPoly coeff_C(const ASequence& a, const Matching& pi,
                ArchChoice choice = ArchChoice::leftmost);

/// Closed product form over the arches of pi, valid for strict a: each arch
/// (r, s) contributes U_k with k = #{i : r <= a_i < s} - (s - r + 1)/2.
TauPoly coeff_C_product(const ASequence& a, const Matching& pi);

struct CoeffMatrix {
    std::vector<ASequence> sequences;   // lexicographic
    std::vector<Matching> matchings;    // canonical order
    /// For C: rows are sequences, columns matchings. For the inverse, rows
    /// are matchings, columns sequences.
    TauMatrix entries;
    bool inverse = false;
};

/// Full matrix C at size n; lower unitriangular in the canonical order.
CoeffMatrix matrix_C(int n);

/// C^{-1}, cached per size (thread-safe); psi components are its rows.
CoeffMatrix matrix_Ctilde(int n);

/// Constant-term integrand: prod_l (1 + tau u_l)^p * prod_{l<m} (u_m - u_l)
/// (1 + tau u_m + u_l u_m), expanded with per-variable caps.
MultiPoly phi_integrand(int p, int r, const std::vector<int>& caps);

/// Coefficient of prod_l u_l^{c_l - 1} in the integrand above. The entries
/// of c must be strictly increasing and positive; they sit on top of a fully
/// packed prefix 1..p, so phi(p, c) is the building block phi_{(1..p, p+c)}.
TauPoly phi(int p, const std::vector<int>& c);

/// Component psi_{(pi)_p} of the size r+p ground state, where pi has size 2r:
/// the C^{-1} row of pi paired with phi(p, a) over all strict a.
TauPoly psi_nested(const Matching& pi, int p);

/// psi_nested at p = 0: the component of pi itself.
TauPoly psi(const Matching& pi);

struct SumRuleReport {
    int r = 0;
    int p = 0;
    TauPoly lhs;  // sum over pi of tau^{even openings} psi_{(pi)_p}
    TauPoly rhs;  // psi_{(unit chain)_{p+1}}
    bool equal = false;
};

SumRuleReport sum_rule(int r, int p);

/// Sum of phi(p, a - p) over strict a with p < a_i <= 2p + 2i - 1, skipping
/// sequences where some even a_i is followed immediately by a_i + 1.
TauPoly sum_open(int p, int r);

struct NInterpolation {
    Matching pattern;
    YoungDiagram young;
    int boxes = 0;
    int p_max = 0;
    std::vector<NPoly> by_tau_power;  // index = power of tau
    NPoly tau1;                       // sum over powers: the tau = 1 polynomial
    int n_degree = 0;
    int tau_degree = 0;
    bool factorial_clears_denominators = false;  // |Y|! times every coeff is integral
    Rational leading;           // coefficient of n^{|Y|} tau^{|Y|}
    Rational expected_leading;  // standard tableaux count / |Y|!
    bool leading_ok = false;
};

/// Interpolates psi_{(pi)_p} for p = 0..p_max in the total size n = r + p,
/// separately for each power of tau. Requires p_max >= |Y_pi| so the sample
/// count covers the expected degree; an interpolant of degree above |Y_pi|
/// raises VerificationError.
NInterpolation interpolate_in_n(const Matching& pi, int p_max);

/// Both sides of the symmetrized rational identity at given tau and pairwise
/// distinct u (no u_j - u_i or tau + u_i + u_j may vanish): the sum over j of
///   (tau + 2u_j) prod_i (1 - u_j u_i) prod_{i != j} (1 + u_i (tau + u_j))
///   / [ prod_{i != j} (u_j - u_i) * prod_i (tau + u_i + u_j) ]
/// against (-1)^{r-1} (1 - prod_i u_i^2).
std::pair<Rational, Rational> zeileq_sides(const Rational& tau_value,
                                           const std::vector<Rational>& u);

/// Evaluates the identity at `trials` deterministic pseudo-random rational
/// points away from the pole loci; throws VerificationError with a witness
/// on any mismatch. Returns true otherwise.
bool verify_zeileq(int r, int trials);

}  // namespace loopkit
