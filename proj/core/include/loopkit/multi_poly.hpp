#pragma once

#include <map>
#include <vector>

#include "loopkit/tau_poly.hpp"

namespace loopkit {

/// Sparse polynomial in u_1..u_arity with TauPoly coefficients, keyed by
/// exponent vectors. Intended for constant-term extraction: products are
/// taken with per-variable degree caps, which is sound because exponents only
/// ever add, so coefficients at or below the caps stay exact.
class MultiPoly {
public:
    explicit MultiPoly(int arity) : arity_(arity) {}
    static MultiPoly constant(int arity, TauPoly value);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulates coeff onto the monomial u^exponents; drops the term if the
    /// accumulated coefficient cancels to zero.
    void add_term(std::vector<int> exponents, const TauPoly& coeff);

    const TauPoly& coefficient_of(const std::vector<int>& exponents) const;
    const std::map<std::vector<int>, TauPoly>& terms() const { return terms_; }

    MultiPoly& operator+=(const MultiPoly& o);
    bool operator==(const MultiPoly& o) const = default;

private:
    int arity_;
    std::map<std::vector<int>, TauPoly> terms_;
};

/// Product of a and b, discarding every monomial whose exponent in u_l
/// exceeds caps[l].
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b, const std::vector<int>& caps);

}  // namespace loopkit
