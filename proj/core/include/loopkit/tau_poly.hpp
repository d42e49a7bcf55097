#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "loopkit/exact.hpp"

namespace loopkit {

/// Dense polynomial in tau with arbitrary-precision integer coefficients.
/// Coefficients are stored in ascending powers and kept trimmed, so the zero
/// polynomial is the empty vector and degree() == kZeroDegree stands in for
/// "minus infinity".
class TauPoly {
public:
    static constexpr int kZeroDegree = -1;

    TauPoly() = default;
    TauPoly(int constant);           // NOLINT(google-explicit-constructor)
    TauPoly(BigInt constant);        // NOLINT(google-explicit-constructor)
    explicit TauPoly(std::vector<BigInt> ascending_coeffs);

    static TauPoly tau();
    static TauPoly monomial(BigInt coeff, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& coeff(int power) const;
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& tau_value) const;

    TauPoly& operator+=(const TauPoly& o);
    TauPoly& operator-=(const TauPoly& o);
    TauPoly& operator*=(const TauPoly& o);
    TauPoly operator-() const;
    friend TauPoly operator+(TauPoly a, const TauPoly& b) { return a += b; }
    friend TauPoly operator-(TauPoly a, const TauPoly& b) { return a -= b; }
    friend TauPoly operator*(const TauPoly& a, const TauPoly& b);
    bool operator==(const TauPoly& o) const = default;

    /// Rendering like "tau^3 + 2*tau - 1"; the zero polynomial prints "0".
    std::string str() const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// U_m from the recurrence U_0 = 1, U_1 = -tau, U_{m+1} = -tau U_m - U_{m-1};
/// cheb_u(-1) is the zero polynomial (empty-product sentinel).
TauPoly cheb_u(int m);

/// Quotient num / den when den divides num exactly in Z[tau]; throws
/// VerificationError otherwise. Used by fraction-free elimination.
TauPoly exact_div(const TauPoly& num, const TauPoly& den);

inline std::ostream& operator<<(std::ostream& out, const TauPoly& p) { return out << p.str(); }

}  // namespace loopkit
