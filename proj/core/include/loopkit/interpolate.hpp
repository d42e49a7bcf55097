#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopkit/exact.hpp"

namespace loopkit {

/// Univariate polynomial with rational coefficients in the system-size
/// variable n. Coefficients ascend; the zero polynomial is empty.
class NPoly {
public:
    static constexpr int kZeroDegree = -1;

    NPoly() = default;
    explicit NPoly(std::vector<Rational> ascending_coeffs);
    static NPoly constant(Rational c);
    static NPoly variable();  // the polynomial n

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    NPoly& operator+=(const NPoly& o);
    NPoly& operator-=(const NPoly& o);
    NPoly& operator*=(const NPoly& o);
    friend NPoly operator+(NPoly a, const NPoly& b) { return a += b; }
    friend NPoly operator-(NPoly a, const NPoly& b) { return a -= b; }
    friend NPoly operator*(const NPoly& a, const NPoly& b);
    NPoly scaled(const Rational& c) const;
    bool operator==(const NPoly& o) const = default;

    std::string str(std::string_view var = "n") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through all points, by
/// Lagrange interpolation over exact rationals. Duplicate abscissae raise
/// ValidationError. The result is trimmed, so feeding more samples than the
/// underlying degree needs simply reproduces the lower-degree polynomial.
NPoly interpolate_rational(const std::vector<std::pair<int, Rational>>& points);

inline std::ostream& operator<<(std::ostream& out, const NPoly& p) { return out << p.str(); }

}  // namespace loopkit
