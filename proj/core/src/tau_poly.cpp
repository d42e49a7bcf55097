#include "loopkit/tau_poly.hpp"

#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {
const BigInt kZero = 0;
}

TauPoly::TauPoly(int constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

TauPoly::TauPoly(BigInt constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

TauPoly::TauPoly(std::vector<BigInt> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

TauPoly TauPoly::tau() { return monomial(1, 1); }

TauPoly TauPoly::monomial(BigInt coeff, int power) {
    TauPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(power + 1, 0);
        p.coeffs_[power] = std::move(coeff);
    }
    return p;
}

const BigInt& TauPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[power];
}

Rational TauPoly::evaluate(const Rational& tau_value) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * tau_value + *it;
    return acc;
}

void TauPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

TauPoly& TauPoly::operator+=(const TauPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

TauPoly& TauPoly::operator-=(const TauPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

TauPoly operator*(const TauPoly& a, const TauPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return TauPoly(std::move(out));
}

TauPoly& TauPoly::operator*=(const TauPoly& o) { return *this = *this * o; }

TauPoly TauPoly::operator-() const {
    TauPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

std::string TauPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << mag.str();
        } else {
            if (mag != 1) out << mag.str() << "*";
            out << "tau";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

TauPoly cheb_u(int m) {
    if (m < -1) throw ValidationError("cheb_u index below -1: " + std::to_string(m));
    if (m == -1) return {};
    TauPoly prev;                // U_{-1} = 0
    TauPoly cur = 1;             // U_0
    const TauPoly minus_tau = -TauPoly::tau();
    for (int i = 0; i < m; ++i) {
        TauPoly next = minus_tau * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

TauPoly exact_div(const TauPoly& num, const TauPoly& den) {
    if (den.is_zero()) throw VerificationError("exact_div by zero polynomial");
    if (num.is_zero()) return {};
    if (num.degree() < den.degree())
        throw VerificationError("exact_div: degree of numerator below divisor");
    std::vector<BigInt> rem = num.coefficients();
    const std::vector<BigInt>& d = den.coefficients();
    const BigInt& lead = d.back();
    std::vector<BigInt> quot(rem.size() - d.size() + 1, 0);
    for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
        BigInt& top = rem[k + d.size() - 1];
        if (top == 0) continue;
        if (top % lead != 0)
            throw VerificationError("exact_div: coefficient not divisible");
        BigInt q = top / lead;
        for (std::size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
        quot[k] = std::move(q);
    }
    for (const BigInt& c : rem)
        if (c != 0) throw VerificationError("exact_div: nonzero remainder");
    return TauPoly(std::move(quot));
}

}  // namespace loopkit
