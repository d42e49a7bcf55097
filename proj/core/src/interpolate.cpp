#include "loopkit/interpolate.hpp"

#include <sstream>

#include "loopkit/errors.hpp"

namespace loopkit {

namespace {
const Rational kZero = 0;
}

NPoly::NPoly(std::vector<Rational> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    trim();
}

NPoly NPoly::constant(Rational c) { return NPoly({std::move(c)}); }

NPoly NPoly::variable() { return NPoly({Rational(0), Rational(1)}); }

const Rational& NPoly::coeff(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[power];
}

Rational NPoly::evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void NPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NPoly& NPoly::operator+=(const NPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

NPoly& NPoly::operator-=(const NPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

NPoly operator*(const NPoly& a, const NPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return NPoly(std::move(out));
}

NPoly& NPoly::operator*=(const NPoly& o) { return *this = *this * o; }

NPoly NPoly::scaled(const Rational& c) const {
    NPoly r = *this;
    for (auto& v : r.coeffs_) v *= c;
    r.trim();
    return r;
}

std::string NPoly::str(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << format_rational(mag);
        } else {
            if (mag != 1) out << format_rational(mag) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

NPoly interpolate_rational(const std::vector<std::pair<int, Rational>>& points) {
    if (points.empty()) throw ValidationError("no interpolation points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw ValidationError("duplicate abscissa " + std::to_string(points[i].first));
    NPoly result;
    for (std::size_t j = 0; j < points.size(); ++j) {
        NPoly basis = NPoly::constant(1);
        Rational denom = 1;
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (i == j) continue;
            basis *= NPoly({Rational(-points[i].first), Rational(1)});
            denom *= Rational(points[j].first - points[i].first);
        }
        result += basis.scaled(points[j].second / denom);
    }
    return result;
}

}  // namespace loopkit
