#include "loopkit/exact.hpp"

#include <cctype>

#include "loopkit/errors.hpp"

namespace loopkit {

BigInt factorial(int n) {
    if (n < 0) throw ValidationError("factorial of negative argument " + std::to_string(n));
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::optional<BigInt> as_integer(const Rational& q) {
    if (!is_integer(q)) return std::nullopt;
    return numerator(q);
}

std::string format_bigint(const BigInt& v) { return v.str(); }

std::string format_rational(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
    if (!valid_integer_token(text))
        throw ValidationError("not an integer: '" + std::string(text) + "'");
    return BigInt(std::string(text));
}

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

}  // namespace loopkit
