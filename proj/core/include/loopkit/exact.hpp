#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace loopkit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// binomial(n, k) with the usual convention: 0 whenever k < 0 or k > n.
BigInt binomial(int n, int k);

bool is_integer(const Rational& q);

/// Integer value of q, or nullopt if q has a nontrivial denominator.
std::optional<BigInt> as_integer(const Rational& q);

std::string format_bigint(const BigInt& v);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rational(const Rational& q);

/// Accepts "12", "-3/4" and similar; throws ValidationError on anything else
/// (including a zero denominator).
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

}  // namespace loopkit
