#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace golden {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses an integer or `p/q` with optional sign. Decimal points, exponents
/// and zero denominators are rejected.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals; whitespace around items is ignored.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical text: `n` for integers, `p/q` otherwise (q > 0, lowest terms).
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

/// value^exponent; negative exponents require a non-zero base.
Rational power(const Rational& base, long exponent);

/// Binomial coefficient, zero whenever k < 0 or k > n (including n < 0).
Integer binomial(long n, long k);

}  // namespace golden
