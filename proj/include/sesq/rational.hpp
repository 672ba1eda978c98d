#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace sesq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "12", "-0.375", ".5", "3/7". Fraction form is accepted because
// normalized sizes s/C are not finite decimals in general.
Rational parse_decimal(const std::string& text);

// Exact decimal string when the denominator is of the form 2^a 5^b,
// otherwise "p/q".
std::string format_decimal(const Rational& value);

double to_double(const Rational& value);

// Number of fractional decimal digits needed to write `value` exactly,
// or -1 when the decimal expansion does not terminate.
int decimal_digits(const Rational& value);

BigInt floor_rational(const Rational& value);
BigInt ceil_rational(const Rational& value);

// Least common multiple of the denominators; every value times the result
// is an integer.
BigInt common_denominator(const std::vector<Rational>& values);

}  // namespace sesq
