#include "sesq/rational.hpp"

#include "sesq/errors.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>

namespace sesq {

namespace {

BigInt pow10(int k) {
  BigInt r = 1;
  for (int i = 0; i < k; ++i) r *= 10;
  return r;
}

Rational parse_plain_decimal(const std::string& text) {
  std::string s = text;
  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_point) throw ParseError("bad decimal: " + text);
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("bad decimal: " + text);
    }
  }
  if (!seen_digit) throw ParseError("bad decimal: " + text);
  // strip leading zeros: cpp_int would read "0..." as an octal literal
  std::size_t first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);
  BigInt num(digits);
  if (negative) num = -num;
  return Rational(num, pow10(frac_digits));
}

}  // namespace

Rational parse_decimal(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Rational num = parse_plain_decimal(text.substr(0, slash));
    Rational den = parse_plain_decimal(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: " + text);
    return num / den;
  }
  return parse_plain_decimal(text);
}

int decimal_digits(const Rational& value) {
  BigInt den = boost::multiprecision::denominator(value);
  int digits2 = 0, digits5 = 0;
  while (den % 2 == 0) { den /= 2; ++digits2; }
  while (den % 5 == 0) { den /= 5; ++digits5; }
  if (den != 1) return -1;
  return std::max(digits2, digits5);
}

std::string format_decimal(const Rational& value) {
  int d = decimal_digits(value);
  if (d < 0) {
    return boost::multiprecision::numerator(value).str() + "/" +
           boost::multiprecision::denominator(value).str();
  }
  BigInt scaled = boost::multiprecision::numerator(value) * pow10(d) /
                  boost::multiprecision::denominator(value);
  bool negative = scaled < 0;
  std::string digits = BigInt(boost::multiprecision::abs(scaled)).str();
  if (d == 0) return (negative ? "-" : "") + digits;
  while (static_cast<int>(digits.size()) <= d) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - d, ".");
  return (negative ? "-" : "") + digits;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

BigInt floor_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_rational(const Rational& value) {
  return -floor_rational(-value);
}

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt l = 1;
  for (const auto& v : values) {
    l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
  }
  return l;
}

}  // namespace sesq
