#ifndef LIMITMULT_RATIONAL_HPP
#define LIMITMULT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace limitmult {

using Int = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored reduced with positive
// denominator (cpp_rational canonicalizes on every operation).
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q" with nonzero q. Decimal points and exponents are
// rejected: rationals on the command line are exact by contract.
Rational parse_rational(std::string_view text);

// Parses a base-10 integer, rejecting anything else.
Int parse_integer(std::string_view text);

// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& r);

}  // namespace limitmult

#endif
