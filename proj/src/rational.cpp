#include "limitmult/rational.hpp"

#include "limitmult/errors.hpp"

#include <cctype>

namespace limitmult {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Int parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) {
    throw InvalidInputError("not an integer: '" + std::string(text) + "'");
  }
  Int value{std::string(body)};
  return negative ? Int(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Int num = parse_integer(text.substr(0, slash));
  std::string_view den_part = text.substr(slash + 1);
  if (!all_digits(den_part)) {
    throw InvalidInputError("not a rational: '" + std::string(text) +
                            "' (expected p or p/q)");
  }
  Int den{std::string(den_part)};
  if (den == 0) {
    throw InvalidInputError("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace limitmult
