#ifndef LIMITMULT_ERRORS_HPP
#define LIMITMULT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace limitmult {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-domain input (CLI exit code 2).
class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what) : Error(what) {}
};

// Input is well-formed but the requested computation is outside the
// supported regime, e.g. weight-1 cusp forms or multiplicities of
// continuous spectrum (CLI exit code 3).
class UnsupportedRegimeError : public Error {
 public:
  explicit UnsupportedRegimeError(const std::string& what) : Error(what) {}
};

// A pi-exponent left {-1,0,1} during multiplication. This never happens in
// the covolume x Plancherel products; it signals a modeling bug upstream.
class ExponentRangeError : public Error {
 public:
  explicit ExponentRangeError(const std::string& what) : Error(what) {}
};

// Window mini-language syntax error with byte offset and expected tokens.
class ParseError : public InvalidInputError {
 public:
  ParseError(std::size_t offset, const std::string& expected)
      : InvalidInputError("parse error at offset " + std::to_string(offset) +
                          ": expected " + expected),
        offset_(offset),
        expected_(expected) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

}  // namespace limitmult

#endif
