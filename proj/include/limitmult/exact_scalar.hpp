#ifndef LIMITMULT_EXACT_SCALAR_HPP
#define LIMITMULT_EXACT_SCALAR_HPP

#include "limitmult/rational.hpp"

#include <string>

namespace limitmult {

// A rational multiple of an integer power of pi, with the exponent confined
// to {-1, 0, 1}. Every exact quantity in this library (covolumes, formal
// dimensions, atomic spectral masses, von Neumann dimensions) lives here;
// the narrow exponent range is deliberate so that a product drifting out of
// it fails loudly instead of silently leaving exact arithmetic.
class ExactScalar {
 public:
  // Zero.
  ExactScalar() : coeff_(0), pi_exp_(0) {}

  // coeff * pi^pi_exp. A zero coefficient canonicalizes to pi_exp = 0, so
  // equal values always compare equal bit-for-bit.
  ExactScalar(Rational coeff, int pi_exp);

  const Rational& coeff() const { return coeff_; }
  int pi_exp() const { return pi_exp_; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_rational() const { return pi_exp_ == 0; }

  bool operator==(const ExactScalar& other) const = default;

  ExactScalar operator-() const { return ExactScalar(-coeff_, pi_exp_); }

  // Multiplication by a plain rational never touches the exponent.
  ExactScalar scale(const Rational& factor) const {
    return ExactScalar(coeff_ * factor, pi_exp_);
  }

  // Reciprocal; flips the exponent. Throws InvalidInputError on zero.
  ExactScalar inverse() const;

 private:
  Rational coeff_;
  int pi_exp_;
};

// Numeric value of an ExactScalar together with a rigorous absolute error
// bound. pi is carried to 50 decimal digits, so the bound is dominated by
// the final rounding to double.
struct ApproxValue {
  double value = 0.0;
  double err_bound = 0.0;
};

ApproxValue evaluate(const ExactScalar& x);

// Result of measuring a spectral window: exact when the window is atomic,
// a (value, error-bound) pair once quadrature is involved.
class MeasureValue {
 public:
  // Exact zero.
  MeasureValue() = default;

  static MeasureValue exact(ExactScalar value) {
    MeasureValue mv;
    mv.exact_ = true;
    mv.exact_value_ = value;
    return mv;
  }

  static MeasureValue approximate(double value, double err_bound);

  bool is_exact() const { return exact_; }

  // Throws Error when the value is approximate.
  const ExactScalar& exact_value() const;

  // err_bound() is zero for exact values by definition.
  double err_bound() const { return exact_ ? 0.0 : approx_.err_bound; }

  // Numeric view of either kind; for exact values this evaluates the scalar
  // and reports the (tiny) evaluation error.
  ApproxValue to_approx() const { return exact_ ? evaluate(exact_value_) : approx_; }

  MeasureValue operator+(const MeasureValue& other) const;

 private:
  bool exact_ = true;
  ExactScalar exact_value_;
  ApproxValue approx_;
};

// Exact when the exponents agree or either operand is zero; otherwise the
// sum is evaluated numerically with a stated error bound.
MeasureValue exact_add(const ExactScalar& a, const ExactScalar& b);

// Always exact. Throws ExponentRangeError if the summed exponent leaves
// {-1,0,1}; the covolume x Plancherel products of Theorem-4.2 type always
// pair pi^1 with pi^-1, so such an escape is a modeling bug.
ExactScalar exact_mul(const ExactScalar& a, const ExactScalar& b);

// covolume x measure with error propagation for the approximate case.
MeasureValue measure_scale(const ExactScalar& factor, const MeasureValue& m);

// "p/q", "p/q·π" or "p/(q·π)" depending on the exponent.
std::string to_string(const ExactScalar& x);

std::string to_string(const MeasureValue& m);

}  // namespace limitmult

#endif
