#include "limitmult/exact_scalar.hpp"

#include "limitmult/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>

namespace limitmult {

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

const Real50& pi50() {
  static const Real50 value = boost::math::constants::pi<Real50>();
  return value;
}

// Relative bound covering the 50-digit arithmetic (~1e-49) plus the final
// rounding to double (2^-53), with slack.
constexpr double kEvalRelErr = 0x1p-50;

Real50 to_real50(const ExactScalar& x) {
  Real50 v = Real50(numerator(x.coeff())) / Real50(denominator(x.coeff()));
  if (x.pi_exp() == 1) v *= pi50();
  if (x.pi_exp() == -1) v /= pi50();
  return v;
}

}  // namespace

ExactScalar::ExactScalar(Rational coeff, int pi_exp) : coeff_(std::move(coeff)), pi_exp_(pi_exp) {
  if (pi_exp_ < -1 || pi_exp_ > 1) {
    throw ExponentRangeError("pi exponent " + std::to_string(pi_exp_) +
                             " outside {-1,0,1}");
  }
  if (coeff_ == 0) pi_exp_ = 0;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw InvalidInputError("division by exact zero");
  return ExactScalar(Rational(1) / coeff_, -pi_exp_);
}

ApproxValue evaluate(const ExactScalar& x) {
  if (x.is_zero()) return {0.0, 0.0};
  double value = to_real50(x).convert_to<double>();
  return {value, std::abs(value) * kEvalRelErr};
}

MeasureValue MeasureValue::approximate(double value, double err_bound) {
  if (!(err_bound >= 0.0) || !std::isfinite(err_bound) || !std::isfinite(value)) {
    throw Error("approximate measure requires finite value and nonnegative bound");
  }
  MeasureValue mv;
  mv.exact_ = false;
  mv.approx_ = {value, err_bound};
  return mv;
}

const ExactScalar& MeasureValue::exact_value() const {
  if (!exact_) throw Error("measure value is approximate, not exact");
  return exact_value_;
}

MeasureValue MeasureValue::operator+(const MeasureValue& other) const {
  if (exact_ && other.exact_) return exact_add(exact_value_, other.exact_value_);
  ApproxValue a = to_approx();
  ApproxValue b = other.to_approx();
  double sum = a.value + b.value;
  double err = a.err_bound + b.err_bound + std::abs(sum) * 0x1p-52;
  return approximate(sum, err);
}

MeasureValue exact_add(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero()) return MeasureValue::exact(b);
  if (b.is_zero()) return MeasureValue::exact(a);
  if (a.pi_exp() == b.pi_exp()) {
    return MeasureValue::exact(ExactScalar(a.coeff() + b.coeff(), a.pi_exp()));
  }
  // Unlike powers of pi: the sum is irrational, so evaluate numerically.
  // Both terms are nonzero, hence so is the sum (pi and pi^2 are irrational).
  // The whole sum is formed at 50 digits and rounded to double once.
  double sum = (to_real50(a) + to_real50(b)).convert_to<double>();
  return MeasureValue::approximate(sum, std::abs(sum) * kEvalRelErr);
}

ExactScalar exact_mul(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_zero() || b.is_zero()) return ExactScalar();
  int exp = a.pi_exp() + b.pi_exp();
  if (exp < -1 || exp > 1) {
    throw ExponentRangeError("product pi exponent " + std::to_string(exp) +
                             " outside {-1,0,1}");
  }
  return ExactScalar(a.coeff() * b.coeff(), exp);
}

MeasureValue measure_scale(const ExactScalar& factor, const MeasureValue& m) {
  if (m.is_exact()) return MeasureValue::exact(exact_mul(factor, m.exact_value()));
  ApproxValue f = evaluate(factor);
  ApproxValue v = m.to_approx();
  double prod = f.value * v.value;
  double err = std::abs(f.value) * v.err_bound + std::abs(v.value) * f.err_bound +
               f.err_bound * v.err_bound + std::abs(prod) * 0x1p-52;
  return MeasureValue::approximate(prod, err);
}

std::string to_string(const ExactScalar& x) {
  const std::string num = numerator(x.coeff()).str();
  const std::string den = denominator(x.coeff()).str();
  switch (x.pi_exp()) {
    case 1:
      if (denominator(x.coeff()) == 1) return num + "·π";
      return num + "/" + den + "·π";
    case -1:
      if (denominator(x.coeff()) == 1) return num + "/π";
      return num + "/(" + den + "·π)";
    default:
      if (denominator(x.coeff()) == 1) return num;
      return num + "/" + den;
  }
}

std::string to_string(const MeasureValue& m) {
  if (m.is_exact()) return to_string(m.exact_value());
  ApproxValue v = m.to_approx();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g (err ≤ %.3g)", v.value, v.err_bound);
  return buf;
}

}  // namespace limitmult
