#include "limitmult/plancherel.hpp"

#include "limitmult/errors.hpp"
#include "limitmult/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace limitmult {

namespace {

double standard_density(SeriesType type, double t) {
  constexpr double pi = std::numbers::pi;
  if (type == SeriesType::Even) {
    return t * std::tanh(pi * t) / (4.0 * pi);
  }
  // t coth(pi t) extends continuously to 1/pi at t = 0.
  if (t == 0.0) return 1.0 / (4.0 * pi * pi);
  return t / std::tanh(pi * t) / (4.0 * pi);
}

}  // namespace

PlancherelModel PlancherelModel::standard(Ambient ambient, double quad_tol) {
  return PlancherelModel(ambient, standard_density, quad_tol);
}

PlancherelModel::PlancherelModel(Ambient ambient, DensityFunction density, double quad_tol)
    : ambient_(ambient), density_(std::move(density)), quad_tol_(quad_tol) {
  if (!(quad_tol_ > 0.0)) {
    throw InvalidInputError("quadrature tolerance must be positive");
  }
}

ExactScalar PlancherelModel::atom_mass(int weight) const {
  if (weight < 2) {
    throw InvalidInputError("discrete-series weight must be >= 2, got " +
                            std::to_string(weight));
  }
  return ExactScalar(Rational(weight - 1, 4) * mass_scale_, -1);
}

double PlancherelModel::density(SeriesType type, double t) const {
  return density_(type, t) * mass_scale_.convert_to<double>();
}

PlancherelModel PlancherelModel::with_mass_scale(const Rational& factor) const {
  if (factor <= 0) throw InvalidInputError("mass scale must be positive");
  PlancherelModel scaled = *this;
  scaled.mass_scale_ *= factor;
  return scaled;
}

PlancherelModel PlancherelModel::with_quad_tol(double quad_tol) const {
  if (!(quad_tol > 0.0)) throw InvalidInputError("quadrature tolerance must be positive");
  PlancherelModel copy = *this;
  copy.quad_tol_ = quad_tol;
  return copy;
}

MeasureValue plancherel_measure(const PlancherelModel& model, const SpectralWindow& window) {
  validate_for_ambient(window, model.ambient());

  // Atom masses are all rational multiples of 1/pi, so this sum stays exact.
  ExactScalar atomic;
  for (const Atom& atom : window.atoms()) {
    atomic = exact_add(atomic, model.atom_mass(atom.weight)).exact_value();
  }
  if (window.is_atomic()) return MeasureValue::exact(atomic);

  const double per_interval_tol =
      model.quad_tol() / static_cast<double>(window.intervals().size());
  double integral = 0.0;
  double err = 0.0;
  for (const Interval& iv : window.intervals()) {
    auto integrand = [&](double t) { return model.density(iv.type, t); };
    QuadratureResult q = adaptive_simpson(integrand, iv.lower, iv.upper, per_interval_tol);
    integral += q.value;
    err += q.err_estimate;
  }
  ApproxValue atoms = evaluate(atomic);
  double total = atoms.value + integral;
  return MeasureValue::approximate(total, atoms.err_bound + err + std::abs(total) * 0x1p-52);
}

}  // namespace limitmult
