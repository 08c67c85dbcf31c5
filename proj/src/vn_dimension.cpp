#include "limitmult/vn_dimension.hpp"

#include "limitmult/errors.hpp"

#include <cmath>

namespace limitmult {

MeasureValue vn_dimension(const LatticeDescriptor& lattice, const PlancherelModel& model,
                          const SpectralWindow& window) {
  if (lattice.ambient != model.ambient()) {
    throw InvalidInputError("lattice ambient " + to_string(lattice.ambient) +
                            " does not match model ambient " +
                            to_string(model.ambient()));
  }
  validate_for_ambient(window, lattice.ambient);

  MeasureValue mass = plancherel_measure(model, window);
  MeasureValue dim = measure_scale(lattice.covolume, mass);
  if (dim.is_exact() && !dim.exact_value().is_rational()) {
    // covolume carries pi^1, every atom mass pi^-1; anything else means the
    // normalization bookkeeping broke.
    throw Error("atomic von Neumann dimension is not a pure rational: " +
                to_string(dim.exact_value()));
  }
  return dim;
}

MeasureValue vn_dimension_scaled(const LatticeDescriptor& lattice,
                                 const PlancherelModel& model,
                                 const SpectralWindow& window, const HaarScaling& scaling) {
  if (scaling.factor <= 0) {
    throw InvalidInputError("Haar scaling factor must be positive");
  }
  LatticeDescriptor scaled_lattice = lattice;
  scaled_lattice.covolume = lattice.covolume.scale(scaling.factor);
  PlancherelModel scaled_model = model.with_mass_scale(Rational(1) / scaling.factor);
  return vn_dimension(scaled_lattice, scaled_model, window);
}

bool vn_additivity_check(const LatticeDescriptor& lattice, const PlancherelModel& model,
                         const std::vector<SpectralWindow>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!windows_disjoint(parts[i], parts[j])) {
        throw InvalidInputError("additivity check requires pairwise disjoint parts");
      }
    }
  }

  SpectralWindow whole;
  MeasureValue sum = MeasureValue::exact(ExactScalar());
  for (const SpectralWindow& part : parts) {
    whole = window_union(whole, part);
    sum = sum + vn_dimension(lattice, model, part);
  }
  MeasureValue total = vn_dimension(lattice, model, whole);

  if (total.is_exact() && sum.is_exact()) {
    return total.exact_value() == sum.exact_value();
  }
  ApproxValue lhs = total.to_approx();
  ApproxValue rhs = sum.to_approx();
  return std::abs(lhs.value - rhs.value) <= lhs.err_bound + rhs.err_bound;
}

}  // namespace limitmult
