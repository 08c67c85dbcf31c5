#ifndef LIMITMULT_PLANCHEREL_HPP
#define LIMITMULT_PLANCHEREL_HPP

#include "limitmult/congruence.hpp"
#include "limitmult/exact_scalar.hpp"
#include "limitmult/spectral_window.hpp"

#include <functional>

namespace limitmult {

// Plancherel density of a principal-series point, per series type.
using DensityFunction = std::function<double(SeriesType, double)>;

// A measurable model of the tempered dual: exact masses (k-1)/(4 pi) at the
// discrete-series atoms and a continuous density on the principal series.
//
// The normalization is the one in which covol(PSL(2,Z)) = pi/3; everything
// downstream is invariant under joint rescaling (see vn_dimension_scaled).
// The default density is the tanh/coth pair
//     even: t tanh(pi t) / (4 pi),   odd: t coth(pi t) / (4 pi),
// continuous and nonnegative on [0, inf); it is pluggable because exact
// results never depend on its shape.
class PlancherelModel {
 public:
  static PlancherelModel standard(Ambient ambient, double quad_tol = 1e-10);

  PlancherelModel(Ambient ambient, DensityFunction density, double quad_tol);

  Ambient ambient() const { return ambient_; }
  double quad_tol() const { return quad_tol_; }
  const Rational& mass_scale() const { return mass_scale_; }

  // Formal dimension of the weight-k discrete series, times the scale.
  ExactScalar atom_mass(int weight) const;

  double density(SeriesType type, double t) const;

  // All Plancherel masses (atomic and continuous) multiplied by factor;
  // used to realize Haar rescalings exactly.
  PlancherelModel with_mass_scale(const Rational& factor) const;

  PlancherelModel with_quad_tol(double quad_tol) const;

 private:
  Ambient ambient_;
  Rational mass_scale_ = 1;
  DensityFunction density_;
  double quad_tol_;
};

// nu(X): sum of atom masses plus the integral of the density over each
// interval. Exact when the window is atomic; otherwise approximate with
// err_bound at most quad_tol (the budget is split across intervals).
MeasureValue plancherel_measure(const PlancherelModel& model, const SpectralWindow& window);

}  // namespace limitmult

#endif
