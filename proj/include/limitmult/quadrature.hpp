#ifndef LIMITMULT_QUADRATURE_HPP
#define LIMITMULT_QUADRATURE_HPP

#include <functional>

namespace limitmult {

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
};

// Adaptive Simpson on [a, b] to absolute tolerance tol: each panel is
// accepted when the interval-doubling estimate |S_2 - S_1|/15 fits its
// share of the budget, and the Richardson-extrapolated value is kept.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double tol);

}  // namespace limitmult

#endif
