#include "limitmult/quadrature.hpp"

#include "limitmult/errors.hpp"

#include <cmath>

namespace limitmult {

namespace {

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

// Depth 48 halves the panel below any representable width long before it
// can be reached on smooth densities at tol >= 1e-14.
constexpr int kMaxDepth = 48;

// Subdivide at least this far before trusting the doubling estimate; a lucky
// cancellation in S_2 - S_1 on a wide panel would otherwise end recursion
// while the true error is still large.
constexpr int kMinDepth = 4;

QuadratureResult refine(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (depth >= kMaxDepth || (depth >= kMinDepth && std::abs(delta) <= 15.0 * tol)) {
    return {left + right + delta / 15.0, std::abs(delta) / 15.0};
  }
  QuadratureResult l = refine(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
  QuadratureResult r = refine(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  return {l.value + r.value, l.err_estimate + r.err_estimate};
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double tol) {
  if (!(tol > 0.0)) throw InvalidInputError("quadrature tolerance must be positive");
  if (!(b > a)) return {0.0, 0.0};
  const double fa = f(a);
  const double fm = f(0.5 * (a + b));
  const double fb = f(b);
  const double whole = simpson(fa, fm, fb, b - a);
  return refine(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace limitmult
