#ifndef LIMITMULT_CUSP_DIMENSIONS_HPP
#define LIMITMULT_CUSP_DIMENSIONS_HPP

#include "limitmult/congruence.hpp"
#include "limitmult/spectral_window.hpp"

namespace limitmult {

// Weight k and level N of a space of cusp forms S_k(Gamma(N)).
struct WeightLevel {
  int weight;  // k >= 2; weight 1 is genuinely hard and out of scope
  FactoredNatural level;
};

WeightLevel weight_level(int weight, const Int& level);

// Closed multiplicative formula
//   dim S_k(Gamma(N)) = ((k-1)/24 - 1/(4N)) N^3 prod_{p|N}(1 - 1/p^2),
// valid for N > 2 and k >= 3 only; outside that regime it throws
// UnsupportedRegimeError and the geometric route must be used.
Rational dim_cusp_closed(const WeightLevel& wl);

// Valence-formula route via the curve invariants of X(N); handles every
// level N >= 1 and weight k >= 2. The two routes must always agree where
// both apply.
Rational dim_cusp_geometric(const WeightLevel& wl);

// Multiplicity of one weight-k discrete series (either sign) in
// L^2(Gamma(N)\SL(2,R)): equals dim S_k(Gamma(N)). Computed geometrically
// and cross-checked against the closed form whenever that is in regime.
Int multiplicity_atom(const WeightLevel& wl);

// Sum of atom multiplicities over the window, each sign counted separately.
// Windows with a continuous part are rejected: Maass-form counts are not
// computable here.
Int multiplicity_window(const FactoredNatural& level, const SpectralWindow& window);

}  // namespace limitmult

#endif
