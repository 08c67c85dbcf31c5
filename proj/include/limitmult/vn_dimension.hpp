#ifndef LIMITMULT_VN_DIMENSION_HPP
#define LIMITMULT_VN_DIMENSION_HPP

#include "limitmult/congruence.hpp"
#include "limitmult/plancherel.hpp"
#include "limitmult/spectral_window.hpp"

#include <vector>

namespace limitmult {

// A rescaling mu' = factor * mu of the Haar measure.
struct HaarScaling {
  Rational factor;  // > 0
};

// dim over L(Gamma) of the direct integral carried by the window:
// covolume x nu(X). On atomic windows the pi in the covolume cancels the
// pi in the atom masses, so the result is a pure rational; this is asserted.
MeasureValue vn_dimension(const LatticeDescriptor& lattice, const PlancherelModel& model,
                          const SpectralWindow& window);

// Same computation with the covolume scaled by s and every Plancherel mass
// scaled by 1/s; equals vn_dimension exactly on atomic windows.
MeasureValue vn_dimension_scaled(const LatticeDescriptor& lattice,
                                 const PlancherelModel& model,
                                 const SpectralWindow& window, const HaarScaling& scaling);

// dim of the union equals the sum of the dims: exact equality when every
// part is atomic, within combined error bounds otherwise. Parts must be
// pairwise disjoint.
bool vn_additivity_check(const LatticeDescriptor& lattice, const PlancherelModel& model,
                         const std::vector<SpectralWindow>& parts);

}  // namespace limitmult

#endif
