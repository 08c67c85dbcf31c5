#ifndef LIMITMULT_TOWER_HPP
#define LIMITMULT_TOWER_HPP

#include "limitmult/congruence.hpp"
#include "limitmult/exact_scalar.hpp"
#include "limitmult/plancherel.hpp"
#include "limitmult/spectral_window.hpp"

#include <vector>

namespace limitmult {

// One level of a multiplicity / vN-dimension comparison table. All fields
// are exact; gap = |1 - ratio| shrinks like 6A/(N sum(k-1)) along a tower.
struct RatioRow {
  Int level;
  Int index;
  Int multiplicity;
  Rational vn_dim;
  Rational ratio;
  Rational gap;
};

// One level of the empirical-measure comparison: the normalized counting
// measure m/covol against the Plancherel limit nu(X).
struct EmpiricalMeasureRow {
  Int level;
  Int index;
  Int multiplicity;
  ExactScalar empirical;  // m_Gamma(N)(X) / covol(Gamma(N))
  ExactScalar limit;      // nu(X)
  MeasureValue gap;       // limit - empirical; exact on atomic windows
};

// (k - 1 - 6/N) / (k - 1), the exact single-atom ratio for N > 2, k >= 3.
// Agrees with multiplicity_atom / vn_dimension computed independently.
Rational ratio_exact(const Int& level, int weight);

// One RatioRow per tower level, in tower order (SL(2,R) ambient). The tower
// must pass validate_tower with every level > 2; the window must be atomic,
// nonempty, with all weights >= 3 (the ratio law's regime).
std::vector<RatioRow> ratio_table(const std::vector<Int>& tower,
                                  const SpectralWindow& window);

// Smallest admissible level N with 6/(N(k-1)) < eps, clamped to the ratio
// regime minimum N = 3.
Int threshold_level(int weight, const Rational& eps);

// Per level, the empirical measure m/covol, the limit nu(X) and their exact
// gap; for a single atom the gap is (3/(2N))/pi, independent of the weight.
std::vector<EmpiricalMeasureRow> empirical_measure_table(const std::vector<Int>& tower,
                                                         const SpectralWindow& window,
                                                         const PlancherelModel& model);

}  // namespace limitmult

#endif
