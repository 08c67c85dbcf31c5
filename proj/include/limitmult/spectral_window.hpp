#ifndef LIMITMULT_SPECTRAL_WINDOW_HPP
#define LIMITMULT_SPECTRAL_WINDOW_HPP

#include "limitmult/congruence.hpp"

#include <compare>
#include <vector>

namespace limitmult {

// Holomorphic (+) / antiholomorphic (-) member of the discrete-series pair
// with lowest weight k.
enum class Sign { Plus, Minus };

std::string to_string(Sign sign);

struct Atom {
  int weight;  // k >= 2
  Sign sign;

  auto operator<=>(const Atom&) const = default;
};

enum class SeriesType { Even, Odd };

std::string to_string(SeriesType type);

// Principal-series parameter range [lower, upper); half-open by convention
// so that unions never double-count a boundary point (single points carry
// no continuous mass anyway).
struct Interval {
  SeriesType type;
  double lower;
  double upper;

  bool operator==(const Interval&) const = default;
};

// A bounded measurable subset of the unitary dual: finitely many
// discrete-series atoms plus finitely many principal-series intervals,
// kept sorted and coalesced so equal windows compare equal.
class SpectralWindow {
 public:
  SpectralWindow() = default;

  // Validates weight >= 2; duplicate atoms collapse.
  void add_atom(Atom atom);

  // Validates 0 <= lower < upper < inf; overlapping or touching intervals
  // of the same series type are coalesced.
  void add_interval(Interval interval);

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  bool empty() const { return atoms_.empty() && intervals_.empty(); }
  bool is_atomic() const { return intervals_.empty(); }

  bool operator==(const SpectralWindow&) const = default;

 private:
  std::vector<Atom> atoms_;          // sorted, unique
  std::vector<Interval> intervals_;  // sorted by (type, lower), disjoint per type
};

SpectralWindow window_union(const SpectralWindow& a, const SpectralWindow& b);

// True when the windows share no atom and no interval overlap of positive
// length (touching endpoints are fine under the half-open convention).
bool windows_disjoint(const SpectralWindow& a, const SpectralWindow& b);

// PSL(2,R) has no odd-weight discrete series and no odd principal series.
// Throws InvalidInputError when the window does not fit the ambient group.
void validate_for_ambient(const SpectralWindow& window, Ambient ambient);

}  // namespace limitmult

#endif
