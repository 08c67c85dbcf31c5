#include "limitmult/spectral_window.hpp"

#include "limitmult/errors.hpp"

#include <algorithm>
#include <cmath>

namespace limitmult {

std::string to_string(Sign sign) { return sign == Sign::Plus ? "+" : "-"; }

std::string to_string(SeriesType type) {
  return type == SeriesType::Even ? "even" : "odd";
}

void SpectralWindow::add_atom(Atom atom) {
  if (atom.weight < 2) {
    throw InvalidInputError("discrete-series weight must be >= 2, got " +
                            std::to_string(atom.weight));
  }
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
  if (it != atoms_.end() && *it == atom) return;
  atoms_.insert(it, atom);
}

void SpectralWindow::add_interval(Interval interval) {
  if (!(interval.lower >= 0.0) || !(interval.upper > interval.lower) ||
      !std::isfinite(interval.upper)) {
    throw InvalidInputError("principal-series interval needs 0 <= a < b < inf");
  }
  intervals_.push_back(interval);
  std::sort(intervals_.begin(), intervals_.end(), [](const Interval& x, const Interval& y) {
    return std::tie(x.type, x.lower, x.upper) < std::tie(y.type, y.lower, y.upper);
  });
  // Coalesce overlapping or touching ranges within each series type.
  std::vector<Interval> merged;
  for (const Interval& iv : intervals_) {
    if (!merged.empty() && merged.back().type == iv.type &&
        iv.lower <= merged.back().upper) {
      merged.back().upper = std::max(merged.back().upper, iv.upper);
    } else {
      merged.push_back(iv);
    }
  }
  intervals_ = std::move(merged);
}

SpectralWindow window_union(const SpectralWindow& a, const SpectralWindow& b) {
  SpectralWindow result = a;
  for (const Atom& atom : b.atoms()) result.add_atom(atom);
  for (const Interval& iv : b.intervals()) result.add_interval(iv);
  return result;
}

bool windows_disjoint(const SpectralWindow& a, const SpectralWindow& b) {
  for (const Atom& atom : a.atoms()) {
    if (std::binary_search(b.atoms().begin(), b.atoms().end(), atom)) return false;
  }
  for (const Interval& x : a.intervals()) {
    for (const Interval& y : b.intervals()) {
      if (x.type == y.type && x.lower < y.upper && y.lower < x.upper) return false;
    }
  }
  return true;
}

void validate_for_ambient(const SpectralWindow& window, Ambient ambient) {
  if (ambient == Ambient::SL2R) return;
  for (const Atom& atom : window.atoms()) {
    if (atom.weight % 2 != 0) {
      throw InvalidInputError("PSL(2,R) has no odd-weight discrete series (weight " +
                              std::to_string(atom.weight) + ")");
    }
  }
  for (const Interval& iv : window.intervals()) {
    if (iv.type == SeriesType::Odd) {
      throw InvalidInputError("PSL(2,R) has no odd principal series");
    }
  }
}

}  // namespace limitmult
