#include "limitmult/cusp_dimensions.hpp"

#include "limitmult/errors.hpp"

namespace limitmult {

namespace {

void require_supported_weight(int k) {
  if (k < 2) {
    throw UnsupportedRegimeError("weight " + std::to_string(k) +
                                 " is unsupported (need k >= 2)");
  }
}

Int as_integer(const Rational& r, const char* what) {
  if (denominator(r) != 1) {
    throw Error(std::string(what) + " came out non-integral: " + to_string(r));
  }
  return numerator(r);
}

}  // namespace

WeightLevel weight_level(int weight, const Int& level) {
  require_supported_weight(weight);
  return {weight, factor(level)};
}

Rational dim_cusp_closed(const WeightLevel& wl) {
  require_supported_weight(wl.weight);
  if (wl.level.value <= 2 || wl.weight <= 2) {
    throw UnsupportedRegimeError(
        "closed-form dimension requires N > 2 and k >= 3 (got N = " +
        wl.level.value.str() + ", k = " + std::to_string(wl.weight) + ")");
  }
  Rational dim = (Rational(wl.weight - 1, 24) - Rational(1, 4 * wl.level.value)) *
                 Rational(sl2_index(wl.level));
  as_integer(dim, "closed-form cusp dimension");
  return dim;
}

Rational dim_cusp_geometric(const WeightLevel& wl) {
  require_supported_weight(wl.weight);
  const int k = wl.weight;
  CurveInvariants curve = curve_invariants(wl.level.value);
  const Rational g(curve.genus);
  const Rational cusps(curve.num_cusps);

  if (k % 2 == 1) {
    // -I in Gamma(1), Gamma(2) kills all odd weights.
    if (wl.level.value <= 2) return Rational(0);
    if (curve.elliptic2 != 0 || curve.elliptic3 != 0) {
      throw Error("unexpected elliptic points at level " + wl.level.value.str());
    }
    // All cusps of Gamma(N), N >= 3, are regular.
    Rational dim = Rational(k - 1) * (g - 1) + Rational(k - 2, 2) * cusps;
    as_integer(dim, "odd-weight cusp dimension");
    return dim;
  }
  if (k == 2) return g;
  Rational dim = Rational(k - 1) * (g - 1) + Rational(k / 4) * curve.elliptic2 +
                 Rational(k / 3) * curve.elliptic3 + Rational(k / 2 - 1) * cusps;
  as_integer(dim, "even-weight cusp dimension");
  return dim;
}

Int multiplicity_atom(const WeightLevel& wl) {
  Rational geometric = dim_cusp_geometric(wl);
  if (wl.level.value > 2 && wl.weight >= 3) {
    Rational closed = dim_cusp_closed(wl);
    if (closed != geometric) {
      throw Error("dimension routes disagree at N = " + wl.level.value.str() +
                  ", k = " + std::to_string(wl.weight) + ": closed " +
                  to_string(closed) + " vs geometric " + to_string(geometric));
    }
  }
  return as_integer(geometric, "multiplicity");
}

Int multiplicity_window(const FactoredNatural& level, const SpectralWindow& window) {
  if (!window.is_atomic()) {
    throw UnsupportedRegimeError(
        "window has a continuous part; principal-series multiplicities "
        "(Maass counts) are not computable here");
  }
  Int total = 0;
  for (const Atom& atom : window.atoms()) {
    total += multiplicity_atom({atom.weight, level});
  }
  return total;
}

}  // namespace limitmult
