#include "limitmult/congruence.hpp"

#include "limitmult/errors.hpp"

namespace limitmult {

std::string to_string(Ambient ambient) {
  return ambient == Ambient::SL2R ? "sl2" : "psl2";
}

Ambient parse_ambient(std::string_view text) {
  if (text == "sl2") return Ambient::SL2R;
  if (text == "psl2") return Ambient::PSL2R;
  throw InvalidInputError("unknown ambient '" + std::string(text) +
                          "' (expected sl2 or psl2)");
}

FactoredNatural factor(const Int& n) {
  if (n < 1) throw InvalidInputError("cannot factor " + n.str() + ": need n >= 1");
  FactoredNatural result;
  result.value = n;
  Int rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    int exp = 0;
    while (rest % p == 0) {
      rest /= p;
      ++exp;
    }
    result.factors.emplace_back(p, exp);
  }
  if (rest > 1) result.factors.emplace_back(rest, 1);
  return result;
}

Int sl2_index(const FactoredNatural& level) {
  Int index = level.value * level.value * level.value;
  // p^3 divides N^3 for every p | N, so dividing by p^2 first stays integral.
  for (const auto& [p, exp] : level.factors) {
    index = index / (p * p) * (p * p - 1);
  }
  return index;
}

Int psl_index(const FactoredNatural& level) {
  if (level.value == 1) return 1;
  if (level.value == 2) return 6;
  return sl2_index(level) / 2;
}

LatticeDescriptor lattice(Ambient ambient, const Int& level) {
  FactoredNatural n = factor(level);
  LatticeDescriptor lat;
  lat.ambient = ambient;
  if (ambient == Ambient::SL2R) {
    lat.index = sl2_index(n);
    lat.covolume = ExactScalar(Rational(1, 6), 1).scale(Rational(lat.index));
  } else {
    lat.index = psl_index(n);
    lat.covolume = ExactScalar(Rational(1, 3), 1).scale(Rational(lat.index));
  }
  lat.level = std::move(n);
  return lat;
}

CurveInvariants curve_invariants(const Int& level) {
  FactoredNatural n = factor(level);
  CurveInvariants inv;
  if (n.value == 1) {
    inv = {std::move(n), 1, 1, 0, 1, 1};
    return inv;
  }
  if (n.value == 2) {
    inv = {std::move(n), 6, 3, 0, 0, 0};
    return inv;
  }
  // N >= 3: Gamma(N) is torsion-free and the curve data is multiplicative.
  Int mu = psl_index(n);
  Rational cusps = Rational(mu) / Rational(n.value);
  Rational genus = Rational(1) + Rational(mu * (n.value - 6)) / Rational(12 * n.value);
  if (denominator(cusps) != 1 || denominator(genus) != 1) {
    throw Error("non-integral curve invariants at level " + n.value.str());
  }
  inv.level = std::move(n);
  inv.psl_index = mu;
  inv.num_cusps = numerator(cusps);
  inv.genus = numerator(genus);
  inv.elliptic2 = 0;
  inv.elliptic3 = 0;
  return inv;
}

TowerReport validate_tower(const std::vector<Int>& levels) {
  if (levels.empty()) throw InvalidInputError("tower must contain at least one level");
  for (const Int& n : levels) {
    if (n < 1) {
      throw InvalidInputError("tower level " + n.str() + " is not a positive integer");
    }
  }
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    const Int& a = levels[i];
    const Int& b = levels[i + 1];
    if (b % a != 0) {
      return {false, i + 1,
              a.str() + " does not divide " + b.str()};
    }
    if (b <= a) {
      return {false, i + 1,
              "levels must strictly increase: " + b.str() + " <= " + a.str()};
    }
  }
  return {true, 0, ""};
}

}  // namespace limitmult
