#include "limitmult/tower.hpp"

#include "limitmult/cusp_dimensions.hpp"
#include "limitmult/errors.hpp"
#include "limitmult/vn_dimension.hpp"

namespace limitmult {

namespace {

std::vector<Int> checked_tower(const std::vector<Int>& tower) {
  TowerReport report = validate_tower(tower);
  if (!report.valid) {
    throw InvalidInputError("invalid tower at position " +
                            std::to_string(report.first_violation) + ": " +
                            report.reason);
  }
  for (const Int& n : tower) {
    if (n <= 2) {
      throw UnsupportedRegimeError("tower level " + n.str() +
                                   " is outside the ratio regime (need N > 2)");
    }
  }
  return tower;
}

void check_ratio_window(const SpectralWindow& window) {
  if (!window.is_atomic()) {
    throw UnsupportedRegimeError(
        "multiplicity tables need an atomic window; continuous parts have "
        "no computable multiplicity");
  }
  if (window.atoms().empty()) {
    throw InvalidInputError("window contains no atoms");
  }
  for (const Atom& atom : window.atoms()) {
    if (atom.weight < 3) {
      throw UnsupportedRegimeError("ratio tables require atom weights >= 3, got " +
                                   std::to_string(atom.weight));
    }
  }
}

}  // namespace

Rational ratio_exact(const Int& level, int weight) {
  if (level <= 2 || weight < 3) {
    throw UnsupportedRegimeError("ratio formula requires N > 2 and k >= 3 (got N = " +
                                 level.str() + ", k = " + std::to_string(weight) + ")");
  }
  Rational k1(weight - 1);
  return (k1 - Rational(6, level)) / k1;
}

std::vector<RatioRow> ratio_table(const std::vector<Int>& tower,
                                  const SpectralWindow& window) {
  check_ratio_window(window);
  PlancherelModel model = PlancherelModel::standard(Ambient::SL2R);

  std::vector<RatioRow> rows;
  rows.reserve(tower.size());
  for (const Int& n : checked_tower(tower)) {
    LatticeDescriptor lat = lattice(Ambient::SL2R, n);
    RatioRow row;
    row.level = n;
    row.index = lat.index;
    row.multiplicity = multiplicity_window(lat.level, window);
    MeasureValue dim = vn_dimension(lat, model, window);
    row.vn_dim = dim.exact_value().coeff();
    row.ratio = Rational(row.multiplicity) / row.vn_dim;
    row.gap = abs(Rational(1) - row.ratio);
    rows.push_back(std::move(row));
  }
  return rows;
}

Int threshold_level(int weight, const Rational& eps) {
  if (weight < 3) {
    throw UnsupportedRegimeError("threshold requires weight >= 3");
  }
  if (eps <= 0) throw InvalidInputError("epsilon must be positive");
  // Smallest N with 6/(N(k-1)) < eps, i.e. N > 6/(eps(k-1)).
  Rational bound = Rational(6) / (eps * Rational(weight - 1));
  Int n = numerator(bound) / denominator(bound) + 1;
  return n < 3 ? Int(3) : n;
}

std::vector<EmpiricalMeasureRow> empirical_measure_table(const std::vector<Int>& tower,
                                                         const SpectralWindow& window,
                                                         const PlancherelModel& model) {
  check_ratio_window(window);
  validate_for_ambient(window, model.ambient());
  const ExactScalar limit = plancherel_measure(model, window).exact_value();

  std::vector<EmpiricalMeasureRow> rows;
  rows.reserve(tower.size());
  for (const Int& n : checked_tower(tower)) {
    LatticeDescriptor lat = lattice(model.ambient(), n);
    EmpiricalMeasureRow row;
    row.level = n;
    row.index = lat.index;
    row.multiplicity = multiplicity_window(lat.level, window);
    row.empirical = exact_mul(ExactScalar(Rational(row.multiplicity), 0),
                              lat.covolume.inverse());
    row.limit = limit;
    row.gap = exact_add(limit, -row.empirical);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace limitmult
