#include "limitmult/serialization.hpp"

#include "limitmult/errors.hpp"

namespace limitmult {

Json to_json(const ExactScalar& x) {
  return Json{{"num", numerator(x.coeff()).str()},
              {"den", denominator(x.coeff()).str()},
              {"pi_exp", x.pi_exp()}};
}

ExactScalar exact_scalar_from_json(const Json& j) {
  Int num = parse_integer(j.at("num").get<std::string>());
  Int den = parse_integer(j.at("den").get<std::string>());
  if (den <= 0) throw InvalidInputError("exact scalar denominator must be positive");
  return ExactScalar(Rational(num, den), j.at("pi_exp").get<int>());
}

Json to_json(const MeasureValue& m) {
  if (m.is_exact()) return Json{{"exact", to_json(m.exact_value())}};
  ApproxValue v = m.to_approx();
  return Json{{"approx", Json{{"value", v.value}, {"err", v.err_bound}}}};
}

MeasureValue measure_value_from_json(const Json& j) {
  if (j.contains("exact")) {
    return MeasureValue::exact(exact_scalar_from_json(j.at("exact")));
  }
  const Json& a = j.at("approx");
  return MeasureValue::approximate(a.at("value").get<double>(), a.at("err").get<double>());
}

Json to_json(const SpectralWindow& window) {
  Json atoms = Json::array();
  for (const Atom& atom : window.atoms()) {
    atoms.push_back(Json{{"weight", atom.weight}, {"sign", to_string(atom.sign)}});
  }
  Json intervals = Json::array();
  for (const Interval& iv : window.intervals()) {
    intervals.push_back(Json{{"series", to_string(iv.type)},
                             {"lower", iv.lower},
                             {"upper", iv.upper}});
  }
  return Json{{"atoms", atoms}, {"intervals", intervals}};
}

Json to_json(const RatioRow& row) {
  return Json{{"level", row.level.str()},
              {"index", row.index.str()},
              {"multiplicity", row.multiplicity.str()},
              {"vndim", to_string(row.vn_dim)},
              {"ratio", to_string(row.ratio)},
              {"gap", to_string(row.gap)}};
}

Json to_json(const EmpiricalMeasureRow& row) {
  return Json{{"level", row.level.str()},
              {"index", row.index.str()},
              {"multiplicity", row.multiplicity.str()},
              {"empirical", to_json(row.empirical)},
              {"limit", to_json(row.limit)},
              {"gap", to_json(row.gap)}};
}

Json to_json(const CurveInvariants& inv) {
  return Json{{"level", inv.level.value.str()},
              {"psl_index", inv.psl_index.str()},
              {"cusps", inv.num_cusps.str()},
              {"genus", inv.genus.str()},
              {"elliptic2", inv.elliptic2},
              {"elliptic3", inv.elliptic3}};
}

Json to_json(const LatticeDescriptor& lat) {
  return Json{{"ambient", to_string(lat.ambient)},
              {"level", lat.level.value.str()},
              {"index", lat.index.str()},
              {"covolume", to_json(lat.covolume)}};
}

}  // namespace limitmult
