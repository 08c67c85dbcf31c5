#ifndef LIMITMULT_SERIALIZATION_HPP
#define LIMITMULT_SERIALIZATION_HPP

#include "limitmult/congruence.hpp"
#include "limitmult/exact_scalar.hpp"
#include "limitmult/spectral_window.hpp"
#include "limitmult/tower.hpp"

#include <json.hpp>

namespace limitmult {

using Json = nlohmann::ordered_json;

// ExactScalar <-> {"num": "...", "den": "...", "pi_exp": n}; numerator and
// denominator travel as strings so arbitrary precision survives the wire.
Json to_json(const ExactScalar& x);
ExactScalar exact_scalar_from_json(const Json& j);

// MeasureValue <-> {"exact": {...}} or {"approx": {"value": v, "err": e}}.
Json to_json(const MeasureValue& m);
MeasureValue measure_value_from_json(const Json& j);

Json to_json(const SpectralWindow& window);

Json to_json(const RatioRow& row);
Json to_json(const EmpiricalMeasureRow& row);
Json to_json(const CurveInvariants& inv);
Json to_json(const LatticeDescriptor& lat);

}  // namespace limitmult

#endif
