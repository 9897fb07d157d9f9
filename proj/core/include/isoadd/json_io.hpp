#ifndef ISOADD_JSON_IO_HPP
#define ISOADD_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "isoadd/curve.hpp"
#include "isoadd/families.hpp"
#include "isoadd/representations.hpp"

namespace isoadd {

// Rats travel as strings ("num/den", "/den" omitted for integers) so the
// round trip is bit exact.
nlohmann::json to_json(const Rat& r);
Rat rat_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairMN& pair);
nlohmann::json to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::json& j);

// {"m1":..., "m2":..., "n1":..., "n2":..., "z":...}
nlohmann::json to_json(const IsoRep& rep);
IsoRep iso_rep_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Orbit& orbit);

// {"u":..., "w":...} or the string "infinity"
nlohmann::json to_json(const CurvePoint& p);
CurvePoint curve_point_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Line& line);

nlohmann::json to_json(const FamilyInstance& inst);
FamilyInstance family_instance_from_json(const nlohmann::json& j);

}  // namespace isoadd

#endif  // ISOADD_JSON_IO_HPP
