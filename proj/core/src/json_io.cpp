#include "isoadd/json_io.hpp"

namespace isoadd {

using nlohmann::json;

json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) { return Rat::parse(j.get<std::string>()); }

json to_json(const PairMN& pair) {
  return json{{"m", to_json(pair.m)}, {"n", to_json(pair.n)}};
}

json to_json(const Solution& sol) {
  return json{{"x", to_json(sol.x)}, {"y", to_json(sol.y)}};
}

Solution solution_from_json(const json& j) {
  return Solution{rat_from_json(j.at("x")), rat_from_json(j.at("y"))};
}

json to_json(const IsoRep& rep) {
  return json{{"m1", to_json(rep.m1)},
              {"m2", to_json(rep.m2)},
              {"n1", to_json(rep.n1)},
              {"n2", to_json(rep.n2)},
              {"z", to_json(rep.z)}};
}

IsoRep iso_rep_from_json(const json& j) {
  return make_iso_rep(rat_from_json(j.at("m1")), rat_from_json(j.at("m2")),
                      rat_from_json(j.at("n1")), rat_from_json(j.at("n2")));
}

json to_json(const Orbit& orbit) {
  json elements = json::array();
  for (const Solution& s : orbit.elements) elements.push_back(to_json(s));
  return json{{"elements", elements}, {"degenerate", orbit.degenerate}};
}

json to_json(const CurvePoint& p) {
  if (p.is_infinity()) return "infinity";
  return json{{"u", to_json(p.u())}, {"w", to_json(p.w())}};
}

CurvePoint curve_point_from_json(const json& j) {
  if (j.is_string() && j.get<std::string>() == "infinity") {
    return CurvePoint::at_infinity();
  }
  return CurvePoint(rat_from_json(j.at("u")), rat_from_json(j.at("w")));
}

json to_json(const Line& line) {
  return json{{"lambda", to_json(line.lambda)}, {"nu", to_json(line.nu)}};
}

json to_json(const FamilyInstance& inst) {
  json params = json::object();
  for (const auto& [key, value] : inst.params) params[key] = to_json(value);
  json solutions = json::array();
  for (const Solution& s : inst.solutions) solutions.push_back(to_json(s));
  json sums = json::array();
  for (const Rat& z : inst.sums) sums.push_back(to_json(z));
  return json{{"case_id", case_name(inst.case_id)},
              {"params", params},
              {"pair", to_json(inst.pair)},
              {"solutions", solutions},
              {"sums", sums},
              {"rho", inst.rho},
              {"collapsed", inst.collapsed}};
}

FamilyInstance family_instance_from_json(const json& j) {
  FamilyInstance inst;
  inst.case_id = parse_case_id(j.at("case_id").get<std::string>());
  for (const auto& [key, value] : j.at("params").items()) {
    inst.params.emplace_back(key, rat_from_json(value));
  }
  inst.pair = PairMN(rat_from_json(j.at("pair").at("m")),
                     rat_from_json(j.at("pair").at("n")));
  for (const auto& s : j.at("solutions")) {
    inst.solutions.push_back(solution_from_json(s));
  }
  for (const auto& z : j.at("sums")) inst.sums.push_back(rat_from_json(z));
  inst.rho = j.at("rho").get<int>();
  inst.collapsed = j.at("collapsed").get<bool>();
  return inst;
}

}  // namespace isoadd
