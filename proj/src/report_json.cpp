#include "wcolab/report_json.hpp"

#include <cmath>

namespace wcolab {

namespace {

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json to_json(Complex z) { return Json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

Json to_json(const GridConfig& cfg) {
  return Json{{"n_theta", cfg.n_theta}, {"n_radial", cfg.n_radial}, {"r_max", cfg.r_max}};
}

Json to_json(const NormBreakdown& nb) {
  return Json{{"total", number(nb.total)},
              {"point_part", number(nb.point_part)},
              {"seminorm_part", number(nb.seminorm_part)},
              {"has_a6_form", nb.has_a6_form}};
}

Json to_json(const MoebiusMap& m) {
  return Json{{"a", to_json(m.a())}, {"lambda", to_json(m.lambda())}, {"expr", Expr::moebius(m).to_string()}};
}

Json to_json(const AutomorphismFit& fit) {
  Json j{{"found", fit.found}, {"zero_count", fit.zero_count}, {"residual", number(fit.residual)}};
  j["map"] = fit.map ? to_json(*fit.map) : Json(nullptr);
  return j;
}

Json to_json(const MultiplierVerdict& v) {
  return Json{{"status", to_string(v.status)},
              {"measured_constant", number(v.measured_constant)},
              {"criterion", v.criterion}};
}

Json to_json(const InvertibilityReport& rep) {
  Json j;
  j["verdict"] = to_string(rep.verdict);
  j["automorphism"] = to_json(rep.automorphism);
  j["nonvanishing"] = rep.nonvanishing;
  j["min_modulus"] = number(rep.min_modulus);
  j["F_zero_count"] = rep.F_zero_count;
  j["reciprocal_multiplier"] = rep.reciprocal_multiplier ? to_json(*rep.reciprocal_multiplier) : Json(nullptr);
  if (rep.inverse_symbols)
    j["inverse_symbols"] = Json{{"G", rep.inverse_symbols->first.to_string()},
                                {"psi", rep.inverse_symbols->second.to_string()}};
  else
    j["inverse_symbols"] = nullptr;
  j["roundtrip_residual"] = rep.roundtrip_residual ? number(*rep.roundtrip_residual) : Json(nullptr);
  Json sections = Json::array();
  for (const auto& [n, c] : rep.section_condition_numbers)
    sections.push_back(Json{{"N", n}, {"condition_number", number(c)}});
  j["section_condition_numbers"] = std::move(sections);
  j["caveat"] = rep.caveat;
  return j;
}

Json to_json(const IsometryReport& rep) {
  return Json{{"surjective_isometry", rep.surjective_isometry},
              {"F_is_unimodular_const", rep.F_is_unimodular_const},
              {"phi_is_rotation", rep.phi_is_rotation},
              {"measured_defect", number(rep.measured_defect)},
              {"phi_origin_value", to_json(rep.phi_origin_value)}};
}

Json to_json(const AxiomReport& rep) {
  Json measured = Json::object();
  for (const auto& [k, v] : rep.measured) measured[k] = number(v);
  return Json{{"axiom", rep.axiom},
              {"space", rep.space.to_string()},
              {"passed", rep.passed},
              {"unsupported", rep.unsupported},
              {"measured", std::move(measured)},
              {"witnesses", rep.witnesses}};
}

Json to_json(const std::vector<AxiomReport>& reps) {
  Json out = Json::array();
  for (const AxiomReport& r : reps) out.push_back(to_json(r));
  return out;
}

Json envelope(const std::string& command, const std::string& space, Json inputs, Json result) {
  Json j;
  j["command"] = command;
  j["space"] = space.empty() ? Json(nullptr) : Json(space);
  j["inputs"] = std::move(inputs);
  j["result"] = std::move(result);
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace wcolab
