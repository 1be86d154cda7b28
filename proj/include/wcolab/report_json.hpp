#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "wcolab/axioms.hpp"
#include "wcolab/characterization.hpp"
#include "wcolab/spaces.hpp"

namespace wcolab {

/// Insertion-ordered so that identical reports serialize byte-identically.
using Json = nlohmann::ordered_json;

/// {"re": x, "im": y}
Json to_json(Complex z);
Json to_json(const GridConfig& cfg);
Json to_json(const NormBreakdown& nb);
Json to_json(const MoebiusMap& m);
Json to_json(const AutomorphismFit& fit);
Json to_json(const MultiplierVerdict& v);
Json to_json(const InvertibilityReport& rep);
Json to_json(const IsometryReport& rep);
Json to_json(const AxiomReport& rep);
Json to_json(const std::vector<AxiomReport>& reps);

/// {"command", "space", "inputs", "result"}
Json envelope(const std::string& command, const std::string& space, Json inputs, Json result);

/// Two-space indented dump with a trailing newline. Non-finite numbers become null.
std::string dump(const Json& j);

}  // namespace wcolab
