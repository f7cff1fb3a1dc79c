#pragma once

#include <json.hpp>

#include "octabasic/polyring.hpp"

namespace octabasic {

// Array of {"coeff": "<decimal>", "exps": {"<var>": <int>, ...}} in canonical
// term order. Zero exponents are omitted.
nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace octabasic
