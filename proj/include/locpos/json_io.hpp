#pragma once

#include <json.hpp>

#include "locpos/certify.hpp"
#include "locpos/newton.hpp"
#include "locpos/refute.hpp"

namespace locpos {

nlohmann::json polytope_to_json(const NewtonPolytope& np, const std::vector<Face>& faces);

nlohmann::json witness_to_json(const Witness& witness);

// Certificate report: verdict, principal part, per-orthant constants,
// anchors, tail count, radius, reason and witness when present.
nlohmann::json verdict_to_json(const Verdict& verdict);

}  // namespace locpos
