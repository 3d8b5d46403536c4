#pragma once

#include <string>

#include <json.hpp>

#include "quatsq/gtable.hpp"
#include "quatsq/obstruction.hpp"
#include "quatsq/quaternion.hpp"

// Canonical JSON forms used by the CLI and by golden-file tests. nlohmann
// objects keep keys sorted, so dump() output is byte-stable.

namespace quatsq {

nlohmann::json quaternion_json(const Quaternion& q);
nlohmann::json decomposition_json(const Decomposition& d);
nlohmann::json gbounds_json(const GValueBounds& g);
nlohmann::json certificate_json(const ObstructionCertificate& cert);

// Rebuilds the query of a serialized certificate so it can be replayed.
ObstructionQuery query_from_json(const nlohmann::json& j);

}  // namespace quatsq
