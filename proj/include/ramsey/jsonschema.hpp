#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace ramsey::jsonschema {

// Validates a value against the subset of JSON Schema the repo's schemas
// use: type, properties, required, items, enum, additionalProperties
// (boolean), patternProperties, minimum. Returns human-readable problems,
// empty on success.
std::vector<std::string> validate(const nlohmann::json& schema, const nlohmann::json& value);

}  // namespace ramsey::jsonschema
