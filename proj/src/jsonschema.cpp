#include "ramsey/jsonschema.hpp"

#include <regex>

namespace ramsey::jsonschema {

namespace {

using nlohmann::json;

bool type_matches(const std::string& t, const json& v) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

void check(const json& schema, const json& value, const std::string& path,
           std::vector<std::string>& problems) {
  if (schema.contains("type")) {
    const json& t = schema["type"];
    bool ok = false;
    if (t.is_string()) {
      ok = type_matches(t.get<std::string>(), value);
    } else {
      for (const auto& alt : t) ok = ok || type_matches(alt.get<std::string>(), value);
    }
    if (!ok) {
      problems.push_back(path + ": expected type " + t.dump() + ", got " +
                         std::string(value.type_name()));
      return;
    }
  }
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& alt : schema["enum"]) ok = ok || alt == value;
    if (!ok) problems.push_back(path + ": value " + value.dump() + " not in enum");
  }
  if (schema.contains("minimum") && value.is_number()) {
    if (value.get<double>() < schema["minimum"].get<double>())
      problems.push_back(path + ": below minimum " + schema["minimum"].dump());
  }
  if (value.is_object()) {
    if (schema.contains("required")) {
      for (const auto& key : schema["required"]) {
        if (!value.contains(key.get<std::string>()))
          problems.push_back(path + ": missing required key '" + key.get<std::string>() + "'");
      }
    }
    const json props = schema.value("properties", json::object());
    const json pat_props = schema.value("patternProperties", json::object());
    for (const auto& [key, sub] : value.items()) {
      if (props.contains(key)) {
        check(props[key], sub, path + "." + key, problems);
        continue;
      }
      bool matched = false;
      for (const auto& [pattern, pschema] : pat_props.items()) {
        if (std::regex_search(key, std::regex(pattern))) {
          check(pschema, sub, path + "." + key, problems);
          matched = true;
          break;
        }
      }
      if (!matched && schema.contains("additionalProperties") &&
          schema["additionalProperties"].is_boolean() &&
          !schema["additionalProperties"].get<bool>()) {
        problems.push_back(path + ": unexpected key '" + key + "'");
      }
    }
  }
  if (value.is_array() && schema.contains("items")) {
    int i = 0;
    for (const auto& item : value) {
      check(schema["items"], item, path + "[" + std::to_string(i++) + "]", problems);
    }
  }
}

}  // namespace

std::vector<std::string> validate(const nlohmann::json& schema, const nlohmann::json& value) {
  std::vector<std::string> problems;
  check(schema, value, "$", problems);
  return problems;
}

}  // namespace ramsey::jsonschema
