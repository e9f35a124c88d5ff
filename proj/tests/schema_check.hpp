#pragma once

// Minimal validator for the JSON-schema subset the shipped schemas use:
// type (including a list of types), required, properties, items, enum.
// Unknown object keys are accepted.

#include <json.hpp>

#include <string>

namespace embtop::testing {

using nlohmann::json;

inline bool type_matches(const json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline bool validate_schema(const json& value, const json& schema, std::string* why) {
    if (schema.contains("type")) {
        const auto& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(value, t.get<std::string>());
        } else {
            for (const auto& alt : t)
                if (type_matches(value, alt.get<std::string>())) ok = true;
        }
        if (!ok) {
            if (why) *why = "type mismatch, value " + value.dump();
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& alt : schema["enum"])
            if (alt == value) found = true;
        if (!found) {
            if (why) *why = "enum mismatch: " + value.dump();
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required")) {
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    if (why) *why = "missing required key " + key.get<std::string>();
                    return false;
                }
        }
        if (schema.contains("properties")) {
            for (const auto& [key, sub] : schema["properties"].items())
                if (value.contains(key) && !validate_schema(value[key], sub, why)) {
                    if (why) *why = key + ": " + *why;
                    return false;
                }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& element : value)
            if (!validate_schema(element, schema["items"], why)) {
                if (why) *why = "item: " + *why;
                return false;
            }
    }
    return true;
}

}  // namespace embtop::testing
