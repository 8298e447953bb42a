#pragma once

#include <json.hpp>

#include <regex>
#include <string>

// Minimal JSON-Schema checker covering exactly the subset the shipped
// schema uses: type, required, properties, additionalProperties:false,
// items, enum, pattern, oneOf, minItems/maxItems, and local $ref into
// #/definitions. The python smoke tests re-validate with a full
// implementation; this keeps the C++ suite self-contained.
namespace umbral::testing {

class SchemaChecker {
  public:
    explicit SchemaChecker(nlohmann::json schema) : root_(std::move(schema)) {}

    bool validate(const nlohmann::json& value) const { return check(root_, value); }

  private:
    nlohmann::json resolve(const nlohmann::json& schema) const {
        if (schema.contains("$ref")) {
            const std::string ref = schema.at("$ref").get<std::string>();
            const std::string prefix = "#/definitions/";
            if (ref.rfind(prefix, 0) != 0) return schema;
            return root_.at("definitions").at(ref.substr(prefix.size()));
        }
        return schema;
    }

    bool check(const nlohmann::json& raw_schema, const nlohmann::json& value) const {
        const nlohmann::json schema = resolve(raw_schema);

        if (schema.contains("oneOf")) {
            int hits = 0;
            for (const auto& option : schema.at("oneOf")) {
                if (check(option, value)) ++hits;
            }
            if (hits != 1) return false;
        }

        if (schema.contains("type")) {
            const std::string type = schema.at("type").get<std::string>();
            if (type == "object" && !value.is_object()) return false;
            if (type == "array" && !value.is_array()) return false;
            if (type == "string" && !value.is_string()) return false;
            if (type == "integer" && !value.is_number_integer()) return false;
            if (type == "boolean" && !value.is_boolean()) return false;
        }

        if (schema.contains("enum")) {
            bool found = false;
            for (const auto& candidate : schema.at("enum")) {
                if (candidate == value) found = true;
            }
            if (!found) return false;
        }

        if (schema.contains("pattern") && value.is_string()) {
            const std::regex re(schema.at("pattern").get<std::string>());
            if (!std::regex_search(value.get<std::string>(), re)) return false;
        }

        if (value.is_object()) {
            if (schema.contains("required")) {
                for (const auto& key : schema.at("required")) {
                    if (!value.contains(key.get<std::string>())) return false;
                }
            }
            const bool sealed = schema.contains("additionalProperties") &&
                                schema.at("additionalProperties") == false;
            for (const auto& [key, member] : value.items()) {
                const bool declared =
                    schema.contains("properties") && schema.at("properties").contains(key);
                if (declared) {
                    if (!check(schema.at("properties").at(key), member)) return false;
                } else if (sealed) {
                    return false;
                }
            }
        }

        if (value.is_array()) {
            if (schema.contains("minItems") && value.size() < schema.at("minItems").get<std::size_t>())
                return false;
            if (schema.contains("maxItems") && value.size() > schema.at("maxItems").get<std::size_t>())
                return false;
            if (schema.contains("items")) {
                for (const auto& element : value) {
                    if (!check(schema.at("items"), element)) return false;
                }
            }
        }

        return true;
    }

    nlohmann::json root_;
};

}  // namespace umbral::testing
