// Just enough of a draft-07 evaluator to check report rows against the shipped
// schema: local $ref, oneOf/anyOf, const, enum, type, object and array
// keywords, minimum. Not a general validator.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace lapmatch::testing {

using schema_json = nlohmann::ordered_json;

class SchemaValidator {
public:
    explicit SchemaValidator(schema_json root) : root_(std::move(root)) {}

    bool validate(const schema_json& instance) const { return check(root_, instance); }

    bool validate_against(const std::string& definition, const schema_json& instance) const {
        return check(root_.at("definitions").at(definition), instance);
    }

private:
    static bool matches_type(const std::string& type, const schema_json& v) {
        if (type == "object") return v.is_object();
        if (type == "array") return v.is_array();
        if (type == "string") return v.is_string();
        if (type == "boolean") return v.is_boolean();
        if (type == "null") return v.is_null();
        if (type == "integer") return v.is_number_integer() || v.is_number_unsigned();
        if (type == "number") return v.is_number();
        throw std::logic_error("unknown schema type " + type);
    }

    const schema_json& resolve(const schema_json& schema) const {
        if (!schema.is_object() || !schema.contains("$ref")) return schema;
        const std::string ref = schema.at("$ref").get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) throw std::logic_error("unsupported $ref " + ref);
        return root_.at("definitions").at(ref.substr(prefix.size()));
    }

    bool check(const schema_json& raw, const schema_json& v) const {
        const schema_json& schema = resolve(raw);
        if (schema.contains("oneOf")) {
            int hits = 0;
            for (const auto& sub : schema.at("oneOf")) hits += check(sub, v) ? 1 : 0;
            if (hits != 1) return false;
        }
        if (schema.contains("anyOf")) {
            bool hit = false;
            for (const auto& sub : schema.at("anyOf")) hit = hit || check(sub, v);
            if (!hit) return false;
        }
        if (schema.contains("const") && schema.at("const") != v) return false;
        if (schema.contains("enum")) {
            bool found = false;
            for (const auto& allowed : schema.at("enum")) found = found || allowed == v;
            if (!found) return false;
        }
        if (schema.contains("type")) {
            const schema_json& t = schema.at("type");
            bool ok = false;
            if (t.is_string()) {
                ok = matches_type(t.get<std::string>(), v);
            } else {
                for (const auto& one : t) ok = ok || matches_type(one.get<std::string>(), v);
            }
            if (!ok) return false;
        }
        if (v.is_number() && schema.contains("minimum") &&
            v.get<double>() < schema.at("minimum").get<double>())
            return false;
        if (v.is_object()) {
            if (schema.contains("required"))
                for (const auto& key : schema.at("required"))
                    if (!v.contains(key.get<std::string>())) return false;
            const schema_json* props =
                schema.contains("properties") ? &schema.at("properties") : nullptr;
            for (const auto& [key, value] : v.items()) {
                if (props && props->contains(key)) {
                    if (!check(props->at(key), value)) return false;
                } else if (schema.contains("additionalProperties")) {
                    const schema_json& extra = schema.at("additionalProperties");
                    if (extra.is_boolean()) {
                        if (!extra.get<bool>()) return false;
                    } else if (!check(extra, value)) {
                        return false;
                    }
                }
            }
        }
        if (v.is_array()) {
            if (schema.contains("minItems") && v.size() < schema.at("minItems").get<std::size_t>())
                return false;
            if (schema.contains("maxItems") && v.size() > schema.at("maxItems").get<std::size_t>())
                return false;
            if (schema.contains("items"))
                for (const auto& item : v)
                    if (!check(schema.at("items"), item)) return false;
        }
        return true;
    }

    schema_json root_;
};

} // namespace lapmatch::testing
