// Small helpers for schema-checked reading of nlohmann::json documents.
#pragma once

#include <string>
#include <string_view>

#include "atmp/instance.hpp"
#include "json.hpp"

namespace atmp::detail {

using json = nlohmann::json;

inline json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("malformed document: ") + e.what());
  }
}

inline std::string child_path(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

inline std::string child_path(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

inline const json& require(const json& object, std::string_view key, const std::string& path) {
  if (!object.is_object()) throw SchemaError(path, "expected an object");
  auto it = object.find(std::string(key));
  if (it == object.end()) {
    throw SchemaError(child_path(path, key), "missing required field \"" + std::string(key) + "\"");
  }
  return *it;
}

inline const json& require_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw SchemaError(path, "expected an array");
  return value;
}

inline const json& require_array(const json& value, std::size_t size, const std::string& path) {
  require_array(value, path);
  if (value.size() != size) {
    throw SchemaError(path, "expected " + std::to_string(size) + " elements, got " + std::to_string(value.size()));
  }
  return value;
}

inline double as_number(const json& value, const std::string& path) {
  if (!value.is_number()) throw SchemaError(path, "expected a number");
  return value.get<double>();
}

inline int as_int(const json& value, const std::string& path) {
  if (!value.is_number_integer()) throw SchemaError(path, "expected an integer");
  return value.get<int>();
}

inline bool as_bit(const json& value, const std::string& path) {
  if (value.is_boolean()) return value.get<bool>();
  if (value.is_number_integer()) {
    const auto v = value.get<long long>();
    if (v == 0 || v == 1) return v == 1;
  }
  throw SchemaError(path, "expected 0 or 1");
}

}  // namespace atmp::detail
