#pragma once

#include <string>
#include <string_view>

#include <json.hpp>
#include "css/core.hpp"

namespace css {

inline constexpr std::string_view kSchemaVersion = "1";

/// Parses and validates a document. Throws MalformedJson, MalformedDocument,
/// value errors located at the failing (parameter, element), MissingGrade,
/// DuplicateParameter/DuplicateElement, UnknownParameter/UnknownElement.
CubicSoftSet load_cubic_soft_set(std::string_view text);

CubicSoftSet from_json(const nlohmann::json& doc);
nlohmann::json to_json(const CubicSoftSet& set);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string serialize(const CubicSoftSet& set);

CubicSoftSet load_file(const std::string& path);
void save_file(const CubicSoftSet& set, const std::string& path);

}  // namespace css
