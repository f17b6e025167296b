#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "homakivis/check.hpp"
#include "homakivis/classify.hpp"

namespace homakivis {

std::string_view tool_version();

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// {"holds": ..., "witness": {"indices", "names", "lhs", "rhs"}, "parts": {...}}.
/// Sample witnesses carry "arguments" (coordinate lists) instead of indices.
nlohmann::ordered_json report_json(const CheckReport& r, const std::vector<std::string>& basis_names);

/// {"properties": {...}, "provenance": {"tool", "version", "input_sha256"}}.
nlohmann::ordered_json report_json(const Classification& c, const std::vector<std::string>& basis_names,
                                   std::string_view input_bytes);

/// Two-space indentation and a trailing newline.
std::string dump(const nlohmann::ordered_json& doc);

}  // namespace homakivis
