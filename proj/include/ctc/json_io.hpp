#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "ctc/scalar.hpp"

namespace ctc {

/// Parses a JSON file.  ParseError carries the path and the parser's line/column.
nlohmann::json read_json(const std::filesystem::path& path);

/// A string literal in the field's syntax or a JSON integer.
Scalar parse_literal(const nlohmann::json& value, const FieldSpec& field, const std::string& where);

/// {"kind": "rational"} | {"kind": "prime", "p": p} | {"kind": "cyclotomic", "n": n}
FieldSpec parse_field(const nlohmann::json& j, const std::string& where);
nlohmann::json field_to_json(const FieldSpec& field);

}  // namespace ctc
