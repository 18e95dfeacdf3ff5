#include "ctc/json_io.hpp"

#include <fstream>

namespace ctc {

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::ParseError, path.string() + ": cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

Scalar parse_literal(const nlohmann::json& value, const FieldSpec& field, const std::string& where) {
  try {
    if (value.is_string()) return Scalar::parse(value.get<std::string>(), field);
    if (value.is_number_integer()) return Scalar::from_int(field, value.get<long>());
  } catch (const Error& e) {
    raise(ErrorCode::ParseError, where + ": " + e.what());
  }
  raise(ErrorCode::ParseError, where + ": scalar must be a string literal or an integer");
}

FieldSpec parse_field(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("kind")) raise(ErrorCode::ParseError, where + ": field must be an object with 'kind'");
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldSpec::rational();
    if (kind == "prime") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    if (kind == "cyclotomic") return FieldSpec::cyclotomic(j.at("n").get<std::uint32_t>());
    raise(ErrorCode::ParseError, where + ": unknown field kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, where + ": " + e.what());
  }
}

nlohmann::json field_to_json(const FieldSpec& field) {
  switch (field.kind()) {
    case FieldKind::rational: return {{"kind", "rational"}};
    case FieldKind::prime: return {{"kind", "prime"}, {"p", field.param()}};
    case FieldKind::cyclotomic: return {{"kind", "cyclotomic"}, {"n", field.param()}};
  }
  return {};
}

}  // namespace ctc
