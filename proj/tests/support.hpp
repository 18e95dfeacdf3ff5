#pragma once

#include <filesystem>
#include <string>

#include "ctc/io.hpp"

#ifndef CTC_DATA_DIR
#define CTC_DATA_DIR "data"
#endif

namespace testing {

inline std::filesystem::path data(const std::string& rel) { return std::filesystem::path(CTC_DATA_DIR) / rel; }

inline ctc::CategoryPtr category(const std::string& name) {
  return ctc::load_category(data("categories/" + name + ".json"));
}

inline ctc::AlgebraPtr algebra(const std::string& name) { return ctc::load_algebra(data("algebras/" + name + ".json")); }

inline ctc::AlgebraPtr share(ctc::AlgebraObject a) {
  return std::make_shared<const ctc::AlgebraObject>(ctc::complete_structure(std::move(a)));
}

inline ctc::Scalar lit(const std::string& s, const ctc::FieldSpec& f) { return ctc::Scalar::parse(s, f); }

inline ctc::Matrix mat(const ctc::FieldSpec& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<ctc::Scalar>> rs;
  for (const auto& r : rows) {
    rs.emplace_back();
    for (const char* s : r) rs.back().push_back(lit(s, f));
  }
  return ctc::Matrix::from_rows(f, rs);
}

}  // namespace testing
