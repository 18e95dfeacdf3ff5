#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ctc/scalar.hpp"

namespace ctc {

/// dim(lhs) = sum_k coefficient_k dim(symbol_k), from an exact sequence or a
/// composition series.
struct LedgerRelation {
  std::string lhs;
  std::map<std::string, long> rhs;
};

struct LedgerProblem {
  FieldSpec field;
  std::vector<std::string> symbols;
  std::vector<LedgerRelation> relations;
  std::vector<std::pair<std::string, Scalar>> knowns;  // may repeat a symbol
  std::set<std::string> projectives;                   // dim forced to 0
  std::vector<std::string> query;                      // empty: every symbol

  /// {"field"?, "symbols", "relations": [{"lhs", "rhs": {sym: int}}],
  ///  "knowns": {sym: literal} or [[sym, literal], ...], "projectives", "query"?}
  static LedgerProblem from_json(const nlohmann::json& doc, const std::string& origin = "ledger");
  static LedgerProblem load(const std::filesystem::path& path);
};

/// Exact elimination over the problem's field.  Underdetermined names the
/// queried symbols left free; Inconsistent names the first equation that
/// cannot be satisfied together with the ones before it.
std::map<std::string, Scalar> solve_dims(const LedgerProblem& p);

}  // namespace ctc
