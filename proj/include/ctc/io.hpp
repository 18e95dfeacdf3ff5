#pragma once

#include <filesystem>
#include <string>

#include "ctc/module.hpp"

namespace ctc {

/// CategorySpec::load, memoized by canonical path so that files naming the
/// same category share one instance (objects compare by category identity).
CategoryPtr load_category(const std::filesystem::path& path);

/// "0", "1 + 2*e", or {"e": 2}.
Obj parse_object(const nlohmann::json& j, const CategoryPtr& cat, const std::string& where);

/// Algebra file: {"name"?, "category": path relative to the file, and one of
///   "group": {"cyclic": n} | {"elements", "table"},
///   "subgroup": [label, ...],
///   "object", "mu", "iota", "counit"? (blocks as in to_json(Mor))}.
/// The result has its coevaluation and index filled in when they exist.
AlgebraPtr load_algebra(const std::filesystem::path& path);

/// Module file: {"name"?, "algebra": path relative to the file, "object", "muX"}.
AModule load_module(const std::filesystem::path& path);

/// A module named in a suite manifest:
///   regular | trivial | free:k | induce:<label> | character:v0,v1,...
///   | <name>.json (relative to `base`) | sums of these joined by '+'.
AModule resolve_module(const AlgebraPtr& alg, const std::string& spec, const std::filesystem::path& base);

}  // namespace ctc
