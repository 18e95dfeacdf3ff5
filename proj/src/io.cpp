#include "ctc/io.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "ctc/json_io.hpp"

namespace ctc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  const auto e = s.find_last_not_of(' ');
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

Label find_label(const CategorySpec& cat, const std::string& name, const std::string& where) {
  for (Label a = 0; a < cat.label_count(); ++a)
    if (cat.label_name(a) == name) return a;
  raise(ErrorCode::ParseError, where + ": unknown label '" + name + "'");
}

template <class F>
auto guarded(const std::string& where, F&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, where + ": " + e.what());
  }
}

}  // namespace

CategoryPtr load_category(const std::filesystem::path& path) {
  static std::mutex lock;
  static std::map<std::filesystem::path, CategoryPtr> cache;
  std::error_code ec;
  auto key = std::filesystem::weakly_canonical(path, ec);
  if (ec) key = path;
  std::lock_guard guard(lock);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, CategorySpec::load(path)).first;
  return it->second;
}

Obj parse_object(const nlohmann::json& j, const CategoryPtr& cat, const std::string& where) {
  std::vector<std::uint32_t> mult(cat->label_count(), 0);
  if (j.is_object()) {
    for (const auto& [name, k] : j.items()) mult[find_label(*cat, name, where)] += k.get<std::uint32_t>();
    return Obj(cat, mult);
  }
  const auto text = trim(j.get<std::string>());
  if (text == "0") return Obj(cat, mult);
  for (const auto& term : split(text, '+')) {
    const auto star = term.find('*');
    std::uint32_t k = 1;
    std::string name = term;
    if (star != std::string::npos) {
      try {
        k = static_cast<std::uint32_t>(std::stoul(term.substr(0, star)));
      } catch (const std::exception&) {
        raise(ErrorCode::ParseError, where + ": bad multiplicity in '" + term + "'");
      }
      name = trim(term.substr(star + 1));
    }
    mult[find_label(*cat, name, where)] += k;
  }
  return Obj(cat, mult);
}

AlgebraPtr load_algebra(const std::filesystem::path& path) {
  const auto doc = read_json(path);
  const std::string where = path.string();
  return guarded(where, [&] {
    const auto cat = load_category(path.parent_path() / doc.at("category").get<std::string>());
    const std::string name = doc.value("name", path.stem().string());
    AlgebraObject alg;
    if (doc.contains("group")) {
      const auto& g = doc.at("group");
      alg = group_algebra(g.contains("cyclic") ? GroupTable::cyclic(g.at("cyclic").get<std::size_t>())
                                               : GroupTable::from_json(g),
                          cat, name);
    } else if (doc.contains("subgroup")) {
      std::vector<Label> labels;
      for (const auto& l : doc.at("subgroup")) labels.push_back(find_label(*cat, l.get<std::string>(), where));
      alg = subgroup_algebra(labels, cat, name);
    } else {
      alg.name = name;
      alg.A = parse_object(doc.at("object"), cat, where);
      alg.mu = mor_from_json(tensor_obj(alg.A, alg.A), alg.A, doc.at("mu"));
      alg.iota = mor_from_json(Obj::unit(cat), alg.A, doc.at("iota"));
      if (doc.contains("counit")) alg.counit = mor_from_json(alg.A, Obj::unit(cat), doc.at("counit"));
    }
    return std::make_shared<const AlgebraObject>(complete_structure(std::move(alg)));
  });
}

AModule load_module(const std::filesystem::path& path) {
  const auto doc = read_json(path);
  const std::string where = path.string();
  return guarded(where, [&] {
    const auto alg = load_algebra(path.parent_path() / doc.at("algebra").get<std::string>());
    const Obj x = parse_object(doc.at("object"), alg->category(), where);
    const Mor mu = mor_from_json(tensor_obj(alg->A, x), x, doc.at("muX"));
    return AModule{alg, x, mu, doc.value("name", path.stem().string())};
  });
}

AModule resolve_module(const AlgebraPtr& alg, const std::string& spec, const std::filesystem::path& base) {
  const auto parts = split(spec, '+');
  if (parts.size() > 1) {
    std::vector<AModule> ms;
    for (const auto& p : parts) ms.push_back(resolve_module(alg, p, base));
    AModule sum = module_direct_sum(ms);
    sum.name = spec;
    return sum;
  }
  const auto& cat = alg->category();
  if (spec == "regular") return regular_module(alg);
  if (spec == "trivial") {
    AModule m = character_module(alg, std::vector<Scalar>(alg->A.total(), Scalar::one(alg->field())), "trivial");
    return m;
  }
  if (spec.rfind("free:", 0) == 0) {
    const auto k = std::stoul(spec.substr(5));
    if (k == 0) raise(ErrorCode::InvalidArgument, "free module of rank 0");
    AModule m = module_direct_sum(std::vector<AModule>(k, regular_module(alg)));
    m.name = spec;
    return m;
  }
  if (spec.rfind("induce:", 0) == 0) {
    AModule m = induce(alg, Obj::simple(cat, find_label(*cat, spec.substr(7), spec)));
    m.name = spec;
    return m;
  }
  if (spec.rfind("character:", 0) == 0) {
    std::vector<Scalar> chi;
    for (const auto& v : split(spec.substr(10), ',')) chi.push_back(Scalar::parse(v, alg->field()));
    return character_module(alg, chi, spec);
  }
  if (spec.size() > 5 && spec.substr(spec.size() - 5) == ".json") {
    AModule m = load_module(base / spec);
    if (m.alg->A != alg->A || m.alg->mu != alg->mu || m.alg->iota != alg->iota)
      raise(ErrorCode::AlgebraMismatch, spec + " is over a different algebra");
    m.alg = alg;
    return m;
  }
  raise(ErrorCode::InvalidArgument, "unknown module '" + spec + "'");
}

}  // namespace ctc
