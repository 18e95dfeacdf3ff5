#include "ctc/category.hpp"

#include <set>
#include <sstream>

#include "ctc/json_io.hpp"
#include "ctc/matrix.hpp"

namespace ctc {

namespace {

std::vector<std::string> split_key(const std::string& key) {
  std::vector<std::string> parts;
  std::stringstream ss(key);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return parts;
}

}  // namespace

Label CategorySpec::label(const std::string& name) const {
  for (Label a = 0; a < labels_.size(); ++a)
    if (labels_[a] == name) return a;
  raise(ErrorCode::InvalidArgument, "category '" + name_ + "' has no label '" + name + "'");
}

CategoryPtr CategorySpec::from_json(const nlohmann::json& doc, const std::string& origin) {
  std::shared_ptr<CategorySpec> cat(new CategorySpec());
  try {
    cat->name_ = doc.value("name", std::string("unnamed"));
    cat->field_ = parse_field(doc.at("field"), origin);
    cat->labels_ = doc.at("labels").get<std::vector<std::string>>();
    cat->n_ = cat->labels_.size();
    if (cat->n_ == 0) raise(ErrorCode::InvalidCategory, origin + ": no labels");
    if (std::set<std::string>(cat->labels_.begin(), cat->labels_.end()).size() != cat->n_)
      raise(ErrorCode::InvalidCategory, origin + ": duplicate label names");
    const std::size_t n = cat->n_;
    const FieldSpec field = cat->field_;
    const auto lab = [&](const std::string& s) {
      for (Label a = 0; a < n; ++a)
        if (cat->labels_[a] == s) return a;
      raise(ErrorCode::InvalidCategory, origin + ": unknown label '" + s + "'");
    };
    cat->unit_ = lab(doc.at("unit").get<std::string>());

    cat->dual_.assign(n, n);
    if (doc.contains("dual")) {
      for (const auto& [k, v] : doc.at("dual").items()) cat->dual_[lab(k)] = lab(v.get<std::string>());
    }
    for (Label a = 0; a < n; ++a)
      if (cat->dual_[a] == n) raise(ErrorCode::InvalidCategory, origin + ": missing dual of '" + cat->labels_[a] + "'");

    cat->fusion_.assign(n * n * n, 0);
    for (const auto& triple : doc.at("fusion")) {
      const auto t = triple.get<std::vector<std::string>>();
      if (t.size() != 3) raise(ErrorCode::InvalidCategory, origin + ": fusion entries are [a,b,c]");
      char& slot = cat->fusion_[(lab(t[0]) * n + lab(t[1])) * n + lab(t[2])];
      if (slot) raise(ErrorCode::InvalidCategory, origin + ": fusion multiplicity > 1 for " + t[0] + "," + t[1] + "," + t[2]);
      slot = 1;
    }

    cat->F_.assign(n * n * n * n * n * n, Scalar::zero(field));
    for (Label a = 0; a < n; ++a)
      for (Label b = 0; b < n; ++b)
        for (Label c = 0; c < n; ++c)
          for (Label d = 0; d < n; ++d)
            for (Label e = 0; e < n; ++e)
              for (Label f = 0; f < n; ++f)
                if (cat->admissible(a, b, e) && cat->admissible(e, c, d) && cat->admissible(b, c, f) &&
                    cat->admissible(a, f, d))
                  cat->F_[cat->index6(a, b, c, d, e, f)] = Scalar::one(field);
    if (doc.contains("F")) {
      for (const auto& [key, v] : doc.at("F").items()) {
        const auto parts = split_key(key);
        if (parts.size() != 6) raise(ErrorCode::ParseError, origin + ": F key '" + key + "' needs 6 labels");
        const auto idx = cat->index6(lab(parts[0]), lab(parts[1]), lab(parts[2]), lab(parts[3]), lab(parts[4]), lab(parts[5]));
        if (cat->F_[idx].is_zero())
          raise(ErrorCode::InvalidCategory, origin + ": F entry '" + key + "' is not admissible");
        cat->F_[idx] = parse_literal(v, field, origin + " F[" + key + "]");
      }
    }

    cat->R_.assign(n * n * n, Scalar::zero(field));
    for (std::size_t i = 0; i < cat->fusion_.size(); ++i)
      if (cat->fusion_[i]) cat->R_[i] = Scalar::one(field);
    if (doc.contains("R")) {
      for (const auto& [key, v] : doc.at("R").items()) {
        const auto parts = split_key(key);
        if (parts.size() != 3) raise(ErrorCode::ParseError, origin + ": R key '" + key + "' needs 3 labels");
        const auto idx = (lab(parts[0]) * n + lab(parts[1])) * n + lab(parts[2]);
        if (!cat->fusion_[idx]) raise(ErrorCode::InvalidCategory, origin + ": R entry '" + key + "' is not admissible");
        cat->R_[idx] = parse_literal(v, field, origin + " R[" + key + "]");
      }
    }

    cat->twist_.assign(n, Scalar::one(field));
    cat->pivot_.assign(n, Scalar::one(field));
    if (doc.contains("twist"))
      for (const auto& [k, v] : doc.at("twist").items())
        cat->twist_[lab(k)] = parse_literal(v, field, origin + " twist[" + k + "]");
    if (doc.contains("pivot"))
      for (const auto& [k, v] : doc.at("pivot").items())
        cat->pivot_[lab(k)] = parse_literal(v, field, origin + " pivot[" + k + "]");
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, origin + ": " + e.what());
  }
  cat->finalize(origin);
  return cat;
}

void CategorySpec::finalize(const std::string& origin) {
  const std::size_t n = n_;
  const auto fail = [&](const std::string& why) { raise(ErrorCode::InvalidCategory, origin + ": " + why); };
  for (Label a = 0; a < n; ++a) {
    if (dual_[dual_[a]] != a) fail("dual is not an involution at '" + labels_[a] + "'");
    if (!admissible(unit_, a, a) || !admissible(a, unit_, a)) fail("unit fusion missing for '" + labels_[a] + "'");
    if (!admissible(a, dual_[a], unit_)) fail("(a, a*, 1) not admissible for '" + labels_[a] + "'");
    for (Label b = 0; b < n; ++b) {
      if (b != a && (admissible(unit_, a, b) || admissible(a, unit_, b)))
        fail("unit fuses to a different label at '" + labels_[a] + "'");
      if (b != dual_[a] && admissible(a, b, unit_)) fail("'" + labels_[a] + "' has two duals");
    }
  }
  if (!twist_[unit_].is_one()) fail("twist of the unit must be 1");
  if (!pivot_[unit_].is_one()) fail("pivot of the unit must be 1");
  for (Label a = 0; a < n; ++a)
    if (pivot_[a].is_zero()) fail("pivot of '" + labels_[a] + "' is zero");

  channels_.assign(n * n, {});
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        if (admissible(a, b, c)) channels_[a * n + b].push_back(c);

  F_inv_.assign(F_.size(), Scalar::zero(field_));
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d) {
          std::vector<Label> es, fs;
          for (Label x = 0; x < n; ++x) {
            if (admissible(a, b, x) && admissible(x, c, d)) es.push_back(x);
            if (admissible(b, c, x) && admissible(a, x, d)) fs.push_back(x);
          }
          if (es.size() != fs.size())
            fail("fusion rules are not associative at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + "," +
                 labels_[d] + ")");
          if (es.empty()) continue;
          Matrix block(field_, es.size(), fs.size());
          for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < fs.size(); ++j) {
              const Scalar& v = F_[index6(a, b, c, d, es[i], fs[j])];
              if (v.is_zero()) fail("zero F entry");
              block(i, j) = v;
            }
          Matrix inv;
          try {
            inv = inverse(block);
          } catch (const Error&) {
            fail("singular F-block at (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + "," + labels_[d] + ")");
          }
          for (std::size_t j = 0; j < fs.size(); ++j)
            for (std::size_t i = 0; i < es.size(); ++i) F_inv_[index6(a, b, c, d, fs[j], es[i])] = inv(j, i);
        }
  for (std::size_t i = 0; i < R_.size(); ++i)
    if (fusion_[i] && R_[i].is_zero()) fail("zero R entry");
}

CategoryPtr CategorySpec::load(const std::filesystem::path& path) {
  return from_json(read_json(path), path.string());
}

CategoryPtr CategorySpec::vec(const FieldSpec& field, std::string name) {
  nlohmann::json doc = {{"name", std::move(name)},
                        {"field", field_to_json(field)},
                        {"labels", {"1"}},
                        {"unit", "1"},
                        {"dual", {{"1", "1"}}},
                        {"fusion", {{"1", "1", "1"}}}};
  return from_json(doc, "vec");
}

CategoryPtr CategorySpec::with_F(Label a, Label b, Label c, Label d, Label e, Label f, const Scalar& value) const {
  const auto idx = index6(a, b, c, d, e, f);
  if (F_[idx].is_zero()) raise(ErrorCode::InvalidArgument, "F index not admissible");
  std::shared_ptr<CategorySpec> copy(new CategorySpec(*this));
  copy->name_ += "*";
  copy->F_[idx] = value;
  copy->finalize(copy->name_);
  return copy;
}

CategoryPtr CategorySpec::with_twist(Label a, const Scalar& value) const {
  std::shared_ptr<CategorySpec> copy(new CategorySpec(*this));
  copy->name_ += "*";
  copy->twist_.at(a) = value;
  copy->finalize(copy->name_);
  return copy;
}

bool CategorySpec::has_trivial_associator() const {
  for (const auto& v : F_)
    if (!v.is_zero() && !v.is_one()) return false;
  return true;
}

bool CategorySpec::is_pointed() const {
  for (const auto& ch : channels_)
    if (ch.size() != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Obj

Obj::Obj(CategoryPtr category, std::vector<std::uint32_t> mult) : category_(std::move(category)), mult_(std::move(mult)) {
  if (!category_) raise(ErrorCode::InvalidArgument, "object without category");
  if (mult_.size() != category_->label_count())
    raise(ErrorCode::ShapeMismatch, "multiplicity vector has wrong length for '" + category_->name() + "'");
}

Obj Obj::zero(const CategoryPtr& category) { return Obj(category, std::vector<std::uint32_t>(category->label_count(), 0)); }

Obj Obj::unit(const CategoryPtr& category) { return simple(category, category->unit()); }

Obj Obj::simple(const CategoryPtr& category, Label a, std::uint32_t copies) {
  std::vector<std::uint32_t> m(category->label_count(), 0);
  m.at(a) = copies;
  return Obj(category, std::move(m));
}

std::size_t Obj::total() const {
  std::size_t t = 0;
  for (auto m : mult_) t += m;
  return t;
}

std::vector<Label> Obj::support() const {
  std::vector<Label> s;
  for (Label a = 0; a < mult_.size(); ++a)
    if (mult_[a] > 0) s.push_back(a);
  return s;
}

std::string Obj::to_string() const {
  std::string out;
  for (Label a = 0; a < mult_.size(); ++a) {
    if (mult_[a] == 0) continue;
    if (!out.empty()) out += " + ";
    if (mult_[a] > 1) out += std::to_string(mult_[a]) + "*";
    out += category_->label_name(a);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const Obj& a, const Obj& b) { return a.category_ == b.category_ && a.mult_ == b.mult_; }

bool same_category(const CategorySpec& a, const CategorySpec& b) { return &a == &b; }

}  // namespace ctc
