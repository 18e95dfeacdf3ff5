#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctc/scalar.hpp"

namespace ctc {

/// Index of a simple object in a CategorySpec's label list.
using Label = std::size_t;

/// Skeletal braided pivotal category presented by multiplicity-free fusion
/// data.
///
/// F-symbols follow the basis-change convention
///   ((a b)_e c)_d = sum_f F(a,b,c,d,e,f) (a (b c)_f)_d,
/// and R(a,b,c) is the coefficient of the braiding a (x) b -> b (x) a on the
/// c channel.  Instances are immutable once built; structural invariants
/// (unit fusion, dual involution, multiplicity-free, square invertible
/// F-blocks) are enforced on load, while pentagon/hexagon coherence is left
/// to the verification routines so broken data can still be inspected.
class CategorySpec {
 public:
  /// Parses the category data file format.  `origin` is used in messages.
  static std::shared_ptr<const CategorySpec> from_json(const nlohmann::json& doc,
                                                       const std::string& origin = "<memory>");
  static std::shared_ptr<const CategorySpec> load(const std::filesystem::path& path);
  /// Vec over `field`: one label, trivial F/R/twist/pivot.
  static std::shared_ptr<const CategorySpec> vec(const FieldSpec& field, std::string name = "vec");

  /// Copy with a single F entry replaced (admissible indices only); used to
  /// build deliberately broken data.
  std::shared_ptr<const CategorySpec> with_F(Label a, Label b, Label c, Label d, Label e, Label f,
                                             const Scalar& value) const;
  std::shared_ptr<const CategorySpec> with_twist(Label a, const Scalar& value) const;

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  std::size_t label_count() const { return labels_.size(); }
  const std::string& label_name(Label a) const { return labels_.at(a); }
  /// InvalidArgument for unknown names.
  Label label(const std::string& name) const;
  Label unit() const { return unit_; }
  Label dual(Label a) const { return dual_[a]; }

  bool admissible(Label a, Label b, Label c) const { return fusion_[(a * n_ + b) * n_ + c] != 0; }
  /// Labels c with (a, b, c) admissible, in label order.
  const std::vector<Label>& channels(Label a, Label b) const { return channels_[a * n_ + b]; }

  /// Zero when the index tuple is not admissible.
  const Scalar& F(Label a, Label b, Label c, Label d, Label e, Label f) const { return F_[index6(a, b, c, d, e, f)]; }
  /// Entry (f, e) of the inverse F-block: (a (b c)_f)_d = sum_e Finv * ((a b)_e c)_d.
  const Scalar& F_inverse(Label a, Label b, Label c, Label d, Label f, Label e) const {
    return F_inv_[index6(a, b, c, d, f, e)];
  }
  const Scalar& R(Label a, Label b, Label c) const { return R_[(a * n_ + b) * n_ + c]; }
  const Scalar& twist(Label a) const { return twist_[a]; }
  const Scalar& pivot(Label a) const { return pivot_[a]; }

  /// True when every F entry equals 1 (trivial associator).
  bool has_trivial_associator() const;
  /// True when the fusion rules are those of a group (each a (x) b is simple).
  bool is_pointed() const;
  bool is_single_label() const { return n_ == 1; }

 private:
  CategorySpec() = default;
  std::size_t index6(Label a, Label b, Label c, Label d, Label e, Label f) const {
    return ((((a * n_ + b) * n_ + c) * n_ + d) * n_ + e) * n_ + f;
  }
  void finalize(const std::string& origin);

  std::string name_;
  FieldSpec field_;
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  Label unit_ = 0;
  std::vector<Label> dual_;
  std::vector<char> fusion_;
  std::vector<std::vector<Label>> channels_;
  std::vector<Scalar> F_;
  std::vector<Scalar> F_inv_;
  std::vector<Scalar> R_;
  std::vector<Scalar> twist_;
  std::vector<Scalar> pivot_;
};

using CategoryPtr = std::shared_ptr<const CategorySpec>;

/// Formal direct sum of simple objects.
class Obj {
 public:
  Obj() = default;
  Obj(CategoryPtr category, std::vector<std::uint32_t> mult);

  static Obj zero(const CategoryPtr& category);
  static Obj unit(const CategoryPtr& category);
  static Obj simple(const CategoryPtr& category, Label a, std::uint32_t copies = 1);

  const CategorySpec& category() const { return *category_; }
  const CategoryPtr& category_ptr() const { return category_; }
  const FieldSpec& field() const { return category_->field(); }

  std::uint32_t mult(Label a) const { return mult_[a]; }
  const std::vector<std::uint32_t>& mults() const { return mult_; }
  std::size_t total() const;
  bool is_zero() const { return total() == 0; }
  std::vector<Label> support() const;

  /// e.g. "1 + 2*e"; "0" for the zero object.
  std::string to_string() const;

  friend bool operator==(const Obj& a, const Obj& b);
  friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }

 private:
  CategoryPtr category_;
  std::vector<std::uint32_t> mult_;
};

bool same_category(const CategorySpec& a, const CategorySpec& b);

}  // namespace ctc
