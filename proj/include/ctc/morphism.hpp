#pragma once

#include <vector>

#include <json.hpp>

#include "ctc/category.hpp"
#include "ctc/matrix.hpp"

namespace ctc {

/// Morphism between two objects, stored as one block per label with shape
/// cod.mult(a) x dom.mult(a).
class Mor {
 public:
  Mor() = default;
  /// `blocks` must have one entry per label with matching shapes.
  Mor(Obj dom, Obj cod, std::vector<Matrix> blocks);

  static Mor zero(const Obj& dom, const Obj& cod);
  static Mor identity(const Obj& x);

  const Obj& dom() const { return dom_; }
  const Obj& cod() const { return cod_; }
  const CategorySpec& category() const { return dom_.category(); }
  const FieldSpec& field() const { return dom_.field(); }
  const Matrix& block(Label a) const { return blocks_[a]; }
  Matrix& block(Label a) { return blocks_[a]; }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  Mor scaled(const Scalar& s) const;
  Mor operator+(const Mor& rhs) const;
  Mor operator-(const Mor& rhs) const;
  bool is_zero() const;
  /// Value of an endomorphism of the unit object.
  Scalar as_scalar() const;

  friend bool operator==(const Mor& a, const Mor& b);
  friend bool operator!=(const Mor& a, const Mor& b) { return !(a == b); }

 private:
  void require_parallel(const Mor& rhs) const;

  Obj dom_;
  Obj cod_;
  std::vector<Matrix> blocks_;
};

/// g o f; DomainMismatch unless f.cod() == g.dom().
Mor compose(const Mor& g, const Mor& f);
/// compose(fs[0], compose(fs[1], ...)), i.e. the last entry acts first.
Mor compose_all(std::initializer_list<Mor> fs);

/// Index of summands of X (x) Y.  For output label c the summands
/// (a, i, b, j) are listed in lexicographic order: label a, copy i of a in X,
/// label b, copy j of b in Y.
class TensorLayout {
 public:
  TensorLayout(const Obj& x, const Obj& y);
  /// Copy index of c in X (x) Y holding the summand (a_i b_j)_c.
  std::size_t pos(Label a, std::size_t i, Label b, std::size_t j, Label c) const {
    return base_[a * n_ + c] + i * width_[a * n_ + c] + pre_[(a * n_ + b) * n_ + c] + j;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> width_;
  std::vector<std::size_t> base_;
  std::vector<std::size_t> pre_;
};

Obj tensor_obj(const Obj& x, const Obj& y);
Mor tensor_mor(const Mor& f, const Mor& g);

/// (X (x) Y) (x) Z -> X (x) (Y (x) Z).
Mor associator(const Obj& x, const Obj& y, const Obj& z);
/// X (x) (Y (x) Z) -> (X (x) Y) (x) Z.
Mor associator_inverse(const Obj& x, const Obj& y, const Obj& z);

enum class Side { left, right };
/// 1 (x) X -> X or X (x) 1 -> X.  The tree bases make both identity blocks.
Mor unitor(Side side, const Obj& x);
Mor unitor_inverse(Side side, const Obj& x);

/// X (x) Y -> Y (x) X, acting by R(a, b, c) on (a_i b_j)_c.
Mor braiding(const Obj& x, const Obj& y);
Mor braiding_inverse(const Obj& x, const Obj& y);

Obj dual_obj(const Obj& x);
/// X* (x) X -> 1.
Mor evaluation(const Obj& x);
/// 1 -> X (x) X*, normalized so both zig-zags are identities.
Mor coevaluation(const Obj& x);
/// X (x) X* -> 1 through the pivotal structure.
Mor right_evaluation(const Obj& x);
/// theta_X, diagonal on labels.
Mor twist(const Obj& x);

/// Pivotal trace of Id_X.
Scalar categorical_dim(const Obj& x);

struct DirectSum {
  Obj object;
  std::vector<Mor> inclusions;
  std::vector<Mor> projections;
};
/// Copies of summand 0 come first within each label block, then summand 1.
DirectSum direct_sum(const std::vector<Obj>& parts);
Mor direct_sum_mor(const std::vector<Mor>& parts);

/// Matrix units, ordered by label, then row, then column.
std::vector<Mor> hom_basis(const Obj& x, const Obj& y);
std::size_t hom_dimension(const Obj& x, const Obj& y);
/// Concatenation of the blocks in the order used by hom_basis.
std::vector<Scalar> flatten(const Mor& f);
Mor unflatten(const Obj& dom, const Obj& cod, const std::vector<Scalar>& values);

/// {"dom":..., "cod":..., "blocks":{label:[[literal,...],...]}}; empty blocks are omitted.
nlohmann::json to_json(const Mor& f);
/// Inverse of the "blocks" part of to_json.  Labels absent from `blocks` are zero.
Mor mor_from_json(const Obj& dom, const Obj& cod, const nlohmann::json& blocks);

}  // namespace ctc
