#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ctc/morphism.hpp"
#include "ctc/report.hpp"

namespace ctc {

/// Unital associative algebra (A, mu, iota) with the optional extra
/// structure of a counit, a self-duality coevaluation and an index.
struct AlgebraObject {
  std::string name;
  Obj A;
  Mor mu;    // A (x) A -> A
  Mor iota;  // 1 -> A
  std::optional<Mor> counit;
  std::optional<Mor> coev;  // 1 -> A (x) A
  std::optional<Scalar> index;

  const CategoryPtr& category() const { return A.category_ptr(); }
  const FieldSpec& field() const { return A.field(); }
};

/// Unit laws, associativity and commutativity, plus the counit, rigidity and
/// index laws for whichever of those structures is present.
Report check_algebra(const AlgebraObject& alg);

/// The supplied counit if any; otherwise the unit-label projection scaled so
/// that counit o iota = 1.  UnitMultiplicityNotOne when that is ambiguous.
Mor make_counit(const AlgebraObject& alg);

/// Solves both rigidity zig-zags (evaluation counit o mu) for i_A.
/// NotRigidSelfDual if there is no solution, NonUnique (with the dimension
/// of the solution space) if there are several.
Mor solve_coevaluation(const AlgebraObject& alg);

/// The scalar with mu o i_A = [A:1] iota.  NotScalarMultiple otherwise.
Scalar compute_index(const AlgebraObject& alg);

/// Compares (Id (x) mu) o assoc o (i_A (x) Id) o l^-1 with
/// (mu (x) Id) o assoc^-1 o (Id (x) i_A) o r^-1.
Report frobenius_identity_check(const AlgebraObject& alg);

/// counit o mu o R_{A,A} o (theta_A (x) Id) o i_A.
Scalar algebra_dim_with_twist(const AlgebraObject& alg);

/// Fills in counit, coevaluation and index where they can be computed.
/// Failures leave the field empty and are described in `notes`.
AlgebraObject complete_structure(AlgebraObject alg, std::vector<std::string>* notes = nullptr);

bool is_commutative(const AlgebraObject& alg);

/// Finite group given by its multiplication table.
struct GroupTable {
  std::vector<std::string> elements;
  std::vector<std::vector<std::size_t>> table;  // table[g][h] = g*h

  std::size_t order() const { return elements.size(); }
  std::size_t identity() const;
  std::size_t inverse(std::size_t g) const;
  /// InvalidGroupTable unless closed, associative, unital and with inverses.
  void validate() const;

  static GroupTable cyclic(std::size_t n);
  /// Elements are permutations of {0,1,2} in one-line notation; "012" is the identity.
  static GroupTable symmetric3();
  /// {"elements": [...], "table": [[name,...],...]}
  static GroupTable from_json(const nlohmann::json& j);
};

/// F[G] in a single-label category.  The counit picks out the coefficient of
/// the identity element.
AlgebraObject group_algebra(const GroupTable& g, const CategoryPtr& vec, std::string name = {});

/// sum of the labels in H with every multiplication component equal to 1.
/// NotIsotropic unless twist(h) = 1 and the monodromy is trivial on H.
AlgebraObject subgroup_algebra(const std::vector<Label>& subgroup, const CategoryPtr& cat, std::string name = {});

/// The unit object as an algebra.
AlgebraObject trivial_algebra(const CategoryPtr& cat);

}  // namespace ctc
