#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ctc/algebra.hpp"

namespace ctc {

using AlgebraPtr = std::shared_ptr<const AlgebraObject>;

/// Left module (X, mu_X) over an algebra.
struct AModule {
  AlgebraPtr alg;
  Obj X;
  Mor muX;  // A (x) X -> X
  std::string name;
};

Report check_module(const AModule& m);

/// (A, mu_A).
AModule regular_module(const AlgebraPtr& alg);
/// F(W) = (A (x) W, (mu_A (x) Id_W) o assoc^-1(A, A, W)).
AModule induce(const AlgebraPtr& alg, const Obj& w);
/// One-dimensional module of a group algebra: g acts by chi[g].
AModule character_module(const AlgebraPtr& alg, const std::vector<Scalar>& chi, std::string name = {});
AModule module_direct_sum(const std::vector<AModule>& parts);
/// Restriction of m to the sub-object spanned by the columns of `inclusion`,
/// which must be injective and A-stable (InvalidArgument otherwise).
AModule submodule(const AModule& m, const Mor& inclusion);

/// f o mu_1 = mu_2 o (Id_A (x) f).
bool is_module_morphism(const Mor& f, const AModule& m1, const AModule& m2);
/// Basis of Hom_A(m1, m2), from the nullspace of the intertwining system.
std::vector<Mor> hom_A(const AModule& m1, const AModule& m2);

/// Full row rank on every block.
bool is_surjective(const Mor& f);

struct LocalityResult {
  bool holds = false;
  nlohmann::json witness;  // difference of the two sides when it fails
};
/// mu_X o R_{X,A} o R_{A,X} = mu_X.
LocalityResult is_local(const AModule& m);
/// mu_X o R_{X,A} o R_{A,X} o (g (x) Id_X) = mu_X.  NotAlgebraAutomorphism
/// unless g is an invertible algebra map.
LocalityResult is_twisted_local(const AModule& m, const Mor& g);

struct SectionResult {
  Mor s;
  bool module_map = false;  // s o mu_2 = mu_1 o (Id (x) s)
  bool splits = false;      // f o s = Id
};
/// Averages a plain section over A:
/// s = [A:1]^-1 mu_1 o (Id (x) sigma) o (Id (x) mu_2) o assoc(A,A,X2) o (i_A (x) Id) o l^-1.
/// sigma defaults to a right inverse of f.  IndexZero, NotASection,
/// NotSurjective, InvalidArgument (f not A-linear).
SectionResult maschke_section(const Mor& f, const AModule& m1, const AModule& m2,
                              const std::optional<Mor>& sigma = std::nullopt);

/// [A:1]^-1 mu_X o (Id (x) mu_X) o (Id (x) R_{X,A} R_{A,X}) o assoc(A,A,X) o (i_A (x) Id) o l^-1.
/// NotCommutative, IndexZero.
Mor projector_pi(const AModule& m);

struct LocalProjection {
  AModule module;  // Pi(X)
  Mor pi_prime;    // X -> Pi(X)
  Mor u;           // Pi(X) -> X
};
LocalProjection local_projection(const AModule& m);

/// Solves (f (x) Id_{W2*}) o lift = i_{W2}.  NotSurjective if impossible.
Mor solve_lift(const Mor& f);
/// sigma = r o (Id (x) e_{W2}) o assoc(W1, W2*, W2) o (lift (x) Id) o l^-1.
/// NotALift unless (f (x) Id) o lift = i_{W2}.
Mor split_with_rigid_target(const Mor& f, const Mor& lift);

struct SemisimplicityResult {
  bool semisimple = true;
  std::size_t dim_B = 0;
  std::size_t dim_J = 0;
  std::string method;
  /// j v for some j in J(B) and basis vector v, as (label, copy, value) entries.
  nlohmann::json radical_vector;
  nlohmann::json certificate() const;
};
/// Builds the algebra B generated by the A-action on the multiplicity
/// spaces of X and decides J(B) = 0.  RadicalAlgorithmUnavailable when
/// neither the trace form nor exhaustive search applies.
SemisimplicityResult is_semisimple_module(const AModule& m);

struct CondensedSimple {
  AModule module;
  Scalar dim;
  std::string source;  // label whose induced module produced it
  bool semisimple = false;
};
struct CondenseResult {
  Scalar index;
  Scalar dim_with_twist;
  std::vector<CondensedSimple> simples;
  Report report;
};
/// Induces every simple label, projects to the local part, splits into
/// simple modules and removes isomorphic duplicates.
CondenseResult condense(const AlgebraPtr& alg);

}  // namespace ctc
