#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "ctc/error.hpp"

namespace ctc {

enum class FieldKind { rational, prime, cyclotomic };

namespace detail {
struct CyclotomicData;
}

/// Identifies one of the supported exact fields: Q, F_p or Q(zeta_n).
///
/// Copies are cheap; cyclotomic tables live in a process-wide registry and
/// are never freed.
class FieldSpec {
 public:
  FieldSpec() = default;  // the rationals

  static FieldSpec rational();
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec cyclotomic(std::uint32_t n);

  FieldKind kind() const { return kind_; }
  /// p for prime fields, n for cyclotomic fields, 0 for Q.
  std::uint64_t param() const { return param_; }
  std::uint64_t characteristic() const { return kind_ == FieldKind::prime ? param_ : 0; }
  /// Dimension over the prime field: phi(n) for Q(zeta_n), otherwise 1.
  std::size_t degree() const;

  const detail::CyclotomicData& cyclotomic_data() const;

  std::string to_string() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind_ == b.kind_ && a.param_ == b.param_;
  }
  friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

 private:
  FieldKind kind_ = FieldKind::rational;
  std::uint64_t param_ = 0;
  const detail::CyclotomicData* cyclo_ = nullptr;
};

namespace detail {
struct CyclotomicData {
  std::uint32_t n = 1;
  std::size_t phi = 1;
  /// Coefficients of the n-th cyclotomic polynomial, low degree first; monic.
  std::vector<mpz_class> poly;
  /// zeta^k reduced modulo the cyclotomic polynomial, for 0 <= k < n.
  std::vector<std::vector<mpq_class>> powers;
};
}  // namespace detail

/// An element of an exact field, always held in canonical form.
///
/// Rationals are reduced fractions, prime-field elements are residues in
/// [0, p), and cyclotomic elements are coefficient vectors of length phi(n)
/// in the power basis 1, z, ..., z^(phi-1) with z = zeta_n.  Zero is held
/// without a payload in every field.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(const FieldSpec& field);
  static Scalar one(const FieldSpec& field);
  static Scalar from_int(const FieldSpec& field, long value);
  static Scalar from_integer(const FieldSpec& field, const mpz_class& value);
  /// Fails with NoEmbedding if the denominator vanishes in the field.
  static Scalar from_rational(const FieldSpec& field, const mpq_class& value);
  /// zeta_n^k in Q(zeta_n); k may be negative.
  static Scalar zeta(const FieldSpec& field, long k);

  /// Parses the scalar literal syntax: integers, p/q, and polynomial
  /// expressions in `z` with `+ - * / ^` and parentheses.
  static Scalar parse(std::string_view text, const FieldSpec& field);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; DivisionByZero for zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  /// Image under the canonical embedding into `target`, or NoEmbedding.
  Scalar embed(const FieldSpec& target) const;

  /// Canonical literal; parse(to_string()) reproduces the value exactly.
  std::string to_string() const;

  /// Display only, not authoritative.  Prime-field elements map to their
  /// residue.
  std::complex<double> approximate() const;
  std::string approximate_string(int digits = 6) const;

  /// Rational coefficient vector (cyclotomic) or the single rational value.
  /// Throws InvalidArgument for prime fields.
  std::vector<mpq_class> rational_coefficients() const;
  /// Residue in [0, p) for prime fields.
  std::uint64_t residue() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  using Rep = std::variant<std::monostate, mpq_class, std::uint64_t, std::vector<mpq_class>>;
  Scalar(FieldSpec field, Rep value) : field_(field), value_(std::move(value)) { normalize(); }

  void require_same_field(const Scalar& other) const;
  void normalize();
  mpq_class rat() const;
  std::uint64_t res() const;
  std::vector<mpq_class> cyc() const;

  FieldSpec field_;
  Rep value_;
};

inline Scalar operator*(const Scalar& s, long k) { return s * Scalar::from_int(s.field(), k); }

}  // namespace ctc
