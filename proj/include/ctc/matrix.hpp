#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ctc/scalar.hpp"

namespace ctc {

/// Dense row-major matrix over an exact field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& field, std::size_t n);
  /// Builds from rows of scalars; every row must have the same length.
  static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const Scalar> data() const { return data_; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Scalar& s) const;
  Matrix transpose() const;
  /// Kronecker product, row index of `this` major.
  Matrix kronecker(const Matrix& rhs) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void require_shape(const Matrix& rhs, bool product) const;

  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;                   ///< reduced row echelon form
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination.  The pivot in each column is the first row
/// (from the top of the unreduced block) holding a nonzero entry, so the
/// result is deterministic.
RowEchelon row_echelon(Matrix m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}; one column per free variable, in
/// increasing free-column order.
Matrix nullspace(const Matrix& m);

/// Solves m x = rhs.  `particular` is empty when the system is inconsistent;
/// `kernel` is nullspace(m).
struct AffineSolution {
  std::optional<Matrix> particular;
  Matrix kernel;
};
AffineSolution solve_affine(const Matrix& m, const Matrix& rhs);

/// DivisionByZero when singular.
Matrix inverse(const Matrix& m);

/// For a full-row-rank m, a matrix s with m s = I supported on the pivot
/// rows of the echelon form.  NotSurjective otherwise.
Matrix right_inverse(const Matrix& m);

/// Basis of the column space taken from the reduced echelon form of the
/// transpose, returned as columns.
Matrix column_space_basis(const Matrix& m);

}  // namespace ctc
