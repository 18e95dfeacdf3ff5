#include "ctc/matrix.hpp"

#include <string>

namespace ctc {

namespace {
std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }
}  // namespace

Matrix::Matrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const FieldSpec& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) raise(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) raise(ErrorCode::FieldMismatch, "matrix entry in wrong field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

void Matrix::require_shape(const Matrix& rhs, bool product) const {
  if (field_ != rhs.field_) raise(ErrorCode::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  const bool ok = product ? cols_ == rhs.rows_ : (rows_ == rhs.rows_ && cols_ == rhs.cols_);
  if (!ok) raise(ErrorCode::ShapeMismatch, shape(*this) + (product ? " * " : " +/- ") + shape(rhs));
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_shape(rhs, true);
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      const bool unit = a.is_one();
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        const Scalar& b = rhs(k, j);
        if (b.is_zero()) continue;
        if (unit)
          out(i, j) += b;
        else
          out(i, j) += a * b;
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  require_shape(rhs, false);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  require_shape(rhs, false);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  for (auto& x : out.data_)
    if (!x.is_zero()) x *= s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

Matrix Matrix::kronecker(const Matrix& rhs) const {
  if (field_ != rhs.field_) raise(ErrorCode::FieldMismatch, "kronecker across fields");
  Matrix out(field_, rows_ * rhs.rows_, cols_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Scalar& a = (*this)(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < rhs.rows_; ++k)
        for (std::size_t l = 0; l < rhs.cols_; ++l)
          if (!rhs(k, l).is_zero()) out(i * rhs.rows_ + k, j * rhs.cols_ + l) = a * rhs(k, l);
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RowEchelon row_echelon(Matrix m) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Scalar inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const auto ech = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix basis(m.field(), m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Scalar::one(m.field());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], k) = -ech.reduced(r, free[k]);
  }
  return basis;
}

AffineSolution solve_affine(const Matrix& m, const Matrix& rhs) {
  if (m.rows() != rhs.rows()) raise(ErrorCode::ShapeMismatch, "solve_affine: row counts differ");
  Matrix aug(m.field(), m.rows(), m.cols() + rhs.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < rhs.cols(); ++c) aug(r, m.cols() + c) = rhs(r, c);
  }
  const auto ech = row_echelon(std::move(aug));
  AffineSolution out;
  out.kernel = nullspace(m);
  for (auto p : ech.pivots)
    if (p >= m.cols()) return out;
  Matrix x(m.field(), m.cols(), rhs.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(ech.pivots[r], c) = ech.reduced(r, m.cols() + c);
  out.particular = std::move(x);
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) raise(ErrorCode::ShapeMismatch, "inverse of non-square " + shape(m));
  auto sol = solve_affine(m, Matrix::identity(m.field(), m.rows()));
  if (!sol.particular || sol.kernel.cols() != 0) raise(ErrorCode::DivisionByZero, "singular matrix");
  return *sol.particular;
}

Matrix right_inverse(const Matrix& m) {
  auto sol = solve_affine(m, Matrix::identity(m.field(), m.rows()));
  if (!sol.particular) raise(ErrorCode::NotSurjective, "matrix " + shape(m) + " is not of full row rank");
  return *sol.particular;
}

Matrix column_space_basis(const Matrix& m) {
  const auto ech = row_echelon(m.transpose());
  Matrix basis(m.field(), m.rows(), ech.pivots.size());
  for (std::size_t k = 0; k < ech.pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) basis(r, k) = ech.reduced(k, r);
  return basis;
}

}  // namespace ctc
