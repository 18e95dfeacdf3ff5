#include "ctc/action_algebra.hpp"

namespace ctc {

namespace {

std::vector<Scalar> vec(const Matrix& m) { return {m.data().begin(), m.data().end()}; }

/// Incremental echelon basis used to test membership in a span.
class Span {
 public:
  /// True when `v` was independent of what had been added so far.
  bool add(std::vector<Scalar> v) {
    for (const auto& [p, w] : rows_) {
      if (v[p].is_zero()) continue;
      const Scalar f = v[p];
      for (std::size_t i = 0; i < v.size(); ++i)
        if (!w[i].is_zero()) v[i] -= f * w[i];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    const Scalar inv = v[p].inverse();
    for (auto& x : v)
      if (!x.is_zero()) x *= inv;
    rows_.emplace_back(p, std::move(v));
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::pair<std::size_t, std::vector<Scalar>>> rows_;
};

struct Structure {
  std::size_t k = 0;
  // c[(i * k + j) * k + m] = coefficient of b_m in b_i b_j
  std::vector<Scalar> c;
  const Scalar& at(std::size_t i, std::size_t j, std::size_t m) const { return c[(i * k + j) * k + m]; }
};

Structure structure_constants(const std::vector<Matrix>& basis) {
  Structure s;
  s.k = basis.size();
  const auto& field = basis.front().field();
  const std::size_t n2 = basis.front().rows() * basis.front().cols();
  Matrix m(field, n2, s.k), rhs(field, n2, s.k * s.k);
  for (std::size_t i = 0; i < s.k; ++i) {
    const auto v = vec(basis[i]);
    for (std::size_t r = 0; r < n2; ++r) m(r, i) = v[r];
  }
  for (std::size_t i = 0; i < s.k; ++i)
    for (std::size_t j = 0; j < s.k; ++j) {
      const auto v = vec(basis[i] * basis[j]);
      for (std::size_t r = 0; r < n2; ++r) rhs(r, i * s.k + j) = v[r];
    }
  const auto sol = solve_affine(m, rhs);
  if (!sol.particular) raise(ErrorCode::InvalidArgument, "span is not closed under multiplication");
  s.c.assign(s.k * s.k * s.k, Scalar::zero(field));
  for (std::size_t i = 0; i < s.k; ++i)
    for (std::size_t j = 0; j < s.k; ++j)
      for (std::size_t l = 0; l < s.k; ++l) s.c[(i * s.k + j) * s.k + l] = (*sol.particular)(l, i * s.k + j);
  return s;
}

/// Gram matrix of the trace form of the regular representation.
Matrix trace_form(const Structure& s, const FieldSpec& field) {
  std::vector<Scalar> t(s.k, Scalar::zero(field));
  for (std::size_t l = 0; l < s.k; ++l)
    for (std::size_t m = 0; m < s.k; ++m) t[l] += s.at(l, m, m);
  Matrix g(field, s.k, s.k);
  for (std::size_t i = 0; i < s.k; ++i)
    for (std::size_t j = 0; j < s.k; ++j)
      for (std::size_t l = 0; l < s.k; ++l)
        if (!s.at(i, j, l).is_zero()) g(i, j) += s.at(i, j, l) * t[l];
  return g;
}

Matrix combine(const std::vector<Matrix>& basis, const Matrix& coords, std::size_t col) {
  Matrix out(basis.front().field(), basis.front().rows(), basis.front().cols());
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coords(i, col).is_zero()) out = out + basis[i].scaled(coords(i, col));
  return out;
}

std::vector<Matrix> combine_all(const std::vector<Matrix>& basis, const Matrix& coords) {
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < coords.cols(); ++c) out.push_back(combine(basis, coords, c));
  return out;
}

/// Coordinates of (coordinate vector x) * (coordinate vector y).
std::vector<Scalar> product(const Structure& s, const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
  std::vector<Scalar> out(s.k, Scalar::zero(x.front().field()));
  for (std::size_t i = 0; i < s.k; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < s.k; ++j) {
      if (y[j].is_zero()) continue;
      const Scalar xy = x[i] * y[j];
      for (std::size_t m = 0; m < s.k; ++m)
        if (!s.at(i, j, m).is_zero()) out[m] += xy * s.at(i, j, m);
    }
  }
  return out;
}

std::vector<Scalar> column(const Matrix& m, std::size_t c) {
  std::vector<Scalar> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m(r, c));
  return out;
}

bool is_nilpotent(const Matrix& m) {
  Matrix p = m;
  for (std::size_t i = 1; i < m.rows(); ++i) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

/// Elements x of span(candidates) with x y nilpotent for every y in span(all).
std::vector<Matrix> search(const std::vector<Matrix>& all, const std::vector<Matrix>& candidates, std::size_t cap) {
  if (candidates.empty()) return {};
  const FieldSpec field = all.front().field();
  if (field.kind() != FieldKind::prime)
    raise(ErrorCode::RadicalAlgorithmUnavailable, "exhaustive search needs a prime field");
  if (all.size() > 12) raise(ErrorCode::RadicalAlgorithmUnavailable, "dim B = " + std::to_string(all.size()) + " > 12");
  const std::uint64_t p = field.param();
  double work = 1;
  for (std::size_t i = 0; i < all.size() + candidates.size(); ++i) work *= double(p);
  if (work > double(cap)) raise(ErrorCode::RadicalAlgorithmUnavailable, "exhaustive search too large");

  const auto each = [&](const std::vector<Matrix>& b, auto&& fn) {
    std::vector<std::uint64_t> digits(b.size(), 0);
    while (true) {
      Matrix x(field, b.front().rows(), b.front().cols());
      for (std::size_t i = 0; i < b.size(); ++i)
        if (digits[i]) x = x + b[i].scaled(Scalar::from_int(field, static_cast<long>(digits[i])));
      if (!fn(x)) return;
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == p) digits[i++] = 0;
      if (i == digits.size()) return;
    }
  };
  Span span;
  std::vector<Matrix> found;
  std::size_t members = 0;
  each(candidates, [&](const Matrix& x) {
    bool ok = true;
    each(all, [&](const Matrix& y) {
      ok = is_nilpotent(x * y);
      return ok;
    });
    if (ok) {
      ++members;
      if (span.add(vec(x))) found.push_back(x);
    }
    return true;
  });
  std::uint64_t expected = 1;
  for (std::size_t i = 0; i < found.size(); ++i) expected *= p;
  if (members != expected) raise(ErrorCode::RadicalAlgorithmUnavailable, "search did not produce a subspace");
  return found;
}

}  // namespace

ActionAlgebra build_action_algebra(const AModule& m) {
  const auto& cat = m.X.category();
  const FieldSpec& field = m.X.field();
  const std::size_t n = cat.label_count();
  ActionAlgebra b;
  b.offset.assign(n + 1, 0);
  for (Label c = 0; c < n; ++c) b.offset[c + 1] = b.offset[c] + m.X.mult(c);
  b.dim_V = b.offset[n];
  if (b.dim_V == 0) return b;

  for (Label c = 0; c < n; ++c) {
    if (m.X.mult(c) == 0) continue;
    Matrix e(field, b.dim_V, b.dim_V);
    for (std::size_t j = b.offset[c]; j < b.offset[c + 1]; ++j) e(j, j) = Scalar::one(field);
    b.generators.push_back(std::move(e));
  }
  const TensorLayout lay(m.alg->A, m.X);
  for (Label a : m.alg->A.support())
    for (std::size_t k = 0; k < m.alg->A.mult(a); ++k)
      for (Label c : m.X.support())
        for (Label d : cat.channels(a, c)) {
          if (m.X.mult(d) == 0) continue;
          Matrix t(field, b.dim_V, b.dim_V);
          for (std::size_t r = 0; r < m.X.mult(d); ++r)
            for (std::size_t j = 0; j < m.X.mult(c); ++j)
              t(b.offset[d] + r, b.offset[c] + j) = m.muX.block(d)(r, lay.pos(a, k, c, j, d));
          if (!t.is_zero()) b.generators.push_back(std::move(t));
        }

  Span span;
  b.basis.push_back(Matrix::identity(field, b.dim_V));
  span.add(vec(b.basis.front()));
  for (std::size_t i = 0; i < b.basis.size(); ++i)
    for (const auto& g : b.generators) {
      Matrix p = b.basis[i] * g;
      if (span.add(vec(p))) b.basis.push_back(std::move(p));
    }
  return b;
}

void compute_radical(ActionAlgebra& b) {
  b.radical.clear();
  if (b.basis.empty()) {
    b.method = "zero";
    return;
  }
  const FieldSpec field = b.basis.front().field();
  const Structure s = structure_constants(b.basis);
  const Matrix g = trace_form(s, field);
  const Matrix kernel = nullspace(g);
  const std::uint64_t ch = field.characteristic();
  if (ch == 0 || ch > s.k) {
    b.method = "trace-form";
    b.radical = combine_all(b.basis, kernel);
    return;
  }
  // Largest two-sided ideal inside the trace-form kernel.
  // x lies in it iff g(b_i x b_j) = 0 for all basis elements b_i, b_j.
  Matrix ideal_coords = kernel;
  if (kernel.cols() > 0) {
    Matrix cons(field, s.k * s.k * s.k, kernel.cols());
    const std::vector<Scalar> zero(s.k, Scalar::zero(field));
    for (std::size_t kcol = 0; kcol < kernel.cols(); ++kcol) {
      const auto x = column(kernel, kcol);
      for (std::size_t i = 0; i < s.k; ++i)
        for (std::size_t j = 0; j < s.k; ++j) {
          auto ei = zero, ej = zero;
          ei[i] = ej[j] = Scalar::one(field);
          const auto y = product(s, product(s, ei, x), ej);
          for (std::size_t r = 0; r < s.k; ++r)
            for (std::size_t c = 0; c < s.k; ++c)
              if (!g(r, c).is_zero() && !y[c].is_zero()) cons((i * s.k + j) * s.k + r, kcol) += g(r, c) * y[c];
        }
    }
    ideal_coords = kernel * nullspace(cons);
  }
  // Accept it when nilpotent.
  std::vector<std::vector<Scalar>> ideal;
  for (std::size_t c = 0; c < ideal_coords.cols(); ++c) ideal.push_back(column(ideal_coords, c));
  std::vector<std::vector<Scalar>> power = ideal;
  for (std::size_t step = 0; step <= s.k && !power.empty(); ++step) {
    Span span;
    std::vector<std::vector<Scalar>> next;
    for (const auto& p : power)
      for (const auto& u : ideal) {
        auto v = product(s, p, u);
        if (span.add(v)) next.push_back(std::move(v));
      }
    if (next.size() == power.size()) break;
    power = std::move(next);
  }
  if (power.empty()) {
    b.method = "nilpotent-ideal";
    b.radical = combine_all(b.basis, ideal_coords);
    return;
  }
  b.method = "exhaustive-search";
  b.radical = search(b.basis, combine_all(b.basis, ideal_coords), std::size_t(1) << 20);
}

std::vector<Matrix> radical_by_search(const std::vector<Matrix>& basis, std::size_t cap) {
  if (basis.empty()) return {};
  return search(basis, basis, cap);
}

}  // namespace ctc
