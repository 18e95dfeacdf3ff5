#include "ctc/morphism.hpp"

namespace ctc {

namespace {

void require_same(const Obj& x, const Obj& y) {
  if (x.category_ptr() != y.category_ptr())
    raise(ErrorCode::CategoryMismatch, "'" + x.category().name() + "' vs '" + y.category().name() + "'");
}

}  // namespace

Mor::Mor(Obj dom, Obj cod, std::vector<Matrix> blocks)
    : dom_(std::move(dom)), cod_(std::move(cod)), blocks_(std::move(blocks)) {
  require_same(dom_, cod_);
  const auto n = dom_.category().label_count();
  if (blocks_.size() != n) raise(ErrorCode::ShapeMismatch, "morphism needs one block per label");
  for (Label a = 0; a < n; ++a) {
    const auto& b = blocks_[a];
    if (b.rows() != cod_.mult(a) || b.cols() != dom_.mult(a))
      raise(ErrorCode::ShapeMismatch, "block for '" + dom_.category().label_name(a) + "' has the wrong shape");
    if (b.field() != dom_.field()) raise(ErrorCode::FieldMismatch, "block in the wrong field");
  }
}

Mor Mor::zero(const Obj& dom, const Obj& cod) {
  require_same(dom, cod);
  std::vector<Matrix> blocks;
  for (Label a = 0; a < dom.category().label_count(); ++a) blocks.emplace_back(dom.field(), cod.mult(a), dom.mult(a));
  return Mor(dom, cod, std::move(blocks));
}

Mor Mor::identity(const Obj& x) {
  std::vector<Matrix> blocks;
  for (Label a = 0; a < x.category().label_count(); ++a) blocks.push_back(Matrix::identity(x.field(), x.mult(a)));
  return Mor(x, x, std::move(blocks));
}

void Mor::require_parallel(const Mor& rhs) const {
  if (dom_ != rhs.dom_ || cod_ != rhs.cod_) raise(ErrorCode::DomainMismatch, "morphisms are not parallel");
}

Mor Mor::scaled(const Scalar& s) const {
  Mor out = *this;
  for (auto& b : out.blocks_) b = b.scaled(s);
  return out;
}

Mor Mor::operator+(const Mor& rhs) const {
  require_parallel(rhs);
  Mor out = *this;
  for (std::size_t a = 0; a < blocks_.size(); ++a) out.blocks_[a] = blocks_[a] + rhs.blocks_[a];
  return out;
}

Mor Mor::operator-(const Mor& rhs) const {
  require_parallel(rhs);
  Mor out = *this;
  for (std::size_t a = 0; a < blocks_.size(); ++a) out.blocks_[a] = blocks_[a] - rhs.blocks_[a];
  return out;
}

bool Mor::is_zero() const {
  for (const auto& b : blocks_)
    if (!b.is_zero()) return false;
  return true;
}

Scalar Mor::as_scalar() const {
  const Label u = category().unit();
  if (dom_.total() != 1 || cod_.total() != 1 || dom_.mult(u) != 1 || cod_.mult(u) != 1)
    raise(ErrorCode::DomainMismatch, "not an endomorphism of the unit object");
  return blocks_[u](0, 0);
}

bool operator==(const Mor& a, const Mor& b) {
  return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.blocks_ == b.blocks_;
}

Mor compose(const Mor& g, const Mor& f) {
  if (f.cod() != g.dom())
    raise(ErrorCode::DomainMismatch, "cannot compose: " + f.cod().to_string() + " vs " + g.dom().to_string());
  std::vector<Matrix> blocks;
  for (Label a = 0; a < f.category().label_count(); ++a) blocks.push_back(g.block(a) * f.block(a));
  return Mor(f.dom(), g.cod(), std::move(blocks));
}

Mor compose_all(std::initializer_list<Mor> fs) {
  if (fs.size() == 0) raise(ErrorCode::InvalidArgument, "empty composition");
  auto it = std::rbegin(fs);
  Mor acc = *it;
  for (++it; it != std::rend(fs); ++it) acc = compose(*it, acc);
  return acc;
}

TensorLayout::TensorLayout(const Obj& x, const Obj& y) {
  require_same(x, y);
  const auto& cat = x.category();
  n_ = cat.label_count();
  width_.assign(n_ * n_, 0);
  base_.assign(n_ * n_, 0);
  pre_.assign(n_ * n_ * n_, 0);
  for (Label a = 0; a < n_; ++a)
    for (Label c = 0; c < n_; ++c) {
      std::size_t w = 0;
      for (Label b = 0; b < n_; ++b) {
        if (!cat.admissible(a, b, c)) continue;
        pre_[(a * n_ + b) * n_ + c] = w;
        w += y.mult(b);
      }
      width_[a * n_ + c] = w;
    }
  for (Label c = 0; c < n_; ++c) {
    std::size_t acc = 0;
    for (Label a = 0; a < n_; ++a) {
      base_[a * n_ + c] = acc;
      acc += x.mult(a) * width_[a * n_ + c];
    }
  }
}

Obj tensor_obj(const Obj& x, const Obj& y) {
  require_same(x, y);
  const auto& cat = x.category();
  std::vector<std::uint32_t> m(cat.label_count(), 0);
  for (Label a : x.support())
    for (Label b : y.support())
      for (Label c : cat.channels(a, b)) m[c] += x.mult(a) * y.mult(b);
  return Obj(x.category_ptr(), std::move(m));
}

Mor tensor_mor(const Mor& f, const Mor& g) {
  require_same(f.dom(), g.dom());
  const auto& cat = f.category();
  const Obj dom = tensor_obj(f.dom(), g.dom());
  const Obj cod = tensor_obj(f.cod(), g.cod());
  Mor out = Mor::zero(dom, cod);
  const TensorLayout ld(f.dom(), g.dom()), lc(f.cod(), g.cod());
  const std::size_t n = cat.label_count();
  for (Label a = 0; a < n; ++a) {
    const Matrix& fa = f.block(a);
    if (fa.empty()) continue;
    for (Label b = 0; b < n; ++b) {
      const Matrix& gb = g.block(b);
      if (gb.empty()) continue;
      for (Label c : cat.channels(a, b)) {
        Matrix& blk = out.block(c);
        for (std::size_t i2 = 0; i2 < fa.rows(); ++i2)
          for (std::size_t i = 0; i < fa.cols(); ++i) {
            const Scalar& x = fa(i2, i);
            if (x.is_zero()) continue;
            for (std::size_t j2 = 0; j2 < gb.rows(); ++j2)
              for (std::size_t j = 0; j < gb.cols(); ++j) {
                const Scalar& y = gb(j2, j);
                if (y.is_zero()) continue;
                blk(lc.pos(a, i2, b, j2, c), ld.pos(a, i, b, j, c)) = x * y;
              }
          }
      }
    }
  }
  return out;
}

namespace {

Mor associator_impl(const Obj& x, const Obj& y, const Obj& z, bool inverse) {
  require_same(x, y);
  require_same(y, z);
  const auto& cat = x.category();
  const Obj xy = tensor_obj(x, y), yz = tensor_obj(y, z);
  const Obj left = tensor_obj(xy, z), right = tensor_obj(x, yz);
  Mor out = inverse ? Mor::zero(right, left) : Mor::zero(left, right);
  const TensorLayout l_xy(x, y), l_xy_z(xy, z), l_yz(y, z), l_x_yz(x, yz);
  for (Label a : x.support())
    for (Label b : y.support())
      for (Label c : z.support())
        for (Label e : cat.channels(a, b))
          for (Label f : cat.channels(b, c))
            for (Label d : cat.channels(e, c)) {
              if (!cat.admissible(a, f, d)) continue;
              const Scalar& coeff = inverse ? cat.F_inverse(a, b, c, d, f, e) : cat.F(a, b, c, d, e, f);
              Matrix& blk = out.block(d);
              for (std::size_t i = 0; i < x.mult(a); ++i)
                for (std::size_t j = 0; j < y.mult(b); ++j)
                  for (std::size_t k = 0; k < z.mult(c); ++k) {
                    const auto lp = l_xy_z.pos(e, l_xy.pos(a, i, b, j, e), c, k, d);
                    const auto rp = l_x_yz.pos(a, i, f, l_yz.pos(b, j, c, k, f), d);
                    if (inverse)
                      blk(lp, rp) = coeff;
                    else
                      blk(rp, lp) = coeff;
                  }
            }
  return out;
}

Mor braiding_impl(const Obj& x, const Obj& y, bool inverse) {
  require_same(x, y);
  const auto& cat = x.category();
  const Obj xy = tensor_obj(x, y), yx = tensor_obj(y, x);
  Mor out = inverse ? Mor::zero(yx, xy) : Mor::zero(xy, yx);
  const TensorLayout lxy(x, y), lyx(y, x);
  for (Label a : x.support())
    for (Label b : y.support())
      for (Label c : cat.channels(a, b)) {
        const Scalar coeff = inverse ? cat.R(a, b, c).inverse() : cat.R(a, b, c);
        for (std::size_t i = 0; i < x.mult(a); ++i)
          for (std::size_t j = 0; j < y.mult(b); ++j) {
            const auto p = lxy.pos(a, i, b, j, c), q = lyx.pos(b, j, a, i, c);
            if (inverse)
              out.block(c)(p, q) = coeff;
            else
              out.block(c)(q, p) = coeff;
          }
      }
  return out;
}

}  // namespace

Mor associator(const Obj& x, const Obj& y, const Obj& z) { return associator_impl(x, y, z, false); }
Mor associator_inverse(const Obj& x, const Obj& y, const Obj& z) { return associator_impl(x, y, z, true); }

Mor unitor(Side side, const Obj& x) {
  const Obj one = Obj::unit(x.category_ptr());
  const Obj dom = side == Side::left ? tensor_obj(one, x) : tensor_obj(x, one);
  Mor id = Mor::identity(x);
  return Mor(dom, x, id.blocks());
}

Mor unitor_inverse(Side side, const Obj& x) {
  const Obj one = Obj::unit(x.category_ptr());
  const Obj cod = side == Side::left ? tensor_obj(one, x) : tensor_obj(x, one);
  Mor id = Mor::identity(x);
  return Mor(x, cod, id.blocks());
}

Mor braiding(const Obj& x, const Obj& y) { return braiding_impl(x, y, false); }
Mor braiding_inverse(const Obj& x, const Obj& y) { return braiding_impl(x, y, true); }

Obj dual_obj(const Obj& x) {
  const auto& cat = x.category();
  std::vector<std::uint32_t> m(cat.label_count(), 0);
  for (Label a : x.support()) m[cat.dual(a)] = x.mult(a);
  return Obj(x.category_ptr(), std::move(m));
}

Mor evaluation(const Obj& x) {
  const auto& cat = x.category();
  const Obj xd = dual_obj(x);
  Mor out = Mor::zero(tensor_obj(xd, x), Obj::unit(x.category_ptr()));
  const TensorLayout l(xd, x);
  const Label u = cat.unit();
  for (Label a : x.support())
    for (std::size_t i = 0; i < x.mult(a); ++i) out.block(u)(0, l.pos(cat.dual(a), i, a, i, u)) = Scalar::one(x.field());
  return out;
}

Mor coevaluation(const Obj& x) {
  const auto& cat = x.category();
  const Obj xd = dual_obj(x);
  Mor out = Mor::zero(Obj::unit(x.category_ptr()), tensor_obj(x, xd));
  const TensorLayout l(x, xd);
  const Label u = cat.unit();
  for (Label a : x.support()) {
    const Scalar c = cat.F(a, cat.dual(a), a, a, u, u).inverse();
    for (std::size_t i = 0; i < x.mult(a); ++i) out.block(u)(l.pos(a, i, cat.dual(a), i, u), 0) = c;
  }
  return out;
}

Mor right_evaluation(const Obj& x) {
  const auto& cat = x.category();
  const Obj xd = dual_obj(x);
  Mor out = Mor::zero(tensor_obj(x, xd), Obj::unit(x.category_ptr()));
  const TensorLayout l(x, xd);
  const Label u = cat.unit();
  for (Label a : x.support())
    for (std::size_t i = 0; i < x.mult(a); ++i) out.block(u)(0, l.pos(a, i, cat.dual(a), i, u)) = cat.pivot(a);
  return out;
}

Mor twist(const Obj& x) {
  Mor out = Mor::identity(x);
  for (Label a : x.support()) out.block(a) = out.block(a).scaled(x.category().twist(a));
  return out;
}

Scalar categorical_dim(const Obj& x) { return compose(right_evaluation(x), coevaluation(x)).as_scalar(); }

DirectSum direct_sum(const std::vector<Obj>& parts) {
  if (parts.empty()) raise(ErrorCode::InvalidArgument, "direct sum of no objects");
  const auto& cat = parts.front().category();
  std::vector<std::uint32_t> m(cat.label_count(), 0);
  for (const auto& p : parts) {
    require_same(p, parts.front());
    for (Label a = 0; a < m.size(); ++a) m[a] += p.mult(a);
  }
  DirectSum out{Obj(parts.front().category_ptr(), m), {}, {}};
  std::vector<std::uint32_t> offset(m.size(), 0);
  for (const auto& p : parts) {
    Mor inc = Mor::zero(p, out.object), proj = Mor::zero(out.object, p);
    for (Label a = 0; a < m.size(); ++a) {
      for (std::size_t i = 0; i < p.mult(a); ++i) {
        inc.block(a)(offset[a] + i, i) = Scalar::one(p.field());
        proj.block(a)(i, offset[a] + i) = Scalar::one(p.field());
      }
      offset[a] += p.mult(a);
    }
    out.inclusions.push_back(std::move(inc));
    out.projections.push_back(std::move(proj));
  }
  return out;
}

Mor direct_sum_mor(const std::vector<Mor>& parts) {
  std::vector<Obj> doms, cods;
  for (const auto& p : parts) {
    doms.push_back(p.dom());
    cods.push_back(p.cod());
  }
  const auto d = direct_sum(doms), c = direct_sum(cods);
  Mor out = Mor::zero(d.object, c.object);
  for (std::size_t k = 0; k < parts.size(); ++k)
    out = out + compose(c.inclusions[k], compose(parts[k], d.projections[k]));
  return out;
}

std::vector<Mor> hom_basis(const Obj& x, const Obj& y) {
  std::vector<Mor> out;
  const Mor z = Mor::zero(x, y);
  for (Label a = 0; a < x.category().label_count(); ++a)
    for (std::size_t r = 0; r < y.mult(a); ++r)
      for (std::size_t c = 0; c < x.mult(a); ++c) {
        Mor e = z;
        e.block(a)(r, c) = Scalar::one(x.field());
        out.push_back(std::move(e));
      }
  return out;
}

std::size_t hom_dimension(const Obj& x, const Obj& y) {
  std::size_t d = 0;
  for (Label a = 0; a < x.category().label_count(); ++a) d += std::size_t(x.mult(a)) * y.mult(a);
  return d;
}

std::vector<Scalar> flatten(const Mor& f) {
  std::vector<Scalar> out;
  for (const auto& b : f.blocks())
    for (const auto& s : b.data()) out.push_back(s);
  return out;
}

Mor unflatten(const Obj& dom, const Obj& cod, const std::vector<Scalar>& values) {
  if (values.size() != hom_dimension(dom, cod)) raise(ErrorCode::ShapeMismatch, "unflatten: wrong number of entries");
  Mor out = Mor::zero(dom, cod);
  std::size_t k = 0;
  for (Label a = 0; a < dom.category().label_count(); ++a)
    for (std::size_t r = 0; r < cod.mult(a); ++r)
      for (std::size_t c = 0; c < dom.mult(a); ++c) out.block(a)(r, c) = values[k++];
  return out;
}

nlohmann::json to_json(const Mor& f) {
  nlohmann::json blocks = nlohmann::json::object();
  for (Label a = 0; a < f.category().label_count(); ++a) {
    const auto& b = f.block(a);
    if (b.empty()) continue;
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < b.cols(); ++c) row.push_back(b(r, c).to_string());
      rows.push_back(std::move(row));
    }
    blocks[f.category().label_name(a)] = std::move(rows);
  }
  return {{"dom", f.dom().to_string()}, {"cod", f.cod().to_string()}, {"blocks", std::move(blocks)}};
}

Mor mor_from_json(const Obj& dom, const Obj& cod, const nlohmann::json& blocks) {
  const auto& cat = dom.category();
  Mor out = Mor::zero(dom, cod);
  if (!blocks.is_object()) raise(ErrorCode::ParseError, "morphism blocks must be an object keyed by label");
  for (const auto& [name, rows] : blocks.items()) {
    const Label a = cat.label(name);
    Matrix& b = out.block(a);
    if (!rows.is_array() || rows.size() != b.rows())
      raise(ErrorCode::ShapeMismatch, "block '" + name + "' needs " + std::to_string(b.rows()) + " rows");
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (!rows[r].is_array() || rows[r].size() != b.cols())
        raise(ErrorCode::ShapeMismatch, "block '" + name + "' needs " + std::to_string(b.cols()) + " columns");
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const auto& v = rows[r][c];
        if (v.is_string())
          b(r, c) = Scalar::parse(v.get<std::string>(), dom.field());
        else if (v.is_number_integer())
          b(r, c) = Scalar::from_int(dom.field(), v.get<long>());
        else
          raise(ErrorCode::ParseError, "block '" + name + "': entries must be literals or integers");
      }
    }
  }
  return out;
}

}  // namespace ctc
