#include "ctc/module.hpp"

#include "ctc/action_algebra.hpp"

namespace ctc {

namespace {

void compare(Report& r, const std::string& name, const Mor& lhs, const Mor& rhs) {
  const bool ok = lhs == rhs;
  r.expect(name, ok, ok ? nlohmann::json() : nlohmann::json{{"difference", to_json(lhs - rhs)}});
}

bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || (a->A == b->A && a->mu == b->mu && a->iota == b->iota);
}

void require_same_algebra(const AModule& m1, const AModule& m2) {
  if (!same_algebra(m1.alg, m2.alg)) raise(ErrorCode::AlgebraMismatch, "modules over different algebras");
}

Scalar nonzero_index(const AlgebraObject& alg) {
  const Scalar idx = alg.index ? *alg.index : compute_index(alg);
  if (idx.is_zero()) raise(ErrorCode::IndexZero, "[A:1] = 0 for " + alg.name);
  return idx;
}

Mor coev_of(const AlgebraObject& alg) { return alg.coev ? *alg.coev : solve_coevaluation(alg); }

/// Per-block left inverse of an injective morphism.
Mor left_inverse(const Mor& u) {
  Mor out = Mor::zero(u.cod(), u.dom());
  for (Label a = 0; a < u.category().label_count(); ++a) {
    if (u.block(a).empty()) continue;
    try {
      out.block(a) = right_inverse(u.block(a).transpose()).transpose();
    } catch (const Error&) {
      raise(ErrorCode::InvalidArgument, "inclusion is not injective");
    }
  }
  return out;
}

/// Inclusion of the sub-object whose per-label bases are the given columns.
Mor inclusion_from_columns(const Obj& x, const std::vector<Matrix>& columns) {
  std::vector<std::uint32_t> m;
  for (const auto& c : columns) m.push_back(static_cast<std::uint32_t>(c.cols()));
  const Obj sub(x.category_ptr(), std::move(m));
  std::vector<Matrix> blocks;
  for (Label a = 0; a < columns.size(); ++a)
    blocks.push_back(columns[a].rows() == x.mult(a) ? columns[a] : Matrix(x.field(), x.mult(a), 0));
  return Mor(sub, x, std::move(blocks));
}

Mor image_inclusion(const Mor& f) {
  std::vector<Matrix> cols;
  for (const auto& b : f.blocks()) cols.push_back(column_space_basis(b));
  return inclusion_from_columns(f.cod(), cols);
}

Mor kernel_inclusion(const Mor& f) {
  std::vector<Matrix> cols;
  for (const auto& b : f.blocks()) cols.push_back(nullspace(b));
  return inclusion_from_columns(f.dom(), cols);
}

}  // namespace

Report check_module(const AModule& m) {
  Report r;
  const Obj& A = m.alg->A;
  const Mor idX = Mor::identity(m.X);
  compare(r, "module-unit", compose(m.muX, tensor_mor(m.alg->iota, idX)), unitor(Side::left, m.X));
  compare(r, "module-associativity", compose(m.muX, tensor_mor(Mor::identity(A), m.muX)),
          compose_all({m.muX, tensor_mor(m.alg->mu, idX), associator_inverse(A, A, m.X)}));
  return r;
}

AModule regular_module(const AlgebraPtr& alg) { return {alg, alg->A, alg->mu, "regular"}; }

AModule induce(const AlgebraPtr& alg, const Obj& w) {
  const Obj& A = alg->A;
  return {alg, tensor_obj(A, w), compose(tensor_mor(alg->mu, Mor::identity(w)), associator_inverse(A, A, w)),
          "induce(" + w.to_string() + ")"};
}

AModule character_module(const AlgebraPtr& alg, const std::vector<Scalar>& chi, std::string name) {
  const auto& cat = alg->category();
  if (!cat->is_single_label()) raise(ErrorCode::InvalidArgument, "character modules need a single-label category");
  const Label u = cat->unit();
  if (chi.size() != alg->A.mult(u)) raise(ErrorCode::ShapeMismatch, "one character value per basis element");
  const Obj x = Obj::unit(cat);
  Mor mu = Mor::zero(tensor_obj(alg->A, x), x);
  const TensorLayout lay(alg->A, x);
  for (std::size_t g = 0; g < chi.size(); ++g) mu.block(u)(0, lay.pos(u, g, u, 0, u)) = chi[g];
  return {alg, x, mu, name.empty() ? "character" : std::move(name)};
}

AModule module_direct_sum(const std::vector<AModule>& parts) {
  if (parts.empty()) raise(ErrorCode::InvalidArgument, "direct sum of no modules");
  std::vector<Obj> objs;
  std::string name;
  for (const auto& p : parts) {
    require_same_algebra(parts.front(), p);
    objs.push_back(p.X);
    name += (name.empty() ? "" : "+") + p.name;
  }
  const auto ds = direct_sum(objs);
  const Mor idA = Mor::identity(parts.front().alg->A);
  Mor mu = Mor::zero(tensor_obj(parts.front().alg->A, ds.object), ds.object);
  for (std::size_t k = 0; k < parts.size(); ++k)
    mu = mu + compose_all({ds.inclusions[k], parts[k].muX, tensor_mor(idA, ds.projections[k])});
  return {parts.front().alg, ds.object, mu, name};
}

AModule submodule(const AModule& m, const Mor& inclusion) {
  if (inclusion.cod() != m.X) raise(ErrorCode::DomainMismatch, "inclusion does not land in the module");
  const Mor left = left_inverse(inclusion);
  const Mor idA = Mor::identity(m.alg->A);
  const Mor mu = compose_all({left, m.muX, tensor_mor(idA, inclusion)});
  if (compose(inclusion, mu) != compose(m.muX, tensor_mor(idA, inclusion)))
    raise(ErrorCode::InvalidArgument, "sub-object is not stable under the action");
  return {m.alg, inclusion.dom(), mu, "sub(" + m.name + ")"};
}

bool is_module_morphism(const Mor& f, const AModule& m1, const AModule& m2) {
  require_same_algebra(m1, m2);
  return compose(f, m1.muX) == compose(m2.muX, tensor_mor(Mor::identity(m1.alg->A), f));
}

std::vector<Mor> hom_A(const AModule& m1, const AModule& m2) {
  require_same_algebra(m1, m2);
  const Obj& A = m1.alg->A;
  const Obj &x1 = m1.X, &x2 = m2.X;
  const auto& cat = x1.category();
  const FieldSpec& field = x1.field();
  const std::size_t n = cat.label_count();
  // Unknown f_c(r, j) sits at off[c] + r * x1.mult(c) + j, the flatten order.
  std::vector<std::size_t> off(n + 1, 0);
  for (Label c = 0; c < n; ++c) off[c + 1] = off[c] + x2.mult(c) * x1.mult(c);
  if (off[n] == 0) return {};
  // In the tree basis, f o mu_1 = mu_2 o (Id (x) f) splits into one equation
  // per copy k of a, channel a (x) c -> d, row r of d and copy j of c:
  //   sum_s f_d(r, s) mu1_d(s, pos(a,k,c,j)) = sum_t mu2_d(r, pos(a,k,c,t)) f_c(t, j).
  const TensorLayout l1(A, x1), l2(A, x2);
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  for (Label a : A.support())
    for (std::size_t k = 0; k < A.mult(a); ++k)
      for (Label c = 0; c < n; ++c)
        for (Label d : cat.channels(a, c)) {
          if (x2.mult(d) == 0 && x1.mult(c) == 0) continue;
          for (std::size_t r = 0; r < x2.mult(d); ++r)
            for (std::size_t j = 0; j < x1.mult(c); ++j) {
              std::vector<std::pair<std::size_t, Scalar>> row;
              for (std::size_t s = 0; s < x1.mult(d); ++s) {
                const Scalar& v = m1.muX.block(d)(s, l1.pos(a, k, c, j, d));
                if (!v.is_zero()) row.emplace_back(off[d] + r * x1.mult(d) + s, v);
              }
              for (std::size_t t = 0; t < x2.mult(c); ++t) {
                const Scalar& v = m2.muX.block(d)(r, l2.pos(a, k, c, t, d));
                if (!v.is_zero()) row.emplace_back(off[c] + t * x1.mult(c) + j, -v);
              }
              if (!row.empty()) rows.push_back(std::move(row));
            }
        }
  Matrix sys(field, rows.size(), off[n]);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [col, v] : rows[i]) sys(i, col) += v;
  const Matrix ker = nullspace(sys);
  std::vector<Mor> out;
  for (std::size_t k = 0; k < ker.cols(); ++k) {
    std::vector<Scalar> v;
    for (std::size_t r = 0; r < ker.rows(); ++r) v.push_back(ker(r, k));
    out.push_back(unflatten(x1, x2, v));
  }
  return out;
}

bool is_surjective(const Mor& f) {
  for (const auto& b : f.blocks())
    if (rank(b) != b.rows()) return false;
  return true;
}

namespace {

Mor monodromy_action(const AModule& m) {
  return compose_all({m.muX, braiding(m.X, m.alg->A), braiding(m.alg->A, m.X)});
}

LocalityResult locality(const Mor& lhs, const Mor& rhs) {
  LocalityResult r;
  r.holds = lhs == rhs;
  if (!r.holds) r.witness = {{"difference", to_json(lhs - rhs)}};
  return r;
}

}  // namespace

LocalityResult is_local(const AModule& m) { return locality(monodromy_action(m), m.muX); }

LocalityResult is_twisted_local(const AModule& m, const Mor& g) {
  const AlgebraObject& alg = *m.alg;
  if (g.dom() != alg.A || g.cod() != alg.A) raise(ErrorCode::NotAlgebraAutomorphism, "g is not an endomorphism of A");
  if (compose(g, alg.mu) != compose(alg.mu, tensor_mor(g, g)))
    raise(ErrorCode::NotAlgebraAutomorphism, "g does not preserve the multiplication");
  if (compose(g, alg.iota) != alg.iota) raise(ErrorCode::NotAlgebraAutomorphism, "g does not preserve the unit");
  for (const auto& b : g.blocks())
    if (rank(b) != b.rows()) raise(ErrorCode::NotAlgebraAutomorphism, "g is not invertible");
  return locality(compose(monodromy_action(m), tensor_mor(g, Mor::identity(m.X))), m.muX);
}

SectionResult maschke_section(const Mor& f, const AModule& m1, const AModule& m2, const std::optional<Mor>& sigma) {
  require_same_algebra(m1, m2);
  const AlgebraObject& alg = *m1.alg;
  if (f.dom() != m1.X || f.cod() != m2.X) raise(ErrorCode::DomainMismatch, "f does not go from m1 to m2");
  if (!is_module_morphism(f, m1, m2)) raise(ErrorCode::InvalidArgument, "f is not a morphism of modules");
  const Scalar idx = nonzero_index(alg);
  Mor sec;
  if (sigma) {
    sec = *sigma;
  } else {
    sec = Mor::zero(m2.X, m1.X);
    for (Label a = 0; a < f.category().label_count(); ++a) sec.block(a) = right_inverse(f.block(a));
  }
  if (compose(f, sec) != Mor::identity(m2.X)) raise(ErrorCode::NotASection, "f o sigma is not the identity");
  const Obj& A = alg.A;
  const Mor idA = Mor::identity(A);
  const Mor S = compose_all({m1.muX, tensor_mor(idA, sec), tensor_mor(idA, m2.muX), associator(A, A, m2.X),
                             tensor_mor(coev_of(alg), Mor::identity(m2.X)), unitor_inverse(Side::left, m2.X)});
  SectionResult out;
  out.s = S.scaled(idx.inverse());
  out.module_map = is_module_morphism(out.s, m2, m1);
  out.splits = compose(f, out.s) == Mor::identity(m2.X);
  return out;
}

Mor projector_pi(const AModule& m) {
  const AlgebraObject& alg = *m.alg;
  if (!is_commutative(alg)) raise(ErrorCode::NotCommutative, alg.name + " is not commutative");
  const Scalar idx = nonzero_index(alg);
  const Obj& A = alg.A;
  const Mor idA = Mor::identity(A);
  const Mor double_braid = compose(braiding(m.X, A), braiding(A, m.X));
  return compose_all({m.muX, tensor_mor(idA, m.muX), tensor_mor(idA, double_braid), associator(A, A, m.X),
                      tensor_mor(coev_of(alg), Mor::identity(m.X)), unitor_inverse(Side::left, m.X)})
      .scaled(idx.inverse());
}

LocalProjection local_projection(const AModule& m) {
  const Mor pi = projector_pi(m);
  const Mor u = image_inclusion(pi);
  const Mor pi_prime = compose(left_inverse(u), pi);
  const Mor mu = compose_all({pi_prime, m.muX, tensor_mor(Mor::identity(m.alg->A), u)});
  return {{m.alg, u.dom(), mu, "Pi(" + m.name + ")"}, pi_prime, u};
}

Mor solve_lift(const Mor& f) {
  const Obj& w2 = f.cod();
  const Obj w2d = dual_obj(w2);
  const Mor fx = tensor_mor(f, Mor::identity(w2d));
  const Mor target = coevaluation(w2);
  const Label u = f.category().unit();
  const auto sol = solve_affine(fx.block(u), target.block(u));
  if (!sol.particular) raise(ErrorCode::NotSurjective, "no lift of the coevaluation through f (x) Id");
  Mor lift = Mor::zero(Obj::unit(f.dom().category_ptr()), fx.dom());
  lift.block(u) = *sol.particular;
  return lift;
}

Mor split_with_rigid_target(const Mor& f, const Mor& lift) {
  const Obj& w1 = f.dom();
  const Obj& w2 = f.cod();
  const Obj w2d = dual_obj(w2);
  if (lift.cod() != tensor_obj(w1, w2d) || compose(tensor_mor(f, Mor::identity(w2d)), lift) != coevaluation(w2))
    raise(ErrorCode::NotALift, "(f (x) Id) o lift is not the coevaluation of the target");
  return compose_all({unitor(Side::right, w1), tensor_mor(Mor::identity(w1), evaluation(w2)), associator(w1, w2d, w2),
                      tensor_mor(lift, Mor::identity(w2)), unitor_inverse(Side::left, w2)});
}

nlohmann::json SemisimplicityResult::certificate() const {
  nlohmann::json j = {{"semisimple", semisimple}, {"dim_B", dim_B}, {"dim_J", dim_J}, {"method", method}};
  if (!radical_vector.is_null()) j["radical_vector"] = radical_vector;
  return j;
}

SemisimplicityResult is_semisimple_module(const AModule& m) {
  ActionAlgebra b = build_action_algebra(m);
  compute_radical(b);
  SemisimplicityResult out;
  out.dim_B = b.basis.size();
  out.dim_J = b.radical.size();
  out.method = b.method;
  out.semisimple = b.radical.empty();
  if (out.semisimple) return out;
  const auto& cat = m.X.category();
  for (const auto& j : b.radical)
    for (std::size_t k = 0; k < b.dim_V; ++k) {
      nlohmann::json entries = nlohmann::json::array();
      for (Label c = 0; c < cat.label_count(); ++c)
        for (std::size_t r = b.offset[c]; r < b.offset[c + 1]; ++r)
          if (!j(r, k).is_zero())
            entries.push_back({{"label", cat.label_name(c)}, {"copy", r - b.offset[c]}, {"value", j(r, k).to_string()}});
      if (!entries.empty()) {
        out.radical_vector = std::move(entries);
        return out;
      }
    }
  return out;
}

// ---------------------------------------------------------------------------
// condensation

namespace {

/// Roots of a polynomial (low degree first) that can be found by search.
std::optional<Scalar> find_root(const std::vector<Scalar>& poly, const FieldSpec& field) {
  const auto eval = [&](const Scalar& x) {
    Scalar acc = Scalar::zero(field);
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::vector<Scalar> candidates;
  if (field.kind() == FieldKind::prime && field.param() <= 100000) {
    for (std::uint64_t r = 0; r < field.param(); ++r) candidates.push_back(Scalar::from_int(field, long(r)));
  } else {
    for (long num = -12; num <= 12; ++num)
      for (long den = 1; den <= 6; ++den) candidates.push_back(Scalar::from_rational(field, mpq_class(num, den)));
    if (field.kind() == FieldKind::cyclotomic)
      for (long k = 1; k < long(field.param()); ++k)
        for (long c = -2; c <= 2; ++c)
          if (c != 0) candidates.push_back(Scalar::zeta(field, k) * c);
  }
  for (const auto& c : candidates)
    if (eval(c).is_zero()) return c;
  return std::nullopt;
}

/// Minimal polynomial of phi in End(X), low degree first, monic.
std::vector<Scalar> minimal_polynomial(const Mor& phi) {
  const FieldSpec& field = phi.field();
  std::vector<std::vector<Scalar>> powers{flatten(Mor::identity(phi.dom()))};
  Mor p = Mor::identity(phi.dom());
  while (true) {
    p = compose(phi, p);
    const auto v = flatten(p);
    Matrix m(field, v.size(), powers.size());
    Matrix rhs(field, v.size(), 1);
    for (std::size_t c = 0; c < powers.size(); ++c)
      for (std::size_t r = 0; r < v.size(); ++r) m(r, c) = powers[c][r];
    for (std::size_t r = 0; r < v.size(); ++r) rhs(r, 0) = v[r];
    const auto sol = solve_affine(m, rhs);
    if (sol.particular) {
      std::vector<Scalar> poly;
      for (std::size_t c = 0; c < powers.size(); ++c) poly.push_back(-(*sol.particular)(c, 0));
      poly.push_back(Scalar::one(field));
      return poly;
    }
    powers.push_back(v);
  }
}

std::vector<AModule> decompose(const AModule& m, Report& report) {
  const auto end = hom_A(m, m);
  if (end.size() <= 1) return {m};
  const Mor id = Mor::identity(m.X);
  for (const auto& phi : end) {
    const auto poly = minimal_polynomial(phi);
    if (poly.size() <= 2 && rank(Matrix::from_rows(phi.field(), {flatten(phi), flatten(id)})) < 2) continue;
    const auto root = find_root(poly, phi.field());
    if (!root) continue;
    Mor psi = phi - id.scaled(*root);
    Mor power = psi;
    for (std::size_t k = 1; k < m.X.total(); ++k) power = compose(psi, power);
    const Mor ker = kernel_inclusion(power), img = image_inclusion(power);
    if (ker.dom().is_zero() || img.dom().is_zero()) continue;
    auto parts = decompose(submodule(m, ker), report);
    for (auto& q : decompose(submodule(m, img), report)) parts.push_back(std::move(q));
    return parts;
  }
  report.add("split:" + m.name, Status::error, nullptr,
             "endomorphism algebra of dimension " + std::to_string(end.size()) + " could not be split over the field");
  return {m};
}

}  // namespace

CondenseResult condense(const AlgebraPtr& alg) {
  CondenseResult out;
  const auto& cat = alg->category();
  out.index = nonzero_index(*alg);
  out.dim_with_twist = algebra_dim_with_twist(*alg);
  out.report.add("index", Status::pass, out.index.to_string());
  out.report.add("dim-with-twist", Status::pass, out.dim_with_twist.to_string());
  for (Label w = 0; w < cat->label_count(); ++w) {
    const auto lp = local_projection(induce(alg, Obj::simple(cat, w)));
    if (lp.module.X.is_zero()) continue;
    for (auto& part : decompose(lp.module, out.report)) {
      bool duplicate = false;
      for (const auto& s : out.simples) duplicate = duplicate || !hom_A(s.module, part).empty();
      if (duplicate) continue;
      CondensedSimple cs{part, categorical_dim(part.X), cat->label_name(w), false};
      cs.module.name = part.X.to_string();
      cs.semisimple = is_semisimple_module(part).semisimple;
      out.report.expect("local:" + cs.module.name, is_local(part).holds);
      out.report.expect("semisimple:" + cs.module.name, cs.semisimple);
      out.simples.push_back(std::move(cs));
    }
  }
  nlohmann::json table = nlohmann::json::array();
  for (const auto& s : out.simples)
    table.push_back({{"object", s.module.name}, {"dim", s.dim.to_string()}, {"from", s.source}});
  out.report.add("simple-local-modules", Status::pass, {{"count", out.simples.size()}, {"modules", table}});
  return out;
}

}  // namespace ctc
