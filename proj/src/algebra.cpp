#include "ctc/algebra.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

namespace ctc {

namespace {

void compare(Report& r, const std::string& name, const Mor& lhs, const Mor& rhs) {
  const bool ok = lhs == rhs;
  r.expect(name, ok, ok ? nlohmann::json() : nlohmann::json{{"difference", to_json(lhs - rhs)}});
}

Mor evaluation_of(const AlgebraObject& alg, const Mor& counit) { return compose(counit, alg.mu); }

Mor counit_of(const AlgebraObject& alg) { return alg.counit ? *alg.counit : make_counit(alg); }

Mor coev_of(const AlgebraObject& alg) { return alg.coev ? *alg.coev : solve_coevaluation(alg); }

// r o (Id (x) e) o assoc(A,A,A), applied to (i (x) Id) o l^-1.
Mor zigzag_left(const AlgebraObject& alg, const Mor& e, const Mor& i) {
  const Obj& A = alg.A;
  const Mor id = Mor::identity(A);
  return compose_all({unitor(Side::right, A), tensor_mor(id, e), associator(A, A, A), tensor_mor(i, id),
                      unitor_inverse(Side::left, A)});
}

Mor zigzag_right(const AlgebraObject& alg, const Mor& e, const Mor& i) {
  const Obj& A = alg.A;
  const Mor id = Mor::identity(A);
  return compose_all({unitor(Side::left, A), tensor_mor(e, id), associator_inverse(A, A, A), tensor_mor(id, i),
                      unitor_inverse(Side::right, A)});
}

}  // namespace

bool is_commutative(const AlgebraObject& alg) { return compose(alg.mu, braiding(alg.A, alg.A)) == alg.mu; }

Report check_algebra(const AlgebraObject& alg) {
  Report r;
  const Obj& A = alg.A;
  const Mor id = Mor::identity(A);
  compare(r, "unit-left", compose(alg.mu, tensor_mor(alg.iota, id)), unitor(Side::left, A));
  compare(r, "unit-right", compose(alg.mu, tensor_mor(id, alg.iota)), unitor(Side::right, A));
  compare(r, "associativity", compose(alg.mu, tensor_mor(id, alg.mu)),
          compose_all({alg.mu, tensor_mor(alg.mu, id), associator_inverse(A, A, A)}));
  compare(r, "commutativity", compose(alg.mu, braiding(A, A)), alg.mu);
  if (alg.counit) compare(r, "counit", compose(*alg.counit, alg.iota), Mor::identity(Obj::unit(alg.category())));
  if (alg.counit && alg.coev) {
    const Mor e = evaluation_of(alg, *alg.counit);
    compare(r, "rigidity-left", zigzag_left(alg, e, *alg.coev), id);
    compare(r, "rigidity-right", zigzag_right(alg, e, *alg.coev), id);
  }
  if (alg.coev && alg.index) compare(r, "index", compose(alg.mu, *alg.coev), alg.iota.scaled(*alg.index));
  return r;
}

Mor make_counit(const AlgebraObject& alg) {
  if (alg.counit) return *alg.counit;
  const Label u = alg.category()->unit();
  if (alg.A.mult(u) != 1)
    raise(ErrorCode::UnitMultiplicityNotOne,
          "unit label occurs " + std::to_string(alg.A.mult(u)) + " times in " + alg.A.to_string());
  const Scalar& v = alg.iota.block(u)(0, 0);
  if (v.is_zero()) raise(ErrorCode::MissingStructure, "iota vanishes on the unit summand");
  Mor eps = Mor::zero(alg.A, Obj::unit(alg.category()));
  eps.block(u)(0, 0) = v.inverse();
  return eps;
}

Mor solve_coevaluation(const AlgebraObject& alg) {
  const Mor e = evaluation_of(alg, counit_of(alg));
  const Obj one = Obj::unit(alg.category());
  const Obj AA = tensor_obj(alg.A, alg.A);
  const auto basis = hom_basis(one, AA);
  const auto target = flatten(Mor::identity(alg.A));
  const std::size_t m = target.size();
  Matrix sys(alg.field(), 2 * m, basis.size());
  Matrix rhs(alg.field(), 2 * m, 1);
  for (std::size_t r = 0; r < m; ++r) rhs(r, 0) = rhs(m + r, 0) = target[r];
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto z1 = flatten(zigzag_left(alg, e, basis[k]));
    const auto z2 = flatten(zigzag_right(alg, e, basis[k]));
    for (std::size_t r = 0; r < m; ++r) {
      sys(r, k) = z1[r];
      sys(m + r, k) = z2[r];
    }
  }
  const auto sol = solve_affine(sys, rhs);
  if (!sol.particular)
    raise(ErrorCode::NotRigidSelfDual, "no coevaluation makes counit o mu a self-duality on " + alg.A.to_string());
  if (sol.kernel.cols() != 0)
    raise(ErrorCode::NonUnique, "coevaluation solution space has dimension " + std::to_string(sol.kernel.cols()));
  std::vector<Scalar> values;
  for (std::size_t k = 0; k < basis.size(); ++k) values.push_back((*sol.particular)(k, 0));
  return unflatten(one, AA, values);
}

Scalar compute_index(const AlgebraObject& alg) {
  const Mor m = compose(alg.mu, coev_of(alg));
  const auto iota = flatten(alg.iota), got = flatten(m);
  std::optional<Scalar> ratio;
  for (std::size_t k = 0; k < iota.size(); ++k)
    if (!iota[k].is_zero()) {
      ratio = got[k] / iota[k];
      break;
    }
  if (!ratio) raise(ErrorCode::MissingStructure, "iota is zero");
  if (m != alg.iota.scaled(*ratio)) raise(ErrorCode::NotScalarMultiple, "mu o i_A is not a multiple of iota");
  const Scalar check = compose(counit_of(alg), m).as_scalar();
  if (check != *ratio) raise(ErrorCode::NotScalarMultiple, "counit o mu o i_A disagrees with the index");
  return *ratio;
}

Report frobenius_identity_check(const AlgebraObject& alg) {
  Report r;
  const Obj& A = alg.A;
  const Mor id = Mor::identity(A);
  const Mor i = coev_of(alg);
  const Mor lhs =
      compose_all({tensor_mor(id, alg.mu), associator(A, A, A), tensor_mor(i, id), unitor_inverse(Side::left, A)});
  const Mor rhs = compose_all(
      {tensor_mor(alg.mu, id), associator_inverse(A, A, A), tensor_mor(id, i), unitor_inverse(Side::right, A)});
  compare(r, "frobenius-identity", lhs, rhs);
  return r;
}

Scalar algebra_dim_with_twist(const AlgebraObject& alg) {
  const Obj& A = alg.A;
  return compose_all({counit_of(alg), alg.mu, braiding(A, A), tensor_mor(twist(A), Mor::identity(A)), coev_of(alg)})
      .as_scalar();
}

AlgebraObject complete_structure(AlgebraObject alg, std::vector<std::string>* notes) {
  const auto note = [&](const Error& e) {
    if (notes) notes->push_back(e.what());
  };
  try {
    if (!alg.counit) alg.counit = make_counit(alg);
    if (!alg.coev) alg.coev = solve_coevaluation(alg);
    if (!alg.index) alg.index = compute_index(alg);
  } catch (const Error& e) {
    note(e);
  }
  return alg;
}

// ---------------------------------------------------------------------------
// groups

std::size_t GroupTable::identity() const {
  for (std::size_t e = 0; e < order(); ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < order() && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) return e;
  }
  raise(ErrorCode::InvalidGroupTable, "no identity element");
}

std::size_t GroupTable::inverse(std::size_t g) const {
  const std::size_t e = identity();
  for (std::size_t h = 0; h < order(); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  raise(ErrorCode::InvalidGroupTable, "'" + elements[g] + "' has no inverse");
}

void GroupTable::validate() const {
  const std::size_t n = order();
  if (n == 0) raise(ErrorCode::InvalidGroupTable, "empty group");
  if (table.size() != n) raise(ErrorCode::InvalidGroupTable, "table must be square");
  for (const auto& row : table) {
    if (row.size() != n) raise(ErrorCode::InvalidGroupTable, "table must be square");
    for (auto x : row)
      if (x >= n) raise(ErrorCode::InvalidGroupTable, "product outside the group");
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t k = 0; k < n; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          raise(ErrorCode::InvalidGroupTable,
                "not associative at (" + elements[g] + "," + elements[h] + "," + elements[k] + ")");
  for (std::size_t g = 0; g < n; ++g) inverse(g);
}

GroupTable GroupTable::cyclic(std::size_t n) {
  GroupTable t;
  for (std::size_t g = 0; g < n; ++g) t.elements.push_back(std::to_string(g));
  t.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) t.table[g][h] = (g + h) % n;
  return t;
}

GroupTable GroupTable::symmetric3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  GroupTable t;
  for (const auto& q : perms) t.elements.push_back({char('0' + q[0]), char('0' + q[1]), char('0' + q[2])});
  t.table.assign(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<int, 3> gh{};
      for (int x = 0; x < 3; ++x) gh[x] = perms[g][perms[h][x]];  // g after h
      t.table[g][h] = std::find(perms.begin(), perms.end(), gh) - perms.begin();
    }
  return t;
}

GroupTable GroupTable::from_json(const nlohmann::json& j) {
  GroupTable t;
  try {
    t.elements = j.at("elements").get<std::vector<std::string>>();
    std::map<std::string, std::size_t> index;
    for (std::size_t g = 0; g < t.elements.size(); ++g) index[t.elements[g]] = g;
    if (index.size() != t.elements.size()) raise(ErrorCode::InvalidGroupTable, "duplicate element names");
    for (const auto& row : j.at("table")) {
      std::vector<std::size_t> r;
      for (const auto& x : row) {
        const auto it = index.find(x.get<std::string>());
        if (it == index.end()) raise(ErrorCode::InvalidGroupTable, "unknown element '" + x.get<std::string>() + "'");
        r.push_back(it->second);
      }
      t.table.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::ParseError, std::string("group: ") + e.what());
  }
  t.validate();
  return t;
}

AlgebraObject group_algebra(const GroupTable& g, const CategoryPtr& vec, std::string name) {
  g.validate();
  if (!vec->is_single_label()) raise(ErrorCode::InvalidArgument, "group algebras live in a single-label category");
  const std::size_t n = g.order();
  const Label u = vec->unit();
  const FieldSpec& field = vec->field();
  AlgebraObject alg;
  alg.name = name.empty() ? field.to_string() + "[G" + std::to_string(n) + "]" : std::move(name);
  alg.A = Obj::simple(vec, u, static_cast<std::uint32_t>(n));
  alg.mu = Mor::zero(tensor_obj(alg.A, alg.A), alg.A);
  const TensorLayout lay(alg.A, alg.A);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) alg.mu.block(u)(g.table[x][y], lay.pos(u, x, u, y, u)) = Scalar::one(field);
  const Obj one = Obj::unit(vec);
  alg.iota = Mor::zero(one, alg.A);
  alg.iota.block(u)(g.identity(), 0) = Scalar::one(field);
  Mor eps = Mor::zero(alg.A, one);
  eps.block(u)(0, g.identity()) = Scalar::one(field);
  alg.counit = std::move(eps);
  return alg;
}

AlgebraObject subgroup_algebra(const std::vector<Label>& subgroup, const CategoryPtr& cat, std::string name) {
  if (!cat->is_pointed()) raise(ErrorCode::InvalidArgument, "'" + cat->name() + "' is not pointed");
  std::vector<bool> in(cat->label_count(), false);
  for (Label h : subgroup) {
    if (h >= cat->label_count()) raise(ErrorCode::InvalidArgument, "label out of range");
    if (in[h]) raise(ErrorCode::InvalidArgument, "repeated label in subgroup");
    in[h] = true;
  }
  if (!in[cat->unit()]) raise(ErrorCode::InvalidArgument, "subgroup must contain the unit");
  for (Label h : subgroup)
    for (Label k : subgroup) {
      const Label hk = cat->channels(h, k).front();
      if (!in[hk]) raise(ErrorCode::InvalidArgument, "labels are not closed under fusion");
      for (Label l : subgroup) {
        const Label kl = cat->channels(k, l).front(), d = cat->channels(hk, l).front();
        if (!cat->F(h, k, l, d, hk, kl).is_one())
          raise(ErrorCode::InvalidArgument, "associator is not trivial on the subgroup");
      }
      if (!(cat->R(h, k, hk) * cat->R(k, h, hk)).is_one())
        raise(ErrorCode::NotIsotropic,
              "monodromy of " + cat->label_name(h) + " and " + cat->label_name(k) + " is not 1");
    }
  for (Label h : subgroup)
    if (!cat->twist(h).is_one()) raise(ErrorCode::NotIsotropic, "twist of " + cat->label_name(h) + " is not 1");

  const FieldSpec& field = cat->field();
  std::vector<std::uint32_t> m(cat->label_count(), 0);
  for (Label h : subgroup) m[h] = 1;
  AlgebraObject alg;
  alg.A = Obj(cat, std::move(m));
  alg.name = name.empty() ? alg.A.to_string() : std::move(name);
  alg.mu = Mor::zero(tensor_obj(alg.A, alg.A), alg.A);
  const TensorLayout lay(alg.A, alg.A);
  for (Label h : subgroup)
    for (Label k : subgroup) {
      const Label hk = cat->channels(h, k).front();
      alg.mu.block(hk)(0, lay.pos(h, 0, k, 0, hk)) = Scalar::one(field);
    }
  alg.iota = Mor::zero(Obj::unit(cat), alg.A);
  alg.iota.block(cat->unit())(0, 0) = Scalar::one(field);
  return alg;
}

AlgebraObject trivial_algebra(const CategoryPtr& cat) {
  AlgebraObject alg;
  alg.name = "1";
  alg.A = Obj::unit(cat);
  alg.mu = unitor(Side::left, alg.A);
  alg.iota = Mor::identity(alg.A);
  return alg;
}

}  // namespace ctc
