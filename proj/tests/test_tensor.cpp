#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "ctc/coherence.hpp"
#include "support.hpp"

using namespace ctc;
using testing::category;
using testing::lit;
using testing::mat;

namespace {

const std::vector<std::string> kCategories = {"vec_q",      "vec_f2", "vec_f3",   "pointed_z4",
                                              "toric_code", "ising",  "fibonacci"};

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

nlohmann::json base_doc() {
  return nlohmann::json::parse(R"({
    "name": "z2", "field": {"kind": "rational"}, "labels": ["1", "g"], "unit": "1",
    "dual": {"1": "1", "g": "g"},
    "fusion": [["1", "1", "1"], ["1", "g", "g"], ["g", "1", "g"], ["g", "g", "1"]]
  })");
}

}  // namespace

TEST_CASE("bundled categories load") {
  for (const auto& name : kCategories) {
    CAPTURE(name);
    const auto cat = category(name);
    CHECK(cat->name() == name);
    CHECK(cat->twist(cat->unit()) == Scalar::one(cat->field()));
    CHECK(cat->pivot(cat->unit()) == Scalar::one(cat->field()));
    for (Label a = 0; a < cat->label_count(); ++a) CHECK(cat->dual(cat->dual(a)) == a);
  }
}

TEST_CASE("category validation") {
  CHECK_NOTHROW(CategorySpec::from_json(base_doc()));
  auto doc = base_doc();
  doc["fusion"].push_back({"g", "g", "1"});
  CHECK(code_of([&] { CategorySpec::from_json(doc); }) == ErrorCode::InvalidCategory);

  doc = base_doc();
  doc["fusion"] = {{"1", "1", "1"}, {"1", "g", "g"}, {"g", "g", "1"}};
  CHECK(code_of([&] { CategorySpec::from_json(doc); }) == ErrorCode::InvalidCategory);

  doc = base_doc();
  doc["F"] = {{"g,g,g,1,1,1", "1"}};
  CHECK(code_of([&] { CategorySpec::from_json(doc); }) == ErrorCode::InvalidCategory);

  doc = base_doc();
  doc["twist"] = {{"1", "-1"}};
  CHECK(code_of([&] { CategorySpec::from_json(doc); }) == ErrorCode::InvalidCategory);

  doc = base_doc();
  doc["F"] = {{"g,g,g,g,1,1", "0"}};
  CHECK(code_of([&] { CategorySpec::from_json(doc); }) == ErrorCode::InvalidCategory);

  doc = base_doc();
  doc["R"] = {{"g,g,1", "1 +"}};
  CHECK(code_of([&] { CategorySpec::from_json(doc); }) == ErrorCode::ParseError);

  doc = base_doc();
  doc["labels"] = {"1", "g", "h"};
  CHECK_THROWS_AS(CategorySpec::from_json(doc), Error);

  CHECK(code_of([] { CategorySpec::load(testing::data("categories/missing.json")); }) == ErrorCode::ParseError);
}

TEST_CASE("tensor_obj") {
  const auto fib = category("fibonacci");
  const Label t = fib->label("t");
  const Obj tt = tensor_obj(Obj::simple(fib, t), Obj::simple(fib, t));
  CHECK(tt.mult(fib->unit()) == 1);
  CHECK(tt.mult(t) == 1);
  CHECK(tt.to_string() == "1 + t");

  Sampler s(7);
  for (const auto& name : kCategories) {
    const auto cat = category(name);
    const Obj x = s.object(cat);
    CHECK(tensor_obj(Obj::unit(cat), x) == x);
    CHECK(tensor_obj(x, Obj::unit(cat)) == x);
  }

  const auto z4 = category("pointed_z4");
  CHECK(tensor_obj(Obj::simple(z4, z4->label("1")), Obj::simple(z4, z4->label("3"))) == Obj::simple(z4, z4->label("0")));
  CHECK_THROWS_AS(tensor_obj(Obj::unit(z4), Obj::unit(fib)), Error);
}

TEST_CASE("compose") {
  const auto vec = category("vec_q");
  const FieldSpec& Q = vec->field();
  const Obj x2 = Obj::simple(vec, 0, 2);
  const Mor f(x2, x2, {mat(Q, {{"1", "2"}, {"3", "4"}})});
  const Mor g(x2, x2, {mat(Q, {{"0", "1/2"}, {"-1", "5"}})});
  CHECK(compose(Mor::identity(x2), f) == f);
  CHECK(compose(f, Mor::identity(x2)) == f);
  // [[0,1/2],[-1,5]] * [[1,2],[3,4]] worked by hand
  CHECK(compose(g, f) == Mor(x2, x2, {mat(Q, {{"3/2", "2"}, {"14", "18"}})}));
  const Obj x3 = Obj::simple(vec, 0, 3);
  CHECK(code_of([&] { compose(f, Mor::identity(x3)); }) == ErrorCode::DomainMismatch);
  CHECK_THROWS_AS(Mor(x2, x3, {mat(Q, {{"1", "2"}})}), Error);
}

TEST_CASE("tensor_mor on the Vec backend is the Kronecker product") {
  const auto vec = category("vec_q");
  const FieldSpec& Q = vec->field();
  const Obj x2 = Obj::simple(vec, 0, 2);
  const Matrix a = mat(Q, {{"1", "2"}, {"3", "4"}}), b = mat(Q, {{"0", "5"}, {"6", "7"}});
  const Mor t = tensor_mor(Mor(x2, x2, {a}), Mor(x2, x2, {b}));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) CHECK(t.block(0)(i * 2 + k, j * 2 + l) == a(i, j) * b(k, l));
  CHECK(tensor_mor(Mor::identity(x2), Mor::identity(Obj::simple(vec, 0, 3))) ==
        Mor::identity(Obj::simple(vec, 0, 6)));
}

TEST_CASE("bifunctoriality and interchange on seeded samples") {
  for (const char* name : {"ising", "fibonacci", "toric_code"}) {
    CAPTURE(name);
    const auto cat = category(name);
    Sampler s(11);
    for (int trial = 0; trial < 3; ++trial) {
      const Obj x = s.object(cat), y = s.object(cat), z = s.object(cat), u = s.object(cat), v = s.object(cat),
                w = s.object(cat);
      const Mor f1 = s.mor(x, y), f2 = s.mor(y, z), g1 = s.mor(u, v), g2 = s.mor(v, w);
      CHECK(tensor_mor(compose(f2, f1), compose(g2, g1)) == compose(tensor_mor(f2, g2), tensor_mor(f1, g1)));
      CHECK(tensor_mor(Mor::identity(x), Mor::identity(u)) == Mor::identity(tensor_obj(x, u)));
    }
  }
}

TEST_CASE("associator") {
  const auto vec = category("vec_q");
  const Obj x = Obj::simple(vec, 0, 2);
  const Obj xxx = tensor_obj(tensor_obj(x, x), x);
  CHECK(associator(x, x, x) == Mor::identity(xxx));

  const auto z4 = category("pointed_z4");
  Sampler s(3);
  for (Label i = 0; i < 4; ++i)
    for (Label j = 0; j < 4; ++j)
      for (Label k = 0; k < 4; ++k) {
        const Obj a = Obj::simple(z4, i), b = Obj::simple(z4, j), c = Obj::simple(z4, k);
        CHECK(associator(a, b, c) == Mor::identity(tensor_obj(tensor_obj(a, b), c)));
      }
  // trivial F on sums: only a reordering of the tree basis
  const Obj a = s.object(z4), b = s.object(z4), c = s.object(z4);
  const Mor perm = associator(a, b, c);
  for (const auto& blk : perm.blocks())
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      int ones = 0;
      for (std::size_t q = 0; q < blk.cols(); ++q) {
        CHECK((blk(r, q).is_zero() || blk(r, q).is_one()));
        ones += blk(r, q).is_one();
      }
      CHECK(ones == 1);
    }

  const auto ising = category("ising");
  const Obj sg = Obj::simple(ising, ising->label("s"));
  const Mor as = associator(sg, sg, sg);
  // (1/sqrt 2) [[1, 1], [1, -1]] with sqrt 2 = zeta_8 + zeta_8^-1 = zeta_16^2 + zeta_16^-2
  const FieldSpec& f = ising->field();
  const Scalar r = (Scalar::zeta(f, 2) + Scalar::zeta(f, -2)).inverse();
  CHECK(as.block(ising->label("s")) == Matrix::from_rows(f, {{r, r}, {r, -r}}));

  for (const auto& name : kCategories) {
    const auto cat = category(name);
    Sampler t(5);
    const Obj p = t.object(cat), q = t.object(cat), w = t.object(cat);
    CHECK(compose(associator_inverse(p, q, w), associator(p, q, w)) ==
          Mor::identity(tensor_obj(tensor_obj(p, q), w)));
    CHECK(compose(associator(p, q, w), associator_inverse(p, q, w)) ==
          Mor::identity(tensor_obj(p, tensor_obj(q, w))));
  }
}

TEST_CASE("unitors and the triangle identity") {
  const auto vec = category("vec_q");
  const Obj one = Obj::unit(vec);
  CHECK(unitor(Side::left, one) == unitor(Side::right, one));
  CHECK(unitor(Side::left, Obj::simple(vec, 0, 3)) == Mor::identity(Obj::simple(vec, 0, 3)));

  const auto fib = category("fibonacci");
  Sampler s(13);
  for (int trial = 0; trial < 5; ++trial) {
    const Obj x = s.object(fib), y = s.object(fib);
    CHECK(compose(tensor_mor(Mor::identity(x), unitor(Side::left, y)), associator(x, Obj::unit(fib), y)) ==
          tensor_mor(unitor(Side::right, x), Mor::identity(y)));
    CHECK(compose(unitor(Side::left, x), unitor_inverse(Side::left, x)) == Mor::identity(x));
  }
}

TEST_CASE("braiding") {
  const auto vec = category("vec_q");
  const Obj x = Obj::simple(vec, 0, 2);
  const Mor sw = braiding(x, x);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          CHECK(sw.block(0)(k * 2 + l, i * 2 + j).is_one() == (k == j && l == i));

  const auto z4 = category("pointed_z4");
  const Obj one = Obj::simple(z4, z4->label("1"));
  CHECK(braiding(one, one).block(z4->label("2"))(0, 0) == Scalar::zeta(z4->field(), 1));

  const auto toric = category("toric_code");
  Sampler s(17);
  for (int trial = 0; trial < 4; ++trial) {
    const Obj a = s.object(toric), b = s.object(toric), c = s.object(toric), d = s.object(toric);
    const Mor f = s.mor(a, b), g = s.mor(c, d);
    CHECK(compose(braiding(b, d), tensor_mor(f, g)) == compose(tensor_mor(g, f), braiding(a, c)));
    CHECK(compose(braiding_inverse(a, c), braiding(a, c)) == Mor::identity(tensor_obj(a, c)));
  }
}

TEST_CASE("evaluation, coevaluation and zig-zags") {
  const auto vec = category("vec_q");
  const Obj one = Obj::unit(vec);
  CHECK(evaluation(one) == unitor(Side::left, one));
  CHECK(coevaluation(one) == unitor_inverse(Side::left, one));

  for (const auto& name : kCategories) {
    CAPTURE(name);
    const auto cat = category(name);
    Sampler s(19);
    for (const Obj& x : {Obj::simple(cat, cat->label_count() - 1), s.object(cat), Obj::simple(cat, 0, 2)}) {
      const Obj xd = dual_obj(x);
      const Mor zig = compose_all({unitor(Side::right, x), tensor_mor(Mor::identity(x), evaluation(x)),
                                   associator(x, xd, x), tensor_mor(coevaluation(x), Mor::identity(x)),
                                   unitor_inverse(Side::left, x)});
      CHECK(zig == Mor::identity(x));
      const Mor zag = compose_all({unitor(Side::left, xd), tensor_mor(evaluation(x), Mor::identity(xd)),
                                   associator_inverse(xd, x, xd), tensor_mor(Mor::identity(xd), coevaluation(x)),
                                   unitor_inverse(Side::right, xd)});
      CHECK(zag == Mor::identity(xd));
      CHECK(dual_obj(xd) == x);
    }
  }
}

TEST_CASE("pentagon and hexagon on bundled data") {
  for (const auto& name : kCategories) {
    CAPTURE(name);
    const auto cat = category(name);
    CHECK(verify_pentagon(cat).all_pass());
    CHECK(verify_hexagon(cat).all_pass());
    CHECK(verify_unit_coherence(cat).all_pass());
    CHECK(verify_rigidity(cat).all_pass());
    CHECK(verify_naturality(cat, 1).all_pass());
  }
}

TEST_CASE("perturbed data is detected") {
  const auto ising = category("ising");
  const Label s = ising->label("s"), p = ising->label("p");
  // a 1x1 block; negating inside the 2x2 sigma block would make it singular
  const auto broken = ising->with_F(s, p, s, p, s, s, -ising->F(s, p, s, p, s, s));
  const Report r = verify_pentagon(broken);
  CHECK_FALSE(r.all_pass());
  CHECK(r.items.front().witness.at("count").get<int>() > 0);
  CHECK_FALSE(r.items.front().witness.at("tuples").empty());

  const auto toric = category("toric_code");
  const Label e = toric->label("e");
  const Report h = verify_hexagon(toric->with_twist(e, Scalar::from_int(toric->field(), -1)));
  bool balancing_failed = false;
  for (const auto& it : h.items)
    if (it.check == "ribbon-balancing") balancing_failed = it.status == Status::fail && !it.witness.is_null();
  CHECK(balancing_failed);
}

TEST_CASE("categorical dimensions") {
  for (const auto& name : kCategories) CHECK(categorical_dim(Obj::unit(category(name))).is_one());
  const auto vec = category("vec_f3");
  CHECK(categorical_dim(Obj::simple(vec, 0, 4)) == Scalar::from_int(vec->field(), 4));
  CHECK(categorical_dim(Obj::simple(vec, 0, 3)).is_zero());

  const auto fib = category("fibonacci");
  const Scalar d = categorical_dim(Obj::simple(fib, fib->label("t")));
  CHECK(d * d == Scalar::one(fib->field()) + d);
  CHECK(d == lit("1 + z + z^4", fib->field()));
  CHECK(d.approximate().real() == doctest::Approx((1 + std::sqrt(5.0)) / 2));

  const auto ising = category("ising");
  const Scalar ds = categorical_dim(Obj::simple(ising, ising->label("s")));
  CHECK(ds * ds == Scalar::from_int(ising->field(), 2));
  CHECK(ds.approximate().real() > 0);

  for (const auto& name : kCategories) {
    const auto cat = category(name);
    Sampler s(23);
    for (int trial = 0; trial < 3; ++trial) {
      const Obj x = s.object(cat), y = s.object(cat);
      CHECK(categorical_dim(tensor_obj(x, y)) == categorical_dim(x) * categorical_dim(y));
      CHECK(categorical_dim(direct_sum({x, y}).object) == categorical_dim(x) + categorical_dim(y));
    }
  }
}

TEST_CASE("direct sums") {
  const auto toric = category("toric_code");
  Sampler s(29);
  const std::vector<Obj> parts = {s.object(toric), s.object(toric), s.object(toric)};
  const auto ds = direct_sum(parts);
  Mor total = Mor::zero(ds.object, ds.object);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    CHECK(compose(ds.projections[k], ds.inclusions[k]) == Mor::identity(parts[k]));
    for (std::size_t l = 0; l < parts.size(); ++l)
      if (l != k) CHECK(compose(ds.projections[l], ds.inclusions[k]).is_zero());
    total = total + compose(ds.inclusions[k], ds.projections[k]);
  }
  CHECK(total == Mor::identity(ds.object));
}

TEST_CASE("hom bases and serialization") {
  const auto ising = category("ising");
  Sampler s(31);
  const Obj x = s.object(ising), y = s.object(ising);
  const auto basis = hom_basis(x, y);
  CHECK(basis.size() == hom_dimension(x, y));
  const Mor f = s.mor(x, y);
  CHECK(unflatten(x, y, flatten(f)) == f);
  CHECK(mor_from_json(x, y, to_json(f)["blocks"]) == f);
}
