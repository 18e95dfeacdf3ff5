#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "ctc/coherence.hpp"
#include "ctc/suites.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace ctc;
using testing::algebra;
using testing::category;
using testing::lit;
using testing::mat;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

Status status_of(const Report& r, const std::string& check) {
  for (const auto& it : r.items)
    if (it.check == check) return it.status;
  FAIL("missing report item " << check);
  return Status::error;
}

AModule induce_label(const AlgebraPtr& alg, const std::string& label) {
  return induce(alg, Obj::simple(alg->category(), alg->category()->label(label)));
}

AModule trivial_module(const AlgebraPtr& alg) {
  return character_module(alg, std::vector<Scalar>(alg->A.mult(0), Scalar::one(alg->field())), "trivial");
}

bool is_invertible(const Mor& f) {
  if (f.dom() != f.cod()) return false;
  return is_surjective(f);
}

/// Modules over a commutative algebra in a pointed category: every induced
/// simple, the regular module and one sum.
std::vector<AModule> pointed_modules(const AlgebraPtr& alg) {
  std::vector<AModule> out = {regular_module(alg)};
  const auto cat = alg->category();
  for (Label a = 0; a < cat->label_count(); ++a) out.push_back(induce(alg, Obj::simple(cat, a)));
  out.push_back(module_direct_sum({out[1], out.back()}));
  return out;
}

}  // namespace

TEST_CASE("check_module") {
  const auto z3 = algebra("q_z3");
  CHECK(check_module(regular_module(z3)).all_pass());
  CHECK(check_module(regular_module(algebra("q_s3"))).all_pass());
  CHECK(check_module(load_module(testing::data("modules/q_s3_sign.json"))).all_pass());
  CHECK(check_module(load_module(testing::data("modules/z4_local_13.json"))).all_pass());

  AModule doubled = regular_module(z3);
  doubled.muX = doubled.muX.scaled(Scalar::from_int(z3->field(), 2));
  const Report r = check_module(doubled);
  CHECK(status_of(r, "module-unit") == Status::fail);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("induction") {
  for (const char* name : {"q_z2", "q_s3", "h02", "toric_1e"}) {
    CAPTURE(name);
    const auto alg = algebra(name);
    const AModule f1 = induce(alg, Obj::unit(alg->category()));
    CHECK(check_module(f1).all_pass());
    CHECK(f1.X == alg->A);
    // r_A : F(1) -> (A, mu_A) is an isomorphism of modules
    const Mor r = unitor(Side::right, alg->A);
    CHECK(is_module_morphism(r, f1, regular_module(alg)));
    CHECK(is_invertible(r));
  }

  const auto z2 = algebra("q_z2");
  const auto vec = z2->category();
  const AModule free3 = induce(z2, Obj::simple(vec, 0, 3));
  CHECK(check_module(free3).all_pass());
  CHECK(free3.X == Obj::simple(vec, 0, 6));
  CHECK(hom_A(free3, regular_module(z2)).size() == 6);  // Hom(F^3, A)

  const auto h02 = algebra("h02");
  const AModule m1 = induce_label(h02, "1");
  const auto z4 = h02->category();
  CHECK(m1.X == direct_sum({Obj::simple(z4, z4->label("1")), Obj::simple(z4, z4->label("3"))}).object);
  CHECK(check_module(m1).all_pass());
}

TEST_CASE("hom_A") {
  const auto z3 = algebra("q_z3");
  const AModule reg = regular_module(z3);
  const auto ends = hom_A(reg, reg);
  CHECK(ends.size() == 3);
  for (const auto& f : ends) CHECK(is_module_morphism(f, reg, reg));

  const auto f2 = algebra("f2_z2");
  CHECK(hom_A(induce(f2, Obj::unit(f2->category())), trivial_module(f2)).size() == 1);

  // Id lies in the span: it is a module map, and adding it to the basis adds no rank
  for (const auto& alg : {z3, algebra("q_s3"), algebra("h02"), algebra("toric_1e")}) {
    const AModule m = regular_module(alg);
    const auto basis = hom_A(m, m);
    CHECK(is_module_morphism(Mor::identity(m.X), m, m));
    Matrix cols(alg->field(), flatten(Mor::identity(m.X)).size(), basis.size() + 1);
    for (std::size_t k = 0; k <= basis.size(); ++k) {
      const auto v = flatten(k < basis.size() ? basis[k] : Mor::identity(m.X));
      for (std::size_t r = 0; r < v.size(); ++r) cols(r, k) = v[r];
    }
    CHECK(rank(cols) == basis.size());
  }

  CHECK(code_of([&] { hom_A(reg, regular_module(algebra("q_z2"))); }) == ErrorCode::AlgebraMismatch);
}

TEST_CASE("locality") {
  CHECK(is_local(regular_module(algebra("q_z3"))).holds);
  CHECK(is_local(induce_label(algebra("h02"), "1")).holds);
  const auto toric = algebra("toric_1e");
  const auto lm = is_local(induce_label(toric, "m"));
  CHECK_FALSE(lm.holds);
  CHECK_FALSE(lm.witness.is_null());
  CHECK(is_local(induce_label(toric, "1")).holds);
  CHECK_FALSE(is_local(induce_label(toric, "f")).holds);
}

TEST_CASE("twisted locality") {
  const auto toric = algebra("toric_1e");
  const auto cat = toric->category();
  const AModule m = induce_label(toric, "m");
  Mor g = Mor::identity(toric->A);
  g.block(cat->label("e"))(0, 0) = Scalar::from_int(cat->field(), -1);
  CHECK(is_twisted_local(m, g).holds);
  CHECK_FALSE(is_twisted_local(m, Mor::identity(toric->A)).holds);
  CHECK_FALSE(is_twisted_local(induce_label(toric, "1"), g).holds);

  Mor bad = Mor::identity(toric->A);
  bad.block(cat->label("e"))(0, 0) = Scalar::from_int(cat->field(), 2);
  CHECK(code_of([&] { is_twisted_local(m, bad); }) == ErrorCode::NotAlgebraAutomorphism);
  CHECK(code_of([&] { is_twisted_local(m, Mor::zero(toric->A, toric->A)); }) == ErrorCode::NotAlgebraAutomorphism);

  for (const auto& alg : {algebra("h02"), toric, algebra("q_z2")})
    for (const auto& mod : pointed_modules(alg))
      CHECK(is_twisted_local(mod, Mor::identity(alg->A)).holds == is_local(mod).holds);
}

TEST_CASE("maschke_section") {
  const auto z2 = algebra("q_z2");
  const FieldSpec& Q = z2->field();
  const AModule reg = regular_module(z2), triv = trivial_module(z2);
  const Mor aug(reg.X, triv.X, {mat(Q, {{"1", "1"}})});
  const Mor sigma(triv.X, reg.X, {mat(Q, {{"1"}, {"0"}})});
  const auto s = maschke_section(aug, reg, triv, sigma);
  CHECK(s.s == Mor(triv.X, reg.X, {mat(Q, {{"1/2"}, {"1/2"}})}));
  CHECK(s.module_map);
  CHECK(s.splits);
  CHECK(compose(aug, s.s) == Mor::identity(triv.X));

  const Mor not_section(triv.X, reg.X, {mat(Q, {{"1"}, {"1"}})});
  CHECK(code_of([&] { maschke_section(aug, reg, triv, not_section); }) == ErrorCode::NotASection);

  // over A = 1 the average is sigma itself
  const auto one = testing::share(trivial_algebra(z2->category()));
  const AModule w2 = induce(one, Obj::simple(z2->category(), 0, 2)), w1 = induce(one, Obj::unit(z2->category()));
  const Mor f(w2.X, w1.X, {mat(Q, {{"2", "3"}})});
  const Mor sg(w1.X, w2.X, {mat(Q, {{"-1"}, {"1"}})});
  CHECK(maschke_section(f, w2, w1, sg).s == sg);

  const auto f3 = algebra("f3_z3");
  const FieldSpec& F3 = f3->field();
  const AModule reg3 = regular_module(f3), triv3 = trivial_module(f3);
  const Mor aug3(reg3.X, triv3.X, {mat(F3, {{"1", "1", "1"}})});
  CHECK(code_of([&] { maschke_section(aug3, reg3, triv3); }) == ErrorCode::IndexZero);
}

TEST_CASE("projector and local projection") {
  const auto h02 = algebra("h02");
  const AModule m1 = induce_label(h02, "1");
  CHECK(projector_pi(m1) == Mor::identity(m1.X));
  const auto lp1 = local_projection(m1);
  CHECK(lp1.pi_prime == Mor::identity(m1.X));
  CHECK(lp1.u == Mor::identity(m1.X));

  const auto toric = algebra("toric_1e");
  for (const char* label : {"m", "f"}) {
    const AModule m = induce_label(toric, label);
    CHECK(projector_pi(m).is_zero());
    const auto lp = local_projection(m);
    CHECK(lp.module.X == Obj::zero(toric->category()));
  }

  for (const auto& alg : {h02, toric}) {
    const auto lp = local_projection(induce(alg, Obj::unit(alg->category())));
    CHECK(is_local(lp.module).holds);
    bool iso = false;
    for (const auto& f : hom_A(lp.module, regular_module(alg))) iso = iso || is_invertible(f);
    CHECK(iso);
  }

  CHECK(code_of([] { projector_pi(regular_module(algebra("q_s3"))); }) == ErrorCode::NotCommutative);
  CHECK(code_of([] { projector_pi(regular_module(algebra("f2_z2"))); }) == ErrorCode::IndexZero);
}

TEST_CASE("projector properties on bundled modules") {
  for (const auto& alg : {algebra("h02"), algebra("toric_1e"), algebra("q_z2"), algebra("q_z3")}) {
    CAPTURE(alg->name);
    const auto mods = pointed_modules(alg);
    std::vector<Mor> pis;
    for (const auto& m : mods) {
      const Mor pi = projector_pi(m);
      pis.push_back(pi);
      CHECK(compose(pi, pi) == pi);
      CHECK(is_module_morphism(pi, m, m));
      CHECK((pi == Mor::identity(m.X)) == is_local(m).holds);

      const auto lp = local_projection(m);
      CHECK(check_module(lp.module).all_pass());
      CHECK(is_local(lp.module).holds);
      CHECK(compose(lp.u, lp.pi_prime) == pi);
      CHECK(compose(lp.pi_prime, lp.u) == Mor::identity(lp.module.X));
      // a second pass changes nothing
      const auto again = local_projection(lp.module);
      CHECK(again.pi_prime == Mor::identity(lp.module.X));
      CHECK(again.module.X == lp.module.X);
      CHECK(again.module.muX == lp.module.muX);
    }
    for (std::size_t i = 0; i < mods.size(); ++i)
      for (std::size_t j = 0; j < mods.size(); ++j)
        for (const auto& f : hom_A(mods[i], mods[j])) CHECK(compose(pis[j], f) == compose(f, pis[i]));
  }
}

TEST_CASE("splitting with a rigid target") {
  const auto vec = category("vec_q");
  const FieldSpec& Q = vec->field();
  const Obj w2 = Obj::simple(vec, 0, 2);
  CHECK(split_with_rigid_target(Mor::identity(w2), coevaluation(w2)) == Mor::identity(w2));

  const Obj w1 = Obj::unit(vec);
  const Mor f(w2, w1, {mat(Q, {{"2", "3"}})});
  const Mor lift = solve_lift(f);
  CHECK(compose(tensor_mor(f, Mor::identity(dual_obj(w1))), lift) == coevaluation(w1));
  const Mor sigma = split_with_rigid_target(f, lift);
  CHECK(compose(f, sigma) == Mor::identity(w1));
  CHECK(code_of([&] { split_with_rigid_target(f, Mor::zero(Obj::unit(vec), tensor_obj(w2, w1))); }) ==
        ErrorCode::NotALift);
  CHECK(code_of([&] { solve_lift(Mor::zero(w2, w1)); }) == ErrorCode::NotSurjective);

  const auto fib = category("fibonacci");
  Sampler s(41);
  const Obj t = Obj::simple(fib, fib->label("t"));
  const Obj big = direct_sum({t, t, Obj::unit(fib)}).object;
  for (int trial = 0; trial < 4; ++trial) {
    const Mor g = s.mor(big, t);
    if (!is_surjective(g)) continue;
    CHECK(compose(g, split_with_rigid_target(g, solve_lift(g))) == Mor::identity(t));
  }
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple_module(regular_module(algebra("q_z3"))).semisimple);
  CHECK(is_semisimple_module(regular_module(algebra("q_s3"))).semisimple);

  const auto f2 = algebra("f2_z2");
  const auto ss = is_semisimple_module(regular_module(f2));
  CHECK_FALSE(ss.semisimple);
  CHECK(ss.dim_J == 1);
  // e + g: both basis coefficients equal to 1
  REQUIRE(ss.radical_vector.is_array());
  REQUIRE(ss.radical_vector.size() == 2);
  for (const auto& entry : ss.radical_vector) CHECK(entry.at("value") == "1");

  const auto f3 = is_semisimple_module(regular_module(algebra("f3_z3")));
  CHECK_FALSE(f3.semisimple);
  CHECK(f3.dim_J == 2);

  const auto zero = is_semisimple_module(induce(f2, Obj::zero(f2->category())));
  CHECK(zero.semisimple);
}

TEST_CASE("Maschke both ways on Vec") {
  const std::vector<FieldSpec> fields = {FieldSpec::rational(), FieldSpec::prime(2), FieldSpec::prime(3),
                                         FieldSpec::prime(5)};
  const std::vector<GroupTable> groups = {GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric3()};
  for (const auto& f : fields)
    for (const auto& g : groups) {
      CAPTURE(f.to_string());
      CAPTURE(g.order());
      const auto alg = testing::share(group_algebra(g, CategorySpec::vec(f)));
      const bool invertible = !alg->index->is_zero();
      CHECK(is_semisimple_module(regular_module(alg)).semisimple == invertible);
      CHECK(invertible == (f.characteristic() == 0 || g.order() % f.characteristic() != 0));
    }
}

TEST_CASE("seeded Maschke sections") {
  std::mt19937_64 rng(20261019);
  for (const char* name : {"q_z2", "q_z3", "q_s3"}) {
    CAPTURE(name);
    const auto alg = algebra(name);
    const AModule reg = regular_module(alg), triv = trivial_module(alg);
    const std::vector<std::pair<AModule, AModule>> pairs = {
        {reg, triv}, {module_direct_sum({reg, triv}), reg}, {module_direct_sum({reg, reg}), reg}};
    for (const auto& [m1, m2] : pairs) {
      const auto basis = hom_A(m1, m2);
      for (int trial = 0; trial < 3; ++trial) {
        Mor f = Mor::zero(m1.X, m2.X);
        for (const auto& b : basis) f = f + b.scaled(Scalar::from_int(alg->field(), long(rng() % 7) - 3));
        if (!is_surjective(f)) continue;
        const auto s = maschke_section(f, m1, m2);
        CHECK(s.module_map);
        CHECK(s.splits);
        CHECK(is_module_morphism(s.s, m2, m1));
        CHECK(compose(f, s.s) == Mor::identity(m2.X));
      }
    }
  }
}

TEST_CASE("condensation") {
  const auto h02 = algebra("h02");
  const auto c = condense(h02);
  CHECK(c.report.all_pass());
  CHECK(c.index == Scalar::from_int(h02->field(), 2));
  CHECK(c.dim_with_twist == c.index);
  REQUIRE(c.simples.size() == 2);
  std::vector<std::string> objects;
  for (const auto& s : c.simples) {
    CHECK(s.dim == Scalar::from_int(h02->field(), 2));
    CHECK(s.semisimple);
    CHECK(is_local(s.module).holds);
    objects.push_back(s.module.X.to_string());
  }
  CHECK(objects == std::vector<std::string>{"0 + 2", "1 + 3"});
}

TEST_CASE("condensation agrees with brute-force enumeration") {
  for (const char* name : {"h02", "toric_1e"}) {
    CAPTURE(name);
    const auto alg = algebra(name);
    const auto cat = alg->category();
    std::vector<Label> h;
    for (Label a = 0; a < cat->label_count(); ++a)
      if (alg->A.mult(a)) h.push_back(a);
    oracle::Enumerator e(cat, h, 4);
    REQUIRE(e.trivial_associator());
    const auto expected = e.simple_local();
    const auto c = condense(alg);
    CHECK(c.simples.size() == expected.size());
    for (const auto& s : expected) {
      bool matched = false;
      for (const auto& got : c.simples) {
        bool same = got.module.X.total() == s.support.size();
        for (Label x : s.support) same = same && got.module.X.mult(x) == 1;
        matched = matched || same;
      }
      CHECK(matched);
    }
  }
  oracle::Enumerator toric(category("toric_code"), {0, category("toric_code")->label("e")}, 4);
  CHECK(toric.simple_local().size() == 1);
}

TEST_CASE("bundled theorem suites") {
  for (const char* name : {"maschke_2_6", "counterexamples", "local_3_1"}) {
    CAPTURE(name);
    const Report r = theorem_suite(name, CTC_DATA_DIR, 2);
    for (const auto& it : r.items) CHECK_MESSAGE(it.status == Status::pass, it.check << " " << it.message);
    CHECK_FALSE(r.items.empty());
  }
  CHECK(code_of([] { theorem_suite("nope", CTC_DATA_DIR, 1); }) == ErrorCode::InvalidArgument);
}
