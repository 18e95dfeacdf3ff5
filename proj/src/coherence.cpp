#include "ctc/coherence.hpp"

#include <chrono>

namespace ctc {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Collects failing label tuples for a witness.
class Failures {
 public:
  explicit Failures(const CategorySpec& cat) : cat_(cat) {}
  void add(std::initializer_list<Label> tuple) {
    ++count_;
    if (list_.size() >= 16) return;
    std::string s;
    for (Label a : tuple) s += (s.empty() ? "" : ",") + cat_.label_name(a);
    list_.push_back(s);
  }
  bool empty() const { return count_ == 0; }
  nlohmann::json witness() const { return {{"count", count_}, {"tuples", list_}}; }

 private:
  const CategorySpec& cat_;
  std::size_t count_ = 0;
  std::vector<std::string> list_;
};

void finish(Report& r, const std::string& name, const Failures& f, const Timer& t) {
  r.expect(name, f.empty(), f.witness()).elapsed_ms = t.ms();
}

}  // namespace

Report verify_pentagon(const CategoryPtr& cat) {
  Report r;
  Timer t;
  Failures fails(*cat);
  const std::size_t n = cat->label_count();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c)
        for (Label d = 0; d < n; ++d) {
          const Obj A = Obj::simple(cat, a), B = Obj::simple(cat, b), C = Obj::simple(cat, c), D = Obj::simple(cat, d);
          const Obj AB = tensor_obj(A, B), BC = tensor_obj(B, C), CD = tensor_obj(C, D);
          const Mor lhs = compose(associator(A, B, CD), associator(AB, C, D));
          const Mor rhs = compose_all({tensor_mor(Mor::identity(A), associator(B, C, D)), associator(A, BC, D),
                                       tensor_mor(associator(A, B, C), Mor::identity(D))});
          if (lhs != rhs) fails.add({a, b, c, d});
        }
  finish(r, "pentagon", fails, t);
  return r;
}

Report verify_unit_coherence(const CategoryPtr& cat) {
  Report r;
  Timer t;
  Failures tri(*cat), left(*cat), right(*cat);
  const Obj one = Obj::unit(cat);
  const std::size_t n = cat->label_count();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b) {
      const Obj A = Obj::simple(cat, a), B = Obj::simple(cat, b), AB = tensor_obj(A, B);
      const Mor triangle_l = compose(tensor_mor(Mor::identity(A), unitor(Side::left, B)), associator(A, one, B));
      if (triangle_l != tensor_mor(unitor(Side::right, A), Mor::identity(B))) tri.add({a, b});
      if (compose(unitor(Side::left, AB), associator_inverse(one, A, B)) !=
          tensor_mor(unitor(Side::left, A), Mor::identity(B)))
        left.add({a, b});
      if (compose(tensor_mor(Mor::identity(A), unitor(Side::right, B)), associator(A, B, one)) !=
          unitor(Side::right, AB))
        right.add({a, b});
    }
  finish(r, "triangle", tri, t);
  finish(r, "unit-left", left, t);
  finish(r, "unit-right", right, t);
  return r;
}

Report verify_hexagon(const CategoryPtr& cat) {
  Report r;
  Timer t;
  Failures h1(*cat), h2(*cat), bal(*cat);
  const std::size_t n = cat->label_count();
  for (Label a = 0; a < n; ++a)
    for (Label b = 0; b < n; ++b)
      for (Label c = 0; c < n; ++c) {
        const Obj X = Obj::simple(cat, a), Y = Obj::simple(cat, b), Z = Obj::simple(cat, c);
        const Obj XY = tensor_obj(X, Y), YZ = tensor_obj(Y, Z);
        const Mor lhs1 = compose_all({associator(Y, Z, X), braiding(X, YZ), associator(X, Y, Z)});
        const Mor rhs1 = compose_all({tensor_mor(Mor::identity(Y), braiding(X, Z)), associator(Y, X, Z),
                                      tensor_mor(braiding(X, Y), Mor::identity(Z))});
        if (lhs1 != rhs1) h1.add({a, b, c});
        const Mor lhs2 = compose_all({associator_inverse(Z, X, Y), braiding(XY, Z), associator_inverse(X, Y, Z)});
        const Mor rhs2 = compose_all({tensor_mor(braiding(X, Z), Mor::identity(Y)), associator_inverse(X, Z, Y),
                                      tensor_mor(Mor::identity(X), braiding(Y, Z))});
        if (lhs2 != rhs2) h2.add({a, b, c});
        if (cat->admissible(a, b, c) &&
            cat->R(b, a, c) * cat->R(a, b, c) != cat->twist(c) / (cat->twist(a) * cat->twist(b)))
          bal.add({a, b, c});
      }
  finish(r, "hexagon", h1, t);
  finish(r, "hexagon-inverse", h2, t);
  finish(r, "ribbon-balancing", bal, t);
  return r;
}

Report verify_rigidity(const CategoryPtr& cat) {
  Report r;
  Timer t;
  Failures zz1(*cat), zz2(*cat), inv(*cat);
  for (Label a = 0; a < cat->label_count(); ++a) {
    const Obj X = Obj::simple(cat, a), Xd = dual_obj(X);
    // X -> (X X*) X -> X (X* X) -> X
    const Mor z1 = compose_all({unitor(Side::right, X), tensor_mor(Mor::identity(X), evaluation(X)),
                                associator(X, Xd, X), tensor_mor(coevaluation(X), Mor::identity(X)),
                                unitor_inverse(Side::left, X)});
    if (z1 != Mor::identity(X)) zz1.add({a});
    // X* -> X* (X X*) -> (X* X) X* -> X*
    const Mor z2 = compose_all({unitor(Side::left, Xd), tensor_mor(evaluation(X), Mor::identity(Xd)),
                                associator_inverse(Xd, X, Xd), tensor_mor(Mor::identity(Xd), coevaluation(X)),
                                unitor_inverse(Side::right, Xd)});
    if (z2 != Mor::identity(Xd)) zz2.add({a});
    if (cat->dual(cat->dual(a)) != a) inv.add({a});
  }
  finish(r, "zigzag-left", zz1, t);
  finish(r, "zigzag-right", zz2, t);
  finish(r, "dual-involution", inv, t);
  return r;
}

Scalar Sampler::scalar(const FieldSpec& field) {
  Scalar s = Scalar::from_int(field, static_cast<long>(below(5)) - 2);
  if (field.kind() == FieldKind::cyclotomic && !s.is_zero())
    s *= Scalar::zeta(field, static_cast<long>(below(field.param())));
  return s;
}

Obj Sampler::object(const CategoryPtr& cat, std::uint32_t max_mult) {
  std::vector<std::uint32_t> m(cat->label_count());
  for (auto& x : m) x = static_cast<std::uint32_t>(below(max_mult + 1));
  return Obj(cat, std::move(m));
}

Mor Sampler::mor(const Obj& dom, const Obj& cod) {
  Mor f = Mor::zero(dom, cod);
  for (Label a = 0; a < dom.category().label_count(); ++a) {
    Matrix& b = f.block(a);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) = scalar(dom.field());
  }
  return f;
}

Report verify_naturality(const CategoryPtr& cat, std::uint64_t seed, int trials) {
  Report r;
  Timer t;
  Sampler s(seed);
  int interchange = 0, braid = 0, assoc = 0, dims = 0;
  for (int k = 0; k < trials; ++k) {
    const Obj X1 = s.object(cat, 1), X2 = s.object(cat, 1), X3 = s.object(cat, 1);
    const Obj Y1 = s.object(cat, 1), Y2 = s.object(cat, 1), Y3 = s.object(cat, 1);
    const Mor f1 = s.mor(X1, X2), f2 = s.mor(X2, X3), g1 = s.mor(Y1, Y2), g2 = s.mor(Y2, Y3);
    if (tensor_mor(compose(f2, f1), compose(g2, g1)) != compose(tensor_mor(f2, g2), tensor_mor(f1, g1))) ++interchange;
    if (compose(braiding(X2, Y2), tensor_mor(f1, g1)) != compose(tensor_mor(g1, f1), braiding(X1, Y1))) ++braid;
    const Mor h = s.mor(Y1, Y2);
    if (compose(associator(X2, Y2, X2), tensor_mor(tensor_mor(f1, h), f1)) !=
        compose(tensor_mor(f1, tensor_mor(h, f1)), associator(X1, Y1, X1)))
      ++assoc;
    if (categorical_dim(tensor_obj(X1, Y1)) != categorical_dim(X1) * categorical_dim(Y1)) ++dims;
    if (categorical_dim(direct_sum({X1, Y1}).object) != categorical_dim(X1) + categorical_dim(Y1)) ++dims;
  }
  const nlohmann::json seed_json = {{"seed", seed}, {"trials", trials}};
  r.expect("interchange", interchange == 0, seed_json).elapsed_ms = t.ms();
  r.expect("braiding-naturality", braid == 0, seed_json).elapsed_ms = t.ms();
  r.expect("associator-naturality", assoc == 0, seed_json).elapsed_ms = t.ms();
  r.expect("dimension-multiplicative", dims == 0, seed_json).elapsed_ms = t.ms();
  return r;
}

Report check_category(const CategoryPtr& cat, std::uint64_t seed) {
  Report r;
  r.append(verify_pentagon(cat));
  r.append(verify_unit_coherence(cat));
  r.append(verify_hexagon(cat));
  r.append(verify_rigidity(cat));
  r.append(verify_naturality(cat, seed));
  return r;
}

}  // namespace ctc
