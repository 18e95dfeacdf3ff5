#pragma once

#include <cstdint>
#include <random>

#include "ctc/morphism.hpp"
#include "ctc/report.hpp"

namespace ctc {

/// Compares the two F-move composites on every label 4-tuple.  The witness
/// lists failing tuples (at most 16, plus the total count).
Report verify_pentagon(const CategoryPtr& cat);
/// Triangle and the two unit compatibilities on every label pair.
Report verify_unit_coherence(const CategoryPtr& cat);
/// Both hexagon families over label triples plus ribbon balancing on
/// admissible triples.
Report verify_hexagon(const CategoryPtr& cat);
/// Zig-zag identities for ev/coev on every label and the dual involution.
Report verify_rigidity(const CategoryPtr& cat);
/// Seeded checks of interchange, naturality of braiding and associator, and
/// additivity/multiplicativity of categorical_dim on random small data.
Report verify_naturality(const CategoryPtr& cat, std::uint64_t seed, int trials = 4);

/// All of the above.
Report check_category(const CategoryPtr& cat, std::uint64_t seed = 1);

/// Small deterministic generators for property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : rng_() % n; }
  /// Entries are small integers, times a random root of unity in cyclotomic fields.
  Scalar scalar(const FieldSpec& field);
  Obj object(const CategoryPtr& cat, std::uint32_t max_mult = 2);
  Mor mor(const Obj& dom, const Obj& cod);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ctc
