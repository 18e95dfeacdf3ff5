#pragma once

#include <vector>

#include "ctc/matrix.hpp"
#include "ctc/module.hpp"

namespace ctc {

/// The associative algebra B generated by the action of A on
/// V = sum_c Hom(c, X), the multiplicity spaces of X in label order.
///
/// Generators are the label idempotents E_c and, for each copy k of a simple
/// a in A and each admissible a (x) c -> d, the operator
/// T[r, j] = mu_X.block(d)(r, pos(a, k, c, j)) from copy j of c to copy r of d.
/// A-submodules of X are exactly the B-stable subspaces of V, and B acts
/// faithfully, so X is semisimple iff J(B) = 0.
struct ActionAlgebra {
  std::size_t dim_V = 0;
  std::vector<std::size_t> offset;  // start of each label's block in V
  std::vector<Matrix> generators;
  std::vector<Matrix> basis;    // of B
  std::vector<Matrix> radical;  // of J(B), filled by compute_radical
  std::string method;
};

ActionAlgebra build_action_algebra(const AModule& m);

/// Trace form of the regular representation when char = 0 or char > dim B.
/// Otherwise the largest ideal inside the trace-form kernel, accepted when
/// nilpotent, else an exhaustive search over a prime field limited to
/// dim B <= 12.
void compute_radical(ActionAlgebra& b);

/// Greatest nilpotent ideal of the span of `basis`, for tests.
std::vector<Matrix> radical_by_search(const std::vector<Matrix>& basis, std::size_t cap = std::size_t(1) << 20);

}  // namespace ctc
