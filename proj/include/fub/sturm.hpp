#pragma once

#include "fub/rat_poly.hpp"

namespace fub {

struct RootCount {
  int nonpositive_roots = 0;    // distinct real roots in (-inf, 0]
  int squarefree_degree = 0;    // degree of the squarefree part
};

/// Counts distinct real roots of f in (-inf, 0] with exact rational Sturm
/// chains. A root at 0 is detected on the squarefree part's constant term
/// and deflated before the chain is built, so the closed right endpoint
/// is handled without a perturbation argument. Throws std::invalid_argument
/// for the zero polynomial.
RootCount sturm_count_nonpositive(const RatPoly& f);

}  // namespace fub
