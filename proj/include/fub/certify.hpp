#pragma once

#include "fub/report.hpp"

namespace fub {

/// Certifies that F_n(x; r, s+r) has only real non-positive roots, n >= 1:
/// passes iff the Sturm count of distinct roots in (-inf, 0] equals the
/// degree of the squarefree part.
CheckReport real_roots_certify(unsigned n, unsigned r, unsigned s);

/// Exact check of
/// x^r (x+1)^s F_{n+1}(x;r,s+r) = x d/dx [ x^r (x+1)^{s+1} F_n(x;r,s+r) ].
CheckReport derivative_identity_check(unsigned n, unsigned r, unsigned s);

}  // namespace fub
