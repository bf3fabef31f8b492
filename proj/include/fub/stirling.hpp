#pragma once

#include "fub/numeric.hpp"

namespace fub {

// r-Stirling engines with the paper-shifted indexing: the (n, k) query
// answers {n+r, k+r}_r resp. [n+r, k+r]_r, so call sites read like the
// formulas they implement. Out-of-range (k > n) returns 0. Tables are
// memoized per r and grow on demand; safe for concurrent readers.

/// Stirling number of the second kind {n, k}.
Int stirling2(unsigned n, unsigned k);

/// r-Stirling number of the second kind {n+r, k+r}_r, defined by
/// (x+r)^n = sum_k {n+r, k+r}_r (x)_k.
Int stirling2_r(unsigned n, unsigned k, unsigned r);

/// Unsigned r-Stirling number of the first kind [n+r, k+r]_r, defined by
/// (x)_n = sum_k (-1)^{n-k} [n+r, k+r]_r (x+r)^k.
Int stirling1_r_unsigned(unsigned n, unsigned k, unsigned r);

}  // namespace fub
