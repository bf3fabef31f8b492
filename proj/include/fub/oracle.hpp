#pragma once

#include "fub/int_poly.hpp"

namespace fub {

inline constexpr unsigned kOracleMaxN = 10;

/// Ground-truth Fubini polynomial by brute force: enumerates every set
/// partition of [n] as a restricted-growth string and weights a k-block
/// partition by k! (the number of block orderings), accumulating x^k.
/// Independent of the Stirling recurrences by construction.
/// Throws GuardError for n > kOracleMaxN.
IntPoly ordered_partition_oracle(unsigned n);

}  // namespace fub
