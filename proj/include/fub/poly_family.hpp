#pragma once

#include <cstdint>
#include <vector>

#include "fub/int_poly.hpp"

namespace fub {

/// The polynomial test family for checks parameterized by an integer
/// polynomial f (read in the umbral variable): monomials u^d for
/// d <= monomial_max_degree, then `random_count` seeded pseudo-random
/// polynomials of degree <= 6 with coefficients in [-9, 9] and a nonzero
/// leading coefficient. Also carries the coefficient-sequence family for
/// the R/L checks: three fixed sequences plus one seeded.
/// Construction is a pure function of the seed (mt19937 with modulo
/// mapping), so reports replay across platforms.
struct PolyFamily {
  std::uint32_t seed = 1;
  std::vector<IntPoly> polys;
  std::vector<std::vector<IntPoly>> aseqs;

  static PolyFamily make(std::uint32_t seed, unsigned monomial_max_degree = 6,
                         unsigned random_count = 20);
};

}  // namespace fub
