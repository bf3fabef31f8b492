#include "fub/poly_family.hpp"

#include <random>

namespace fub {

namespace {

// mt19937 is fully specified by the standard; combined with plain modulo
// mapping the family is identical on every platform.
long long draw_coeff(std::mt19937& rng) {
  return static_cast<long long>(rng() % 19u) - 9;
}

IntPoly draw_poly(std::mt19937& rng, unsigned max_degree) {
  const unsigned d = rng() % (max_degree + 1);
  std::vector<Int> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = draw_coeff(rng);
  while (c[d] == 0) c[d] = draw_coeff(rng);
  return IntPoly(std::move(c));
}

}  // namespace

PolyFamily PolyFamily::make(std::uint32_t seed, unsigned monomial_max_degree,
                            unsigned random_count) {
  PolyFamily fam;
  fam.seed = seed;
  std::mt19937 rng(seed);
  for (unsigned d = 0; d <= monomial_max_degree; ++d) {
    fam.polys.push_back(IntPoly::monomial(1, d));
  }
  for (unsigned i = 0; i < random_count; ++i) {
    fam.polys.push_back(draw_poly(rng, 6));
  }
  fam.aseqs = {
      {IntPoly::constant(1)},
      {IntPoly{}, IntPoly::constant(1)},
      {IntPoly::x(), IntPoly::constant(2)},
  };
  std::vector<IntPoly> seeded;
  const unsigned t = 1 + rng() % 2;
  for (unsigned i = 0; i <= t; ++i) seeded.push_back(draw_poly(rng, 2));
  fam.aseqs.push_back(std::move(seeded));
  return fam;
}

}  // namespace fub
