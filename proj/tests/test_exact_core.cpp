#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fub/int_poly.hpp"
#include "fub/mod_poly.hpp"
#include "fub/numeric.hpp"
#include "fub/rat_poly.hpp"
#include "fub/sturm.hpp"

using namespace fub;

namespace {

IntPoly random_poly(std::mt19937& rng, unsigned max_degree) {
  const unsigned d = rng() % (max_degree + 1);
  std::vector<Int> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = static_cast<long long>(rng() % 19u) - 9;
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("poly arithmetic basics") {
  const IntPoly xp1{1, 1};
  CHECK(xp1 * xp1 == IntPoly{1, 2, 1});
  CHECK(IntPoly{0, 1, 2}.derivative() == IntPoly{1, 4});
  CHECK(IntPoly{0, 1, 2}.divided_by_x_pow(1) == IntPoly{1, 2});
  CHECK_THROWS_AS((IntPoly{1, 1}.divided_by_x_pow(1)), DivisibilityError);
  CHECK(IntPoly{}.degree() == -1);
  CHECK(IntPoly{3}.degree() == 0);
  CHECK((IntPoly{1, 2} - IntPoly{1, 2}).is_zero());
  CHECK(pow(IntPoly{0, 1}, 3) == IntPoly{0, 0, 0, 1});
  CHECK(x_plus_1_pow(3) == IntPoly{1, 3, 3, 1});
}

TEST_CASE("ring operations commute with rational evaluation") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    const IntPoly a = random_poly(rng, 5);
    const IntPoly b = random_poly(rng, 5);
    const Rat q(static_cast<long long>(rng() % 11u) - 5, 1 + rng() % 6u);
    CHECK((a + b)(q) == a(q) + b(q));
    CHECK((a * b)(q) == a(q) * b(q));
    CHECK((a - b)(q) == a(q) - b(q));
  }
}

TEST_CASE("reduce_mod examples") {
  CHECK(reduce_mod(IntPoly{0, 1, 6, 6}, 3) == ModPoly(3, {0, 1}));
  CHECK(reduce_mod(IntPoly{}, 5) == ModPoly(5));
  CHECK(reduce_mod(IntPoly{0, -1, -1}, 3) == ModPoly(3, {0, 2, 2}));
  CHECK_THROWS_AS(ModPoly(4), std::invalid_argument);
  CHECK_THROWS_AS(ModPoly(0x80000000u), std::invalid_argument);
}

TEST_CASE("reduce_mod is a ring homomorphism") {
  std::mt19937 rng(11);
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int iter = 0; iter < 25; ++iter) {
      const IntPoly a = random_poly(rng, 6);
      const IntPoly b = random_poly(rng, 6);
      CHECK(reduce_mod(a * b, p) == reduce_mod(a, p) * reduce_mod(b, p));
      CHECK(reduce_mod(a + b, p) == reduce_mod(a, p) + reduce_mod(b, p));
    }
  }
}

TEST_CASE("mod_inv") {
  CHECK(mod_inv(2, 3) == 2);
  CHECK(mod_inv(1, 7) == 1);
  CHECK(mod_inv(4, 7) == 2);  // exhaustive: 4*2 = 8 = 1 mod 7
  CHECK(mod_inv(-3, 7) == mod_inv(4, 7));
  CHECK_THROWS_AS(mod_inv(0, 5), NotInvertibleError);
  CHECK_THROWS_AS(mod_inv(10, 5), NotInvertibleError);
  for (std::uint32_t p : {2u, 3u, 13u, 101u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      CHECK(static_cast<std::uint64_t>(mod_inv(a, p)) * a % p == 1);
    }
  }
}

TEST_CASE("combinatorial scalars") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(falling(-1, 2) == 2);
  CHECK(rising(1, 2) == 2);
  CHECK(falling(Int("123456789123456789"), 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(int_pow(0, 0) == 1);
  CHECK(int_pow(-2, 3) == -8);
  for (long long a = -10; a <= 10; ++a) {
    for (unsigned n = 0; n <= 12; ++n) {
      const Int sign = n % 2 ? -1 : 1;
      CHECK(falling(-a, n) == sign * rising(a, n));
    }
  }
}

TEST_CASE("sturm examples") {
  CHECK_THROWS_AS(sturm_count_nonpositive(RatPoly{}), std::invalid_argument);

  auto count = sturm_count_nonpositive(RatPoly{0, 1, 2});  // x(2x+1)
  CHECK(count.nonpositive_roots == 2);
  CHECK(count.squarefree_degree == 2);

  count = sturm_count_nonpositive(RatPoly{3});
  CHECK(count.nonpositive_roots == 0);
  CHECK(count.squarefree_degree == 0);

  count = sturm_count_nonpositive(RatPoly{1, 0, 1});  // no real roots
  CHECK(count.nonpositive_roots == 0);
  CHECK(count.squarefree_degree == 2);
}

TEST_CASE("sturm counts match constructed root multisets") {
  // products of (q x - p) factors with known rational roots p/q
  struct Root {
    long long num;
    long long den;
    int mult;
  };
  const std::vector<std::vector<Root>> cases = {
      {{0, 1, 1}, {-1, 1, 1}, {-1, 2, 1}, {3, 1, 2}},
      {{-2, 3, 2}, {-2, 3, 1}},  // same root stacked to multiplicity 3
      {{0, 1, 2}, {5, 2, 1}},
      {{-7, 1, 1}, {-5, 1, 1}, {1, 4, 1}, {2, 1, 1}},
      {{0, 1, 1}},
      {{4, 1, 1}, {9, 2, 1}},
  };
  for (const auto& roots : cases) {
    RatPoly f = RatPoly::constant(1);
    int distinct_total = 0, distinct_nonpos = 0;
    std::vector<std::pair<long long, long long>> seen;
    for (const Root& r : roots) {
      for (int i = 0; i < r.mult; ++i) {
        f *= RatPoly(std::vector<Rat>{Rat(-r.num), Rat(r.den)});
      }
      if (std::find(seen.begin(), seen.end(), std::make_pair(r.num, r.den)) == seen.end()) {
        seen.emplace_back(r.num, r.den);
        ++distinct_total;
        if (r.num <= 0) ++distinct_nonpos;
      }
    }
    const auto count = sturm_count_nonpositive(f);
    CHECK(count.nonpositive_roots == distinct_nonpos);
    CHECK(count.squarefree_degree == distinct_total);
  }
}

TEST_CASE("rational polynomial division and gcd") {
  const RatPoly a{(-1), 0, 1};  // x^2 - 1
  const RatPoly b{1, 1};        // x + 1
  const auto dm = a.divmod(b);
  CHECK(dm.rem.is_zero());
  CHECK(dm.quot == RatPoly{-1, 1});
  CHECK(gcd(a, b) == RatPoly{1, 1});
  CHECK(squarefree_part(RatPoly{0, 0, 1}) == RatPoly{0, 1});
  CHECK_THROWS_AS(a.divmod(RatPoly{}), std::invalid_argument);
}
