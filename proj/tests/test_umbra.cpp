#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fub/umbra.hpp"

using namespace fub;

namespace {

IntPoly random_poly(std::mt19937& rng, unsigned max_degree) {
  const unsigned d = rng() % (max_degree + 1);
  std::vector<Int> c(d + 1);
  for (unsigned i = 0; i <= d; ++i) c[i] = static_cast<long long>(rng() % 19u) - 9;
  return IntPoly(std::move(c));
}

// Alternative evaluation route: expand into the falling-factorial basis by
// finite differences, then (u)_k -> k! x^k.
IntPoly eval_via_falling_basis(const UmbralExpr& e) {
  const int d = e.degree();
  if (d < 0) return {};
  // values at u = 0..d, IntPoly-valued
  std::vector<IntPoly> diffs;
  for (int u = 0; u <= d; ++u) diffs.push_back(e.at(u));
  IntPoly out;
  for (int k = 0; k <= d; ++k) {
    // diffs[0] holds Delta^k e(0) = b_k * k!, and (u)_k evaluates to k! x^k
    out += IntPoly::monomial(1, static_cast<std::size_t>(k)) * diffs[0];
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return out;
}

}  // namespace

TEST_CASE("expression building") {
  const UmbralExpr u2_shift1 = UmbralExpr::power(2).shifted(1);
  CHECK(u2_shift1.coeff(0) == IntPoly{1});
  CHECK(u2_shift1.coeff(1) == IntPoly{2});
  CHECK(u2_shift1.coeff(2) == IntPoly{1});

  const UmbralExpr f2 = UmbralExpr::falling_shift(0, 2);  // u(u-1)
  CHECK(f2.coeff(1) == IntPoly{-1});
  CHECK(f2.coeff(2) == IntPoly{1});

  const UmbralExpr lifted = UmbralExpr::power(1) * IntPoly{1, 1};
  CHECK(lifted.coeff(0).is_zero());
  CHECK(lifted.coeff(1) == IntPoly{1, 1});

  // shift is a homomorphism: (e1*e2) shifted = e1 shifted * e2 shifted
  std::mt19937 rng(3);
  for (int iter = 0; iter < 10; ++iter) {
    const UmbralExpr e1 = UmbralExpr::from_int_poly(random_poly(rng, 4));
    const UmbralExpr e2 = UmbralExpr::from_int_poly(random_poly(rng, 4));
    const long long a = static_cast<long long>(rng() % 9) - 4;
    CHECK((e1 * e2).shifted(a) == e1.shifted(a) * e2.shifted(a));
  }
}

TEST_CASE("umbral evaluation examples") {
  CHECK(umbral_eval(UmbralExpr::power(2)) == IntPoly{0, 1, 2});
  CHECK(umbral_eval(UmbralExpr::falling_shift(0, 3)) == IntPoly{0, 0, 0, 6});
  const UmbralExpr prod =
      UmbralExpr::power(1).shifted(1) * UmbralExpr::power(1).shifted(2);
  CHECK(umbral_eval(prod) == IntPoly{2, 4, 2});
}

TEST_CASE("falling shift evaluates to the closed form") {
  for (unsigned n = 0; n <= 8; ++n) {
    for (unsigned r = 0; r <= 4; ++r) {
      const IntPoly lhs = umbral_eval(UmbralExpr::falling_shift(r, n + r));
      const IntPoly rhs = factorial(n + r) * (x_pow(n) * x_plus_1_pow(r));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("shift identity against plain evaluation") {
  // (x+1) eval(e(u+r)) - x eval(e(u+r+1)) = e(r) for constant-coefficient e
  std::mt19937 rng(5);
  for (int iter = 0; iter < 15; ++iter) {
    const IntPoly f = random_poly(rng, 6);
    const UmbralExpr e = UmbralExpr::from_int_poly(f);
    for (long long r = 0; r <= 6; ++r) {
      const IntPoly lhs = x_plus_1_pow(1) * umbral_eval(e.shifted(r)) -
                          IntPoly::x() * umbral_eval(e.shifted(r + 1));
      CHECK(lhs == IntPoly::constant(f.at_int(r)));
    }
  }
}

TEST_CASE("evaluation is IntPoly-linear") {
  std::mt19937 rng(9);
  for (int iter = 0; iter < 15; ++iter) {
    const UmbralExpr e1 = UmbralExpr::from_int_poly(random_poly(rng, 5));
    const UmbralExpr e2 = UmbralExpr::from_int_poly(random_poly(rng, 5));
    const IntPoly c = random_poly(rng, 3);
    CHECK(umbral_eval(e1 * c + e2) == c * umbral_eval(e1) + umbral_eval(e2));
  }
}

TEST_CASE("defining recurrence") {
  for (unsigned n = 1; n <= 10; ++n) {
    CHECK(x_plus_1_pow(1) * umbral_eval(UmbralExpr::power(n)) ==
          IntPoly::x() * umbral_eval(UmbralExpr::power(n).shifted(1)));
  }
}

TEST_CASE("power-basis evaluation agrees with the falling-basis route") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 20; ++iter) {
    UmbralExpr e = UmbralExpr::from_int_poly(random_poly(rng, 5));
    // give some coefficients x-dependence
    e *= random_poly(rng, 2);
    CHECK(umbral_eval(e) == eval_via_falling_basis(e));
  }
}
