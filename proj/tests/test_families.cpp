#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fub/certify.hpp"
#include "fub/egf.hpp"
#include "fub/families.hpp"
#include "fub/oracle.hpp"
#include "fub/series_eval.hpp"
#include "fub/umbra.hpp"

using namespace fub;

TEST_CASE("fubini basics") {
  CHECK(fubini(0) == IntPoly{1});
  CHECK(fubini(3) == IntPoly{0, 1, 6, 6});
  CHECK(fubini(4)(Rat(1)) == 75);
  for (unsigned n = 0; n <= 8; ++n) CHECK(fubini(n) == ordered_partition_oracle(n));
  for (unsigned n = 0; n <= 10; ++n) CHECK(fubini_rs(n, 0, 0) == fubini(n));
}

TEST_CASE("fubini recurrence") {
  // (x+1) F_n = x sum_j C(n,j) F_j
  for (unsigned n = 1; n <= 10; ++n) {
    IntPoly rhs;
    for (unsigned j = 0; j <= n; ++j) rhs += binomial(n, j) * fubini(j);
    CHECK(x_plus_1_pow(1) * fubini(n) == IntPoly::x() * rhs);
  }
}

TEST_CASE("fubini_rs closed forms") {
  for (unsigned r = 0; r <= 6; ++r) {
    for (unsigned s = 0; s <= 6; ++s) {
      const Int sf = factorial(s);
      CHECK(fubini_rs(0, r, s) == IntPoly::constant(sf));
      const IntPoly f1 = sf * IntPoly{static_cast<long long>(r),
                                      static_cast<long long>(s) + 1};
      CHECK(fubini_rs(1, r, s) == f1);
      const IntPoly f2 =
          sf * IntPoly(std::vector<Int>{Int(r) * r, Int(2 * r + 1) * (s + 1),
                                        Int(s + 1) * (s + 2)});
      CHECK(fubini_rs(2, r, s) == f2);
    }
  }
  CHECK(fubini_rs(3, 1, 1) == IntPoly{1, 14, 36, 24});
}

TEST_CASE("prop 1 umbral identities for fubini_rs") {
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned r = 0; r <= 4; ++r) {
      for (unsigned s = 0; s <= 4; ++s) {
        const UmbralExpr a =
            shifted_power(static_cast<long long>(r) - s, n) * UmbralExpr::falling_shift(0, s);
        CHECK(umbral_eval(a) == x_pow(s) * fubini_rs(n, r, s));
        const UmbralExpr b = shifted_power(r, n) * UmbralExpr::falling_shift(s, s);
        CHECK(umbral_eval(b) == x_plus_1_pow(s) * fubini_rs(n, r, s));
      }
    }
  }
}

TEST_CASE("multi-r fubini") {
  const MultiRSpec empty = MultiRSpec::make({});
  CHECK(fubini_multi(4, empty) == fubini(4));
  CHECK(empty.a == IntPoly{1});

  const MultiRSpec one = MultiRSpec::make({1});
  CHECK(fubini_multi(1, one) == IntPoly{1, 2});
  CHECK(fubini_multi(2, one)(Rat(1)) == 13);

  for (unsigned r = 0; r <= 4; ++r) {
    const MultiRSpec spec = MultiRSpec::make({r});
    for (unsigned n = 0; n <= 6; ++n) CHECK(fubini_multi(n, spec) == fubini_rs(n, r, r));
  }

  const MultiRSpec two = MultiRSpec::make({1, 2});
  CHECK(two.total() == 3);
  CHECK(two.a.degree() == 3);
  CHECK_THROWS_AS(MultiRSpec::make({2, 1}), std::invalid_argument);
}

TEST_CASE("P and T polynomials") {
  CHECK(p_poly(2, 1) == IntPoly{3, -2, 1});
  CHECK(t_poly(2, 0) == IntPoly{1, 2, 1});
  CHECK(p_poly(0, 7) == IntPoly{1});
  // umbral cross-checks from the defining proposition
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned r = 0; r <= 4; ++r) {
      CHECK(umbral_eval(UmbralExpr::falling_shift(-static_cast<long long>(r) - 1, n)) ==
            factorial(n) * p_poly(n, r));
      CHECK(umbral_eval(UmbralExpr::falling_shift(n + r, n)) == factorial(n) * t_poly(n, r));
    }
  }
}

TEST_CASE("R and L builders") {
  const std::vector<IntPoly> unit{IntPoly{1}};
  CHECK(rl_r_poly(unit, 3, 2, 1) == fubini_rs(3, 2, 1));
  const std::vector<IntPoly> pick1{IntPoly{}, IntPoly{1}};
  CHECK(rl_r_poly(pick1, 0, 0, 0) == fubini(1));
  const std::vector<IntPoly> ax{IntPoly{0, 1}};
  CHECK(rl_l_poly(ax, 2) == IntPoly{0, 1});
  const std::vector<IntPoly> mix{IntPoly{1, 1}, IntPoly{-3}, IntPoly{0, 0, 1}};
  CHECK(rl_l_poly(mix, -2) == IntPoly{1, 1} + Int(-2) * IntPoly{-3} + Int(4) * IntPoly{0, 0, 1});
}

TEST_CASE("egf series") {
  for (unsigned r = 0; r <= 3; ++r) {
    for (unsigned s = 0; s <= 3; ++s) {
      const EgfSeries series = egf_series(r, s, 10);
      CHECK(series.coeff(0) == RatPoly::constant(Rat(factorial(s))));
      for (unsigned n = 0; n <= 10; ++n) {
        CHECK(series.coeff(n) * Rat(factorial(n)) == RatPoly::from_int(fubini_rs(n, r, s)));
      }
    }
  }
  const EgfSeries base = egf_series(0, 0, 4);
  CHECK(base.coeff(2) == RatPoly(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1)}));
  CHECK_THROWS_AS(egf_series(0, 0, 25), GuardError);
}

TEST_CASE("log egf matches the closed form") {
  for (unsigned r = 0; r <= 3; ++r) {
    for (unsigned s = 0; s <= 3; ++s) {
      CHECK(log_egf_series(r, s, 10) == log_egf_rhs(r, s, 10));
    }
  }
  const EgfSeries l = log_egf_series(0, 0, 4);
  CHECK(l.coeff(0).is_zero());
  CHECK(l.coeff(1) == RatPoly{0, 1});
  CHECK(l.coeff(2) == RatPoly(std::vector<Rat>{Rat(0), Rat(1, 2), Rat(1, 2)}));
}

TEST_CASE("series evaluation certificate") {
  const Rat eps = Rat(1, Int(1) << 20);
  const IntPoly u3{0, 0, 0, 1};
  CHECK(abs(series_eval(u3, Rat(1), eps) - 13) <= eps);
  CHECK(abs(series_eval(IntPoly{1}, Rat(1), eps) - 1) <= eps);
  CHECK(series_eval(IntPoly{0, 1}, Rat(0), eps) == 0);
  CHECK_THROWS_AS(series_eval(u3, Rat(1), Rat(0)), std::domain_error);
  CHECK_THROWS_AS(series_eval(u3, Rat(-1, 4), eps), std::domain_error);

  const std::vector<IntPoly> fs{IntPoly{1},          IntPoly{0, 1}, IntPoly{0, 0, 0, 1},
                                IntPoly{3, -2, 0, 5}, IntPoly{-7, 1}, IntPoly{}};
  const std::vector<Rat> xs{Rat(0), Rat(1, 2), Rat(1), Rat(2)};
  for (const IntPoly& f : fs) {
    const IntPoly evaluated = umbral_eval(UmbralExpr::from_int_poly(f));
    for (const Rat& x : xs) {
      const Rat got = series_eval(f, x, eps);
      CHECK(abs(got - evaluated(x)) <= eps);
    }
  }
}

TEST_CASE("real-rootedness certification") {
  CHECK(real_roots_certify(2, 0, 0).status == CheckStatus::Pass);
  CHECK(real_roots_certify(1, 0, 0).status == CheckStatus::Pass);
  CHECK(real_roots_certify(3, 1, 1).status == CheckStatus::Pass);
  CHECK_THROWS_AS(real_roots_certify(0, 0, 0), std::invalid_argument);
}

TEST_CASE("derivative identity") {
  CHECK(derivative_identity_check(0, 0, 0).status == CheckStatus::Pass);
  CHECK(derivative_identity_check(1, 0, 0).status == CheckStatus::Pass);
  CHECK(derivative_identity_check(2, 1, 0).status == CheckStatus::Pass);
  for (unsigned n = 0; n <= 6; ++n) {
    for (unsigned r = 0; r <= 3; ++r) {
      for (unsigned s = 0; s <= 3; ++s) {
        CHECK(derivative_identity_check(n, r, s).status == CheckStatus::Pass);
      }
    }
  }
}
