#include "fub/egf.hpp"

#include <string>
#include <utility>

#include "fub/families.hpp"
#include "fub/numeric.hpp"

namespace fub {

namespace {

void check_order(unsigned order) {
  if (order > kEgfOrderMax) {
    throw GuardError("series order limited to " + std::to_string(kEgfOrderMax) +
                     ", got " + std::to_string(order));
  }
}

}  // namespace

EgfSeries& EgfSeries::operator+=(const EgfSeries& rhs) {
  for (unsigned n = 0; n <= order() && n <= rhs.order(); ++n) {
    c_[n] += rhs.coeff(n);
  }
  return *this;
}

EgfSeries& EgfSeries::operator*=(const EgfSeries& rhs) {
  const unsigned ord = order();
  EgfSeries out(ord);
  for (unsigned n = 0; n <= ord; ++n) {
    RatPoly acc;
    for (unsigned k = 0; k <= n && k <= rhs.order(); ++k) {
      acc += c_[n - k] * rhs.coeff(k);
    }
    out.c_[n] = std::move(acc);
  }
  *this = std::move(out);
  return *this;
}

EgfSeries& EgfSeries::operator*=(const Rat& scalar) {
  for (RatPoly& c : c_) c *= scalar;
  return *this;
}

EgfSeries egf_series(unsigned r, unsigned s, unsigned order) {
  check_order(order);
  // e^t - 1, valuation 1
  EgfSeries em1(order);
  for (unsigned n = 1; n <= order; ++n) {
    em1.set_coeff(n, RatPoly::constant(Rat(1) / Rat(factorial(n))));
  }
  // (1 - x(e^t-1))^{-s-1} = sum_j C(s+j, j) x^j (e^t-1)^j; terms with
  // j > order vanish under truncation.
  EgfSeries geom(order);
  geom.set_coeff(0, RatPoly::constant(1));
  EgfSeries em1_pow(order);
  em1_pow.set_coeff(0, RatPoly::constant(1));
  for (unsigned j = 1; j <= order; ++j) {
    em1_pow *= em1;
    EgfSeries term = em1_pow;
    const RatPoly xj = RatPoly::monomial(Rat(binomial(s + j, j)), j);
    for (unsigned n = 0; n <= order; ++n) term.set_coeff(n, term.coeff(n) * xj);
    geom += term;
  }
  // e^{rt}
  EgfSeries ert(order);
  for (unsigned n = 0; n <= order; ++n) {
    ert.set_coeff(n, RatPoly::constant(Rat(int_pow(r, n)) / Rat(factorial(n))));
  }
  geom *= ert;
  geom *= Rat(factorial(s));
  return geom;
}

EgfSeries log_egf_series(unsigned r, unsigned s, unsigned order) {
  check_order(order);
  EgfSeries a = egf_series(r, s, order);
  a *= Rat(1) / Rat(factorial(s));  // unit constant term
  // n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
  EgfSeries l(order);
  for (unsigned n = 1; n <= order; ++n) {
    RatPoly acc = a.coeff(n) * Rat(n);
    for (unsigned k = 1; k < n; ++k) {
      acc -= l.coeff(k) * a.coeff(n - k) * Rat(k);
    }
    l.set_coeff(n, acc * (Rat(1) / Rat(n)));
  }
  return l;
}

EgfSeries log_egf_rhs(unsigned r, unsigned s, unsigned order) {
  check_order(order);
  EgfSeries out(order);
  if (order >= 1) {
    out.set_coeff(1, RatPoly(std::vector<Rat>{Rat(r), Rat(s + 1)}));
  }
  const RatPoly weight = RatPoly(std::vector<Rat>{Rat(s + 1), Rat(s + 1)});  // (s+1)(x+1)
  for (unsigned n = 2; n <= order; ++n) {
    RatPoly c = weight * RatPoly::from_int(fubini(n - 1));
    out.set_coeff(n, c * (Rat(1) / Rat(factorial(n))));
  }
  return out;
}

}  // namespace fub
