#include "fub/umbra.hpp"

#include <utility>

#include "fub/families.hpp"

namespace fub {

namespace {
const IntPoly kZero{};
}

void UmbralExpr::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UmbralExpr UmbralExpr::power(unsigned n) {
  UmbralExpr e;
  e.c_.assign(n + 1, IntPoly{});
  e.c_[n] = IntPoly::constant(1);
  return e;
}

UmbralExpr UmbralExpr::lift(IntPoly c) {
  UmbralExpr e;
  if (!c.is_zero()) e.c_.push_back(std::move(c));
  return e;
}

UmbralExpr UmbralExpr::falling_shift(long long a, unsigned k) {
  UmbralExpr e = lift(IntPoly::constant(1));
  for (unsigned i = 0; i < k; ++i) {
    UmbralExpr factor;  // u + (a - i)
    factor.c_.push_back(IntPoly::constant(Int(a) - i));
    factor.c_.push_back(IntPoly::constant(1));
    factor.normalize();
    e *= factor;
  }
  return e;
}

UmbralExpr UmbralExpr::from_int_poly(const IntPoly& f) {
  UmbralExpr e;
  e.c_.reserve(f.coeffs().size());
  for (const Int& c : f.coeffs()) e.c_.push_back(IntPoly::constant(c));
  e.normalize();
  return e;
}

UmbralExpr UmbralExpr::from_u_coeffs(std::vector<IntPoly> coeffs) {
  UmbralExpr e;
  e.c_ = std::move(coeffs);
  e.normalize();
  return e;
}

UmbralExpr UmbralExpr::shifted(long long a) const {
  // Horner in (u + a).
  UmbralExpr shift_factor;
  shift_factor.c_.push_back(IntPoly::constant(a));
  shift_factor.c_.push_back(IntPoly::constant(1));
  shift_factor.normalize();
  UmbralExpr out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out *= shift_factor;
    out += lift(*it);
  }
  return out;
}

const IntPoly& UmbralExpr::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

UmbralExpr& UmbralExpr::operator+=(const UmbralExpr& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size());
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

UmbralExpr& UmbralExpr::operator*=(const UmbralExpr& rhs) {
  *this = *this * rhs;
  return *this;
}

UmbralExpr& UmbralExpr::operator*=(const IntPoly& scalar) {
  if (scalar.is_zero()) {
    c_.clear();
    return *this;
  }
  for (IntPoly& c : c_) c *= scalar;
  return *this;
}

IntPoly UmbralExpr::at(const Int& a) const {
  IntPoly out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    out *= a;
    out += *it;
  }
  return out;
}

UmbralExpr operator+(UmbralExpr lhs, const UmbralExpr& rhs) {
  lhs += rhs;
  return lhs;
}

UmbralExpr operator*(const UmbralExpr& lhs, const UmbralExpr& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto dl = static_cast<std::size_t>(lhs.degree());
  const auto dr = static_cast<std::size_t>(rhs.degree());
  std::vector<IntPoly> out(dl + dr + 1);
  for (std::size_t i = 0; i <= dl; ++i) {
    if (lhs.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j <= dr; ++j) {
      out[i + j] += lhs.coeff(i) * rhs.coeff(j);
    }
  }
  return UmbralExpr::from_u_coeffs(std::move(out));
}

UmbralExpr operator*(UmbralExpr e, const IntPoly& scalar) {
  e *= scalar;
  return e;
}

UmbralExpr pow(const UmbralExpr& base, unsigned e) {
  UmbralExpr r = UmbralExpr::lift(IntPoly::constant(1));
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

UmbralExpr shifted_power(long long a, unsigned n) {
  return UmbralExpr::power(n).shifted(a);
}

IntPoly umbral_eval(const UmbralExpr& e) {
  IntPoly out;
  for (int i = 0; i <= e.degree(); ++i) {
    const IntPoly& c = e.coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    out += c * fubini(static_cast<unsigned>(i));
  }
  return out;
}

}  // namespace fub
