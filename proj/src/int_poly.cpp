#include "fub/int_poly.hpp"

#include <utility>

namespace fub {

namespace {
const Int kZero = 0;
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  normalize();
}

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(Int c, std::size_t k) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Int(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

void IntPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Int(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& scalar) {
  if (scalar == 0) {
    c_.clear();
    return *this;
  }
  for (Int& c : c_) c *= scalar;
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly p = *this;
  for (Int& c : p.c_) c = -c;
  return p;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Int(i);
  return IntPoly(std::move(d));
}

Rat IntPoly::operator()(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + Rat(*it);
  return r;
}

Int IntPoly::at_int(const Int& x) const {
  Int r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly IntPoly::divided_by_x_pow(std::size_t k) const {
  if (k == 0) return *this;
  if (c_.size() < k && !is_zero()) {
    throw DivisibilityError("polynomial not divisible by x^" + std::to_string(k));
  }
  for (std::size_t i = 0; i < k && i < c_.size(); ++i) {
    if (c_[i] != 0) {
      throw DivisibilityError("polynomial not divisible by x^" + std::to_string(k));
    }
  }
  if (c_.size() <= k) return {};
  return IntPoly(std::vector<Int>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

std::vector<std::string> IntPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const Int& c : c_) out.push_back(c.str());
  return out;
}

IntPoly operator+(IntPoly lhs, const IntPoly& rhs) {
  lhs += rhs;
  return lhs;
}

IntPoly operator-(IntPoly lhs, const IntPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto a = lhs.coeffs();
  const auto b = rhs.coeffs();
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly p, const Int& scalar) {
  p *= scalar;
  return p;
}

IntPoly operator*(const Int& scalar, IntPoly p) {
  p *= scalar;
  return p;
}

IntPoly pow(const IntPoly& base, unsigned e) {
  IntPoly r = IntPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

IntPoly x_pow(std::size_t k) { return IntPoly::monomial(1, k); }

IntPoly x_plus_1_pow(unsigned k) {
  std::vector<Int> c(k + 1);
  for (unsigned j = 0; j <= k; ++j) c[j] = binomial(k, j);
  return IntPoly(std::move(c));
}

}  // namespace fub
