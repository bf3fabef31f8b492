#include "fub/rat_poly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fub {

namespace {
const Rat kZero = 0;
}

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

RatPoly::RatPoly(std::initializer_list<long long> coeffs) {
  c_.reserve(coeffs.size());
  for (long long v : coeffs) c_.emplace_back(v);
  normalize();
}

RatPoly RatPoly::from_int(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coeffs().size());
  for (const Int& v : p.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

RatPoly RatPoly::constant(Rat c) {
  RatPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

RatPoly RatPoly::monomial(Rat c, std::size_t k) {
  RatPoly p;
  if (c != 0) {
    p.c_.assign(k + 1, Rat(0));
    p.c_[k] = std::move(c);
  }
  return p;
}

void RatPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : kZero;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] += rhs.c_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), Rat(0));
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) c_[i] -= rhs.c_[i];
  normalize();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    c_.clear();
    return *this;
  }
  for (Rat& c : c_) c *= scalar;
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly p = *this;
  for (Rat& c : p.c_) c = -c;
  return p;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rat> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rat(i);
  return RatPoly(std::move(d));
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

RatPoly::DivMod RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  RatPoly rem = *this;
  std::vector<Rat> quot;
  const int dd = divisor.degree();
  if (rem.degree() >= dd) quot.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rat(0));
  const Rat& lead = divisor.c_.back();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
    Rat q = rem.c_.back() / lead;
    quot[shift] = q;
    // rem -= q x^shift * divisor
    for (std::size_t i = 0; i < divisor.c_.size(); ++i) {
      rem.c_[shift + i] -= q * divisor.c_[i];
    }
    rem.normalize();
  }
  return {RatPoly(std::move(quot)), std::move(rem)};
}

std::vector<std::string> RatPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const Rat& c : c_) {
    std::ostringstream os;
    os << numerator(c);
    if (denominator(c) != 1) os << '/' << denominator(c);
    out.push_back(os.str());
  }
  return out;
}

RatPoly operator+(RatPoly lhs, const RatPoly& rhs) {
  lhs += rhs;
  return lhs;
}

RatPoly operator-(RatPoly lhs, const RatPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  const auto a = lhs.coeffs();
  const auto b = rhs.coeffs();
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return RatPoly(std::move(out));
}

RatPoly operator*(RatPoly p, const Rat& scalar) {
  p *= scalar;
  return p;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    const Rat lead = a.coeff(static_cast<std::size_t>(a.degree()));
    a *= Rat(1) / lead;  // monic
  }
  return a;
}

RatPoly squarefree_part(const RatPoly& f) {
  if (f.is_zero()) return f;
  if (f.degree() == 0) return RatPoly::constant(1);
  const RatPoly g = gcd(f, f.derivative());
  return f.divmod(g).quot;
}

}  // namespace fub
