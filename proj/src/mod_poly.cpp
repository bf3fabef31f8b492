#include "fub/mod_poly.hpp"

#include <stdexcept>
#include <utility>

namespace fub {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

void validate_modulus(std::uint32_t p) {
  if (p > ModPoly::kMaxModulus) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " exceeds 2^31 - 1");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
}

}  // namespace

std::uint32_t mod_inv(long long a, std::uint32_t p) {
  validate_modulus(p);
  long long r = a % static_cast<long long>(p);
  if (r < 0) r += p;
  if (r == 0) throw NotInvertibleError("no inverse of 0 modulo " + std::to_string(p));
  // extended Euclid on (r, p)
  long long t = 0, new_t = 1;
  long long rr = p, new_r = r;
  while (new_r != 0) {
    const long long q = rr / new_r;
    t = std::exchange(new_t, t - q * new_t);
    rr = std::exchange(new_r, rr - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

ModPoly::ModPoly(std::uint32_t p) : p_(p) { validate_modulus(p); }

ModPoly::ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  validate_modulus(p);
  for (std::uint32_t& v : c_) v %= p_;
  normalize();
}

void ModPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint32_t ModPoly::coeff(std::size_t i) const {
  return i < c_.size() ? c_[i] : 0;
}

void ModPoly::check_same_modulus(const ModPoly& other) const {
  if (p_ != other.p_) throw std::invalid_argument("mixed moduli in ModPoly arithmetic");
}

ModPoly& ModPoly::operator+=(const ModPoly& rhs) {
  check_same_modulus(rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
    c_[i] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(c_[i]) + rhs.c_[i]) % p_);
  }
  normalize();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& rhs) {
  check_same_modulus(rhs);
  if (c_.size() < rhs.c_.size()) c_.resize(rhs.c_.size(), 0);
  for (std::size_t i = 0; i < rhs.c_.size(); ++i) {
    c_[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(c_[i]) + p_ - rhs.c_[i]) % p_);
  }
  normalize();
  return *this;
}

ModPoly& ModPoly::operator*=(const ModPoly& rhs) {
  check_same_modulus(rhs);
  *this = *this * rhs;
  return *this;
}

ModPoly& ModPoly::operator*=(std::uint32_t scalar) {
  scalar %= p_;
  if (scalar == 0) {
    c_.clear();
    return *this;
  }
  for (std::uint32_t& v : c_) {
    v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * scalar % p_);
  }
  normalize();
  return *this;
}

std::vector<std::string> ModPoly::coeff_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (std::uint32_t v : c_) out.push_back(std::to_string(v));
  return out;
}

ModPoly operator+(ModPoly lhs, const ModPoly& rhs) {
  lhs += rhs;
  return lhs;
}

ModPoly operator-(ModPoly lhs, const ModPoly& rhs) {
  lhs -= rhs;
  return lhs;
}

ModPoly operator*(const ModPoly& lhs, const ModPoly& rhs) {
  if (lhs.modulus() != rhs.modulus()) {
    throw std::invalid_argument("mixed moduli in ModPoly arithmetic");
  }
  const std::uint64_t p = lhs.modulus();
  if (lhs.is_zero() || rhs.is_zero()) return ModPoly(lhs.modulus());
  const auto a = lhs.coeffs();
  const auto b = rhs.coeffs();
  std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return ModPoly(lhs.modulus(), std::move(out));
}

ModPoly operator*(ModPoly p, std::uint32_t scalar) {
  p *= scalar;
  return p;
}

std::uint32_t mod_residue(const Int& v, std::uint32_t p) {
  Int r = v % p;
  if (r < 0) r += p;
  return r.convert_to<std::uint32_t>();
}

ModPoly reduce_mod(const IntPoly& a, std::uint32_t p) {
  std::vector<std::uint32_t> c;
  c.reserve(a.coeffs().size());
  for (const Int& v : a.coeffs()) c.push_back(mod_residue(v, p));
  return ModPoly(p, std::move(c));
}

}  // namespace fub
