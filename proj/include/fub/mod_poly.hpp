#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fub/int_poly.hpp"

namespace fub {

/// Primality by trial division; intended for machine-width moduli.
bool is_prime(std::uint64_t p);

/// Inverse of a modulo the prime p; throws NotInvertibleError when p | a.
std::uint32_t mod_inv(long long a, std::uint32_t p);

/// Polynomial over Z_p for a prime p < 2^31, residues stored in [0, p).
/// The modulus is validated on construction. Products of two residues fit
/// in 64 bits, so all arithmetic stays exact in machine words.
class ModPoly {
 public:
  static constexpr std::uint32_t kMaxModulus = 0x7fffffffu;  // < 2^31

  explicit ModPoly(std::uint32_t p);
  ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint32_t coeff(std::size_t i) const;
  std::span<const std::uint32_t> coeffs() const { return c_; }

  ModPoly& operator+=(const ModPoly& rhs);
  ModPoly& operator-=(const ModPoly& rhs);
  ModPoly& operator*=(const ModPoly& rhs);
  ModPoly& operator*=(std::uint32_t scalar);

  bool operator==(const ModPoly&) const = default;
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();
  void check_same_modulus(const ModPoly& other) const;
  std::uint32_t p_ = 0;
  std::vector<std::uint32_t> c_;
};

ModPoly operator+(ModPoly lhs, const ModPoly& rhs);
ModPoly operator-(ModPoly lhs, const ModPoly& rhs);
ModPoly operator*(const ModPoly& lhs, const ModPoly& rhs);
ModPoly operator*(ModPoly p, std::uint32_t scalar);

/// Coefficientwise reduction into [0, p).
ModPoly reduce_mod(const IntPoly& a, std::uint32_t p);

/// Residue of an arbitrary-precision integer in [0, p).
std::uint32_t mod_residue(const Int& v, std::uint32_t p);

}  // namespace fub
