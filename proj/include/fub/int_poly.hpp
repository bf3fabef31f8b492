#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "fub/numeric.hpp"

namespace fub {

/// Dense univariate polynomial in x over arbitrary-precision integers.
/// coeffs[i] is the coefficient of x^i. Normalized: the highest stored
/// coefficient is nonzero and the zero polynomial stores nothing, so
/// degree() is -1 for zero. Values are immutable in spirit: every
/// operation returns a fresh normalized polynomial.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(Int c);
  static IntPoly monomial(Int c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Int& coeff(std::size_t i) const;
  std::span<const Int> coeffs() const { return c_; }

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  IntPoly& operator*=(const Int& scalar);
  IntPoly operator-() const;

  IntPoly derivative() const;
  Rat operator()(const Rat& x) const;
  Int at_int(const Int& x) const;

  /// Exact division by x^k; throws DivisibilityError if any of the k
  /// lowest coefficients is nonzero.
  IntPoly divided_by_x_pow(std::size_t k) const;

  bool operator==(const IntPoly&) const = default;

  /// Coefficients as decimal strings, low to high.
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();
  std::vector<Int> c_;
};

IntPoly operator+(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly lhs, const IntPoly& rhs);
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
IntPoly operator*(IntPoly p, const Int& scalar);
IntPoly operator*(const Int& scalar, IntPoly p);

IntPoly pow(const IntPoly& base, unsigned e);
IntPoly x_pow(std::size_t k);

/// (x+1)^k, the workhorse weight of every congruence sum.
IntPoly x_plus_1_pow(unsigned k);

}  // namespace fub
