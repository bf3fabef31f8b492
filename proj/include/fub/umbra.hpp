#pragma once

#include <cstddef>
#include <vector>

#include "fub/int_poly.hpp"

namespace fub {

/// Polynomial in the umbral variable u with IntPoly coefficients.
/// Products are formed symbolically in u; the Fubini functional
/// (umbral_eval) is applied once, afterwards, which is the semantics
/// every umbral identity relies on.
class UmbralExpr {
 public:
  UmbralExpr() = default;

  static UmbralExpr power(unsigned n);                       // u^n
  static UmbralExpr lift(IntPoly c);                         // constant in u
  static UmbralExpr falling_shift(long long a, unsigned k);  // (u+a)_k
  static UmbralExpr from_int_poly(const IntPoly& f);         // f read in u
  static UmbralExpr from_u_coeffs(std::vector<IntPoly> coeffs);

  /// Substitutes u -> u + a; a ring homomorphism.
  UmbralExpr shifted(long long a) const;

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const IntPoly& coeff(std::size_t i) const;

  UmbralExpr& operator+=(const UmbralExpr& rhs);
  UmbralExpr& operator*=(const UmbralExpr& rhs);
  UmbralExpr& operator*=(const IntPoly& scalar);

  /// Ordinary substitution u = a (not the umbral functional).
  IntPoly at(const Int& a) const;

  bool operator==(const UmbralExpr&) const = default;

 private:
  void normalize();
  std::vector<IntPoly> c_;
};

UmbralExpr operator+(UmbralExpr lhs, const UmbralExpr& rhs);
UmbralExpr operator*(const UmbralExpr& lhs, const UmbralExpr& rhs);
UmbralExpr operator*(UmbralExpr e, const IntPoly& scalar);
UmbralExpr pow(const UmbralExpr& base, unsigned e);

/// (u+a)^n as an expression.
UmbralExpr shifted_power(long long a, unsigned n);

/// The Fubini umbra: linear over the IntPoly coefficients, u^i -> F_i(x).
IntPoly umbral_eval(const UmbralExpr& e);

}  // namespace fub
