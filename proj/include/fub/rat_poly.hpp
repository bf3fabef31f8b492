#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fub/int_poly.hpp"
#include "fub/numeric.hpp"

namespace fub {

/// Dense univariate polynomial over exact rationals, normalized like
/// IntPoly (trailing nonzero coefficient; zero polynomial is empty).
/// cpp_rational keeps every coefficient in lowest terms with a positive
/// denominator.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);
  RatPoly(std::initializer_list<long long> coeffs);
  static RatPoly from_int(const IntPoly& p);
  static RatPoly constant(Rat c);
  static RatPoly monomial(Rat c, std::size_t k);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(std::size_t i) const;
  std::span<const Rat> coeffs() const { return c_; }

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const Rat& scalar);
  RatPoly operator-() const;

  RatPoly derivative() const;
  Rat operator()(const Rat& x) const;

  struct DivMod;
  /// Euclidean division; divisor must be nonzero.
  DivMod divmod(const RatPoly& divisor) const;

  bool operator==(const RatPoly&) const = default;
  std::vector<std::string> coeff_strings() const;

 private:
  void normalize();
  std::vector<Rat> c_;
};

struct RatPoly::DivMod {
  RatPoly quot;
  RatPoly rem;
};

RatPoly operator+(RatPoly lhs, const RatPoly& rhs);
RatPoly operator-(RatPoly lhs, const RatPoly& rhs);
RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
RatPoly operator*(RatPoly p, const Rat& scalar);

/// Monic gcd via the Euclidean algorithm; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

/// f / gcd(f, f'), the radical of f up to a constant.
RatPoly squarefree_part(const RatPoly& f);

}  // namespace fub
