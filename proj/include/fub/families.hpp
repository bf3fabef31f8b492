#pragma once

#include <span>
#include <vector>

#include "fub/int_poly.hpp"

namespace fub {

/// Fubini polynomial F_n(x) = sum_k {n,k} k! x^k. Memoized.
IntPoly fubini(unsigned n);

/// (r,s)-Fubini polynomial F_n(x;r,s) = sum_k {n+r,k+r}_r (k+s)! x^k.
IntPoly fubini_rs(unsigned n, unsigned r, unsigned s);

/// Parameter vector 0 <= r_1 <= ... <= r_q together with the coefficient
/// sequence a of (u)_{r_1}...(u)_{r_q}, stored as a polynomial in u.
struct MultiRSpec {
  std::vector<unsigned> rs;
  IntPoly a;

  /// Validates the ascending constraint and expands the falling-factorial
  /// product; throws std::invalid_argument on a non-ascending vector.
  static MultiRSpec make(std::vector<unsigned> rs);

  unsigned last_r() const { return rs.empty() ? 0u : rs.back(); }
  unsigned total() const;
};

/// Multi-r Fubini polynomial via the expansion
/// x^{r_q} F_n(x; r_q) = sum_k a_k F_{n+k}(x); the exact division by
/// x^{r_q} doubles as a built-in consistency assertion.
IntPoly fubini_multi(unsigned n, const MultiRSpec& spec);

/// P_n(x;r) = sum_j (-1)^j C(j+r, r) x^{n-j}.
IntPoly p_poly(unsigned n, unsigned r);

/// T_n(x;r) = sum_j C(n+r, j+r) x^j.
IntPoly t_poly(unsigned n, unsigned r);

/// R_{n,t}(x;r,s) = sum_i a_i(x) F_{n+i}(x;r,s).
IntPoly rl_r_poly(std::span<const IntPoly> a, unsigned n, unsigned r, unsigned s);

/// L_t(x,y) = sum_i a_i(x) y^i at an integer y.
IntPoly rl_l_poly(std::span<const IntPoly> a, const Int& y);

}  // namespace fub
