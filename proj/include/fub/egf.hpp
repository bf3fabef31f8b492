#pragma once

#include <vector>

#include "fub/rat_poly.hpp"

namespace fub {

inline constexpr unsigned kEgfOrderMax = 24;

/// Truncated series in t whose coefficients are rational polynomials in x.
/// coeff(n) is the literal t^n coefficient; no n! convention is baked in.
class EgfSeries {
 public:
  explicit EgfSeries(unsigned order) : c_(order + 1) {}

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const RatPoly& coeff(unsigned n) const { return c_.at(n); }
  void set_coeff(unsigned n, RatPoly p) { c_.at(n) = std::move(p); }

  EgfSeries& operator+=(const EgfSeries& rhs);
  /// Truncating product at the common order.
  EgfSeries& operator*=(const EgfSeries& rhs);
  EgfSeries& operator*=(const Rat& scalar);

  bool operator==(const EgfSeries&) const = default;

 private:
  std::vector<RatPoly> c_;
};

/// s! exp(rt) (1 - x(exp(t)-1))^{-s-1}, truncated: coeff(n) = F_n(x;r,s)/n!.
/// Throws GuardError for order > kEgfOrderMax.
EgfSeries egf_series(unsigned r, unsigned s, unsigned order);

/// Formal log of egf_series(r,s)/s!, by the standard series-log recursion.
EgfSeries log_egf_series(unsigned r, unsigned s, unsigned order);

/// The closed form the log is compared against:
/// (r+(s+1)x) t + (s+1)(x+1) sum_{n>=2} F_{n-1}(x) t^n/n!.
EgfSeries log_egf_rhs(unsigned r, unsigned s, unsigned order);

}  // namespace fub
