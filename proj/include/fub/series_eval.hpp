#pragma once

#include "fub/int_poly.hpp"
#include "fub/numeric.hpp"

namespace fub {

/// Evaluates f(F_x) at a rational x >= 0 through the convergent series
/// (1/(1+x)) sum_k f(k) (x/(1+x))^k, entirely in exact rationals.
///
/// Returns a partial sum S_K whose distance from the true value is at most
/// eps. The tail is certified geometrically: with w = x/(1+x) and
/// theta = (1+w)/2, once |f(k+1)|w <= theta|f(k)| has held for three
/// consecutive k, the remaining terms are dominated by the geometric
/// series with ratio theta, giving tail <= 2|f(K+1)|w^{K+1}.
///
/// Throws std::domain_error for x < 0 (alternating weights are outside the
/// certificate) or eps <= 0.
Rat series_eval(const IntPoly& f, const Rat& x, const Rat& eps);

}  // namespace fub
