#include "fub/series_eval.hpp"

#include <stdexcept>

namespace fub {

Rat series_eval(const IntPoly& f, const Rat& x, const Rat& eps) {
  if (eps <= 0) throw std::domain_error("eps must be positive");
  if (x < 0) throw std::domain_error("certified evaluation requires x >= 0");
  if (f.is_zero()) return 0;

  const Rat w = x / (1 + x);
  if (w == 0) return Rat(f.at_int(0)) / (1 + x);

  const Rat theta = (1 + w) / 2;
  Rat sum = 0;
  Rat wk = 1;  // w^k
  unsigned consecutive = 0;
  for (unsigned k = 0;; ++k) {
    const Rat fk = Rat(f.at_int(k));
    sum += fk * wk;
    const Rat fk1 = Rat(f.at_int(Int(k) + 1));
    // ratio test |f(k+1)| w <= theta |f(k)|; a zero f(k) cannot certify
    if (fk != 0 && abs(fk1) * w <= theta * abs(fk)) {
      ++consecutive;
    } else {
      consecutive = 0;
    }
    if (consecutive >= 3) {
      // tail <= |f(k+1)| w^{k+1} / ((1+x)(1-theta)) = 2 |f(k+1)| w^{k+1}
      const Rat tail = 2 * abs(fk1) * wk * w;
      if (tail <= eps) break;
    }
    wk *= w;
  }
  return sum / (1 + x);
}

}  // namespace fub
