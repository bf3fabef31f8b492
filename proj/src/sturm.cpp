#include "fub/sturm.hpp"

#include <stdexcept>
#include <vector>

namespace fub {

namespace {

int sign_of(const Rat& v) { return v == 0 ? 0 : (v < 0 ? -1 : 1); }

// Scale to +-1 leading coefficient; positive factor, signs preserved.
RatPoly sign_normalized(RatPoly p) {
  if (p.is_zero()) return p;
  Rat lead = p.coeff(static_cast<std::size_t>(p.degree()));
  if (lead < 0) lead = -lead;
  p *= Rat(1) / lead;
  return p;
}

std::vector<RatPoly> sturm_chain(const RatPoly& g) {
  std::vector<RatPoly> chain{g, g.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() >= 1) {
    RatPoly rem = chain[chain.size() - 2].divmod(chain.back()).rem;
    if (rem.is_zero()) break;  // cannot happen for squarefree g
    chain.push_back(sign_normalized(-rem));
  }
  return chain;
}

int variations_at_minus_inf(const std::vector<RatPoly>& chain) {
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    if (p.is_zero()) continue;
    int s = sign_of(p.coeff(static_cast<std::size_t>(p.degree())));
    if (p.degree() % 2 == 1) s = -s;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

int variations_at_zero(const std::vector<RatPoly>& chain) {
  int var = 0, prev = 0;
  for (const RatPoly& p : chain) {
    const int s = sign_of(p.coeff(0));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

RootCount sturm_count_nonpositive(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("Sturm count of the zero polynomial");

  RatPoly g = squarefree_part(f);
  RootCount out;
  out.squarefree_degree = g.degree();
  if (g.degree() <= 0) return out;

  // Root at 0 is simple in g; peel it off so the chain is evaluated at a
  // non-root of g.
  int root_at_zero = 0;
  if (g.coeff(0) == 0) {
    root_at_zero = 1;
    std::vector<Rat> shifted(g.coeffs().begin() + 1, g.coeffs().end());
    g = RatPoly(std::move(shifted));
  }
  int negative_roots = 0;
  if (g.degree() >= 1) {
    const auto chain = sturm_chain(g);
    negative_roots = variations_at_minus_inf(chain) - variations_at_zero(chain);
  }
  out.nonpositive_roots = negative_roots + root_at_zero;
  return out;
}

}  // namespace fub
