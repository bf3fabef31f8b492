#include "fub/families.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "fub/stirling.hpp"

namespace fub {

namespace {

std::mutex fub_mu;
std::vector<IntPoly> fubini_cache;
std::map<std::tuple<unsigned, unsigned, unsigned>, IntPoly> fubini_rs_cache;

IntPoly build_fubini(unsigned n) {
  std::vector<Int> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = stirling2(n, k) * factorial(k);
  return IntPoly(std::move(c));
}

IntPoly build_fubini_rs(unsigned n, unsigned r, unsigned s) {
  std::vector<Int> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = stirling2_r(n, k, r) * factorial(k + s);
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly fubini(unsigned n) {
  std::lock_guard lock(fub_mu);
  while (fubini_cache.size() <= n) {
    fubini_cache.push_back(build_fubini(static_cast<unsigned>(fubini_cache.size())));
  }
  return fubini_cache[n];
}

IntPoly fubini_rs(unsigned n, unsigned r, unsigned s) {
  const auto key = std::make_tuple(n, r, s);
  std::lock_guard lock(fub_mu);
  auto it = fubini_rs_cache.find(key);
  if (it == fubini_rs_cache.end()) {
    it = fubini_rs_cache.emplace(key, build_fubini_rs(n, r, s)).first;
  }
  return it->second;
}

MultiRSpec MultiRSpec::make(std::vector<unsigned> rs) {
  for (std::size_t i = 1; i < rs.size(); ++i) {
    if (rs[i - 1] > rs[i]) {
      throw std::invalid_argument("multi-r parameters must be ascending");
    }
  }
  IntPoly a = IntPoly::constant(1);
  for (unsigned r : rs) {
    // (u)_r = u(u-1)...(u-r+1) as a polynomial in u
    IntPoly f = IntPoly::constant(1);
    for (unsigned i = 0; i < r; ++i) {
      f *= IntPoly(std::vector<Int>{Int(-static_cast<long long>(i)), Int(1)});
    }
    a *= f;
  }
  return MultiRSpec{std::move(rs), std::move(a)};
}

unsigned MultiRSpec::total() const {
  unsigned t = 0;
  for (unsigned r : rs) t += r;
  return t;
}

IntPoly fubini_multi(unsigned n, const MultiRSpec& spec) {
  IntPoly sum;
  for (int k = 0; k <= spec.a.degree(); ++k) {
    const Int& ak = spec.a.coeff(static_cast<std::size_t>(k));
    if (ak == 0) continue;
    sum += ak * fubini(n + static_cast<unsigned>(k));
  }
  return sum.divided_by_x_pow(spec.last_r());
}

IntPoly p_poly(unsigned n, unsigned r) {
  std::vector<Int> c(n + 1);
  for (unsigned j = 0; j <= n; ++j) {
    Int v = binomial(j + r, r);
    c[n - j] = (j % 2 == 0) ? v : -v;
  }
  return IntPoly(std::move(c));
}

IntPoly t_poly(unsigned n, unsigned r) {
  std::vector<Int> c(n + 1);
  for (unsigned j = 0; j <= n; ++j) c[j] = binomial(n + r, j + r);
  return IntPoly(std::move(c));
}

IntPoly rl_r_poly(std::span<const IntPoly> a, unsigned n, unsigned r, unsigned s) {
  IntPoly out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    out += a[i] * fubini_rs(n + static_cast<unsigned>(i), r, s);
  }
  return out;
}

IntPoly rl_l_poly(std::span<const IntPoly> a, const Int& y) {
  IntPoly out;
  Int yk = 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += a[i] * yk;
    yk *= y;
  }
  return out;
}

}  // namespace fub
