#include "fub/numeric.hpp"

#include <mutex>
#include <vector>

namespace fub {

namespace {
std::mutex fact_mu;
std::vector<Int> fact_cache{1};
}  // namespace

Int factorial(unsigned n) {
  std::lock_guard lock(fact_mu);
  while (fact_cache.size() <= n) {
    fact_cache.push_back(fact_cache.back() * Int(fact_cache.size()));
  }
  return fact_cache[n];
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int num = 1;
  for (long long i = 0; i < k; ++i) num *= Int(n - i);
  return num / factorial(static_cast<unsigned>(k));
}

Int falling(const Int& a, unsigned n) {
  Int r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a - Int(i);
  return r;
}

Int rising(const Int& a, unsigned n) {
  Int r = 1;
  for (unsigned i = 0; i < n; ++i) r *= a + Int(i);
  return r;
}

Int int_pow(const Int& a, unsigned e) {
  Int r = 1;
  Int base = a;
  for (unsigned i = e; i > 0; i >>= 1) {
    if (i & 1u) r *= base;
    if (i > 1) base *= base;
  }
  return r;
}

}  // namespace fub
