#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fub {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exact division was requested but the operand is not divisible.
class DivisibilityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A residue with no inverse modulo p.
class NotInvertibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured resource guard (oracle size, series order) was exceeded.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Int factorial(unsigned n);

/// C(n, k); zero outside 0 <= k <= n.
Int binomial(long long n, long long k);

/// Falling factorial (a)_n = a(a-1)...(a-n+1); empty product is 1.
Int falling(const Int& a, unsigned n);

/// Rising factorial <a>_n = a(a+1)...(a+n-1); empty product is 1.
Int rising(const Int& a, unsigned n);

/// a^e with the 0^0 = 1 convention.
Int int_pow(const Int& a, unsigned e);

}  // namespace fub
