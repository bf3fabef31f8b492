#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fub/int_poly.hpp"
#include "fub/oracle.hpp"
#include "fub/stirling.hpp"

using namespace fub;

namespace {

// Independent ground truth: count set partitions of [n] with k blocks by
// assigning each element to an existing block or a new one.
void count_partitions(unsigned n, unsigned placed, unsigned blocks, std::vector<Int>& by_blocks) {
  if (placed == n) {
    by_blocks[blocks] += 1;
    return;
  }
  for (unsigned b = 0; b < blocks; ++b) count_partitions(n, placed + 1, blocks, by_blocks);
  count_partitions(n, placed + 1, blocks + 1, by_blocks);
}

std::vector<Int> partition_counts(unsigned n) {
  std::vector<Int> by_blocks(n + 1, Int(0));
  if (n == 0) {
    by_blocks[0] = 1;
  } else {
    count_partitions(n, 1, 1, by_blocks);
  }
  return by_blocks;
}

// (x)_k as a polynomial in x
IntPoly falling_poly(unsigned k) {
  IntPoly f = IntPoly::constant(1);
  for (unsigned i = 0; i < k; ++i) {
    f *= IntPoly(std::vector<Int>{Int(-static_cast<long long>(i)), Int(1)});
  }
  return f;
}

// (x+r)^k as a polynomial in x
IntPoly shifted_pow(unsigned r, unsigned k) {
  IntPoly base{static_cast<long long>(r), 1};
  return pow(base, k);
}

}  // namespace

TEST_CASE("stirling2 against brute-force partition counts") {
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(6, 6) == 1);
  CHECK(stirling2(2, 5) == 0);
  for (unsigned n = 0; n <= 8; ++n) {
    const auto counts = partition_counts(n);
    for (unsigned k = 0; k <= n; ++k) CHECK(stirling2(n, k) == counts[k]);
  }
}

TEST_CASE("stirling2_r examples") {
  CHECK(stirling2_r(4, 2, 0) == stirling2(4, 2));
  CHECK(stirling2_r(1, 0, 2) == 2);
  CHECK(stirling2_r(3, 1, 1) == 7);
}

TEST_CASE("stirling2_r defining relation") {
  // (x+r)^n = sum_k {n+r, k+r}_r (x)_k
  for (unsigned r = 0; r <= 4; ++r) {
    for (unsigned n = 0; n <= 10; ++n) {
      IntPoly rhs;
      for (unsigned k = 0; k <= n; ++k) rhs += stirling2_r(n, k, r) * falling_poly(k);
      CHECK(shifted_pow(r, n) == rhs);
    }
  }
}

TEST_CASE("stirling1_r_unsigned examples and defining relation") {
  CHECK(stirling1_r_unsigned(5, 5, 3) == 1);
  // forced by the defining relation at r=0: (x)_2 = x^2 - x
  CHECK(stirling1_r_unsigned(2, 1, 0) == 1);
  CHECK(stirling1_r_unsigned(2, 0, 1) == 2);
  // (x)_n = sum_k (-1)^{n-k} [n+r, k+r]_r (x+r)^k
  for (unsigned r = 0; r <= 4; ++r) {
    for (unsigned n = 0; n <= 10; ++n) {
      IntPoly rhs;
      for (unsigned k = 0; k <= n; ++k) {
        const Int sign = (n - k) % 2 ? -1 : 1;
        rhs += (sign * stirling1_r_unsigned(n, k, r)) * shifted_pow(r, k);
      }
      CHECK(falling_poly(n) == rhs);
    }
  }
}

TEST_CASE("ordered partition oracle") {
  CHECK(ordered_partition_oracle(0) == IntPoly{1});
  CHECK(ordered_partition_oracle(2) == IntPoly{0, 1, 2});
  CHECK(ordered_partition_oracle(3)(Rat(1)) == 13);
  CHECK_THROWS_AS(ordered_partition_oracle(11), GuardError);
  for (unsigned n = 0; n <= 8; ++n) {
    IntPoly expected;
    for (unsigned k = 0; k <= n; ++k) {
      expected += IntPoly::monomial(stirling2(n, k) * factorial(k), k);
    }
    CHECK(ordered_partition_oracle(n) == expected);
  }
}

TEST_CASE("weighted row sums increase") {
  Rat prev = 0;
  for (unsigned n = 1; n <= 12; ++n) {
    Rat total = 0;
    for (unsigned k = 0; k <= n; ++k) total += Rat(stirling2_r(n, k, 0) * factorial(k));
    CHECK(total > prev);
    prev = total;
  }
}
