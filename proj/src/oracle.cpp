#include "fub/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace fub {

IntPoly ordered_partition_oracle(unsigned n) {
  if (n > kOracleMaxN) {
    throw GuardError("oracle limited to n <= " + std::to_string(kOracleMaxN) +
                     ", got " + std::to_string(n));
  }
  // partitions_by_blocks[k] = number of set partitions of [n] into k blocks,
  // counted by walking every restricted-growth string.
  std::vector<Int> partitions_by_blocks(n + 1, Int(0));
  if (n == 0) {
    partitions_by_blocks[0] = 1;
  } else {
    std::vector<unsigned> rgs(n, 0);
    bool more = true;
    while (more) {
      unsigned blocks = 0;
      for (unsigned v : rgs) blocks = std::max(blocks, v + 1);
      partitions_by_blocks[blocks] += 1;
      // odometer step: the rightmost digit that may still grow rises by one,
      // everything after it resets.
      more = false;
      for (std::size_t i = n; i-- > 1;) {
        unsigned prefix_max = 0;
        for (std::size_t j = 0; j < i; ++j) prefix_max = std::max(prefix_max, rgs[j]);
        if (rgs[i] <= prefix_max) {
          ++rgs[i];
          std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0u);
          more = true;
          break;
        }
      }
    }
  }
  std::vector<Int> coeffs(n + 1, Int(0));
  for (unsigned k = 0; k <= n; ++k) {
    coeffs[k] = partitions_by_blocks[k] * factorial(k);
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace fub
