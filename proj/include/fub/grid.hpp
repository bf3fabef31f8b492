#pragma once

#include <cstdint>
#include <vector>

namespace fub {

/// Parameter ranges a registry enumeration runs over; derived from a
/// SweepPlan plus the family sizes.
struct GridSpec {
  std::vector<std::uint32_t> primes;
  unsigned n_max = 6;
  unsigned m_max = 6;
  unsigned r_max = 4;
  unsigned s_max = 4;
  unsigned q_max = 2;
  std::size_t family_size = 0;
  std::size_t aseq_count = 0;
};

}  // namespace fub
