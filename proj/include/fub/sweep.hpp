#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "fub/registry.hpp"
#include "fub/report.hpp"

namespace fub {

/// A verification sweep: every selected check over the Cartesian parameter
/// grid, with per-check hypothesis filters recorded as rejections. The
/// output is a pure function of the plan; jobs only changes wall time.
struct SweepPlan {
  std::vector<std::string> check_ids;  // empty = all registered checks
  std::vector<std::uint32_t> primes{2, 3, 5, 7, 11, 13};
  unsigned n_max = 6;
  unsigned m_max = 6;
  unsigned r_max = 4;
  unsigned s_max = 4;
  unsigned q_max = 2;
  std::uint32_t seed = 1;
  std::set<std::string> expected_fail{"t4"};
  unsigned jobs = 1;
};

struct SweepResult {
  std::vector<CheckReport> reports;  // canonical (check_id, params) order
  Summary summary;
};

/// Validates the plan (known ids, prime moduli, jobs >= 1) and runs it.
SweepResult sweep(const SweepPlan& plan);

/// The parameter tuples a sweep would run, in canonical order.
std::vector<std::pair<std::string, ParamMap>> sweep_tasks(const SweepPlan& plan);

}  // namespace fub
