#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fub/grid.hpp"
#include "fub/poly_family.hpp"
#include "fub/report.hpp"

namespace fub {

using ParamMap = std::map<std::string, long long>;

struct CheckInfo {
  std::string id;
  bool congruence = false;   // identity checks compare exact IntPolys
  bool uses_family = false;  // consumes f/g or a coefficient sequence
};

/// Every registered check, one per paper statement, in canonical order.
const std::vector<CheckInfo>& check_infos();
bool is_check_id(std::string_view id);

/// Runs one registered check. params must supply everything the check
/// consumes (p, n, m, r, s, q, r1..., fidx, gidx, aidx as applicable);
/// family members are looked up by index. When expected_fail is set, a
/// mismatch is reported as ExpectedFailReproduced instead of Fail.
/// Throws std::invalid_argument for an unknown id or missing parameter.
CheckReport run_check(const std::string& id, const ParamMap& params,
                      const PolyFamily& family, bool expected_fail = false);

/// Convenience overload that builds the family from a seed.
CheckReport run_check(const std::string& id, const ParamMap& params,
                      std::uint32_t seed = 1, bool expected_fail = false);

/// Every parameter tuple the check covers on the grid, hypothesis-violating
/// tuples included (they surface as Rejected reports).
std::vector<ParamMap> enumerate_params(const std::string& id, const GridSpec& grid);

}  // namespace fub
