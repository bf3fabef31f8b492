#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fub {

enum class CheckStatus {
  Pass,
  Fail,
  ExpectedFailReproduced,
  Rejected,  // hypothesis-violating parameters; distinct from failure
};

std::string_view to_string(CheckStatus s);

/// Outcome of one identity or congruence check. params carries every
/// parameter the check consumed, so any report can be re-derived. The
/// witnesses are coefficient lists (low to high, decimal strings); for
/// congruence checks they are residues and modulus is set.
struct CheckReport {
  std::string check_id;
  std::map<std::string, long long> params;
  CheckStatus status = CheckStatus::Pass;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::optional<std::uint32_t> modulus;
  std::string message;
};

/// One JSON object, sorted keys, big integers as decimal strings:
/// {"check_id":..,"lhs":[..],"message":..,"modulus":..,"params":{..},
///  "rhs":[..],"status":..}
std::string json_line(const CheckReport& r);

inline constexpr std::string_view kCsvHeader = "check_id,params,status,modulus";
std::string csv_line(const CheckReport& r);
std::string text_line(const CheckReport& r);

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t expected_fail_reproduced = 0;
  std::size_t rejected = 0;

  std::size_t total() const {
    return pass + fail + expected_fail_reproduced + rejected;
  }
  void add(CheckStatus s);
  bool operator==(const Summary&) const = default;
};

Summary summarize(const std::vector<CheckReport>& reports);
std::string json_line(const Summary& s);

}  // namespace fub
