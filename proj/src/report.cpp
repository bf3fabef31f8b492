#include "fub/report.hpp"

#include <sstream>

#include <json.hpp>

namespace fub {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::ExpectedFailReproduced:
      return "expected-fail-reproduced";
    case CheckStatus::Rejected:
      return "rejected";
  }
  return "unknown";
}

std::string json_line(const CheckReport& r) {
  nlohmann::json j;
  j["check_id"] = r.check_id;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["status"] = std::string(to_string(r.status));
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  if (r.modulus) {
    j["modulus"] = *r.modulus;
  } else {
    j["modulus"] = nullptr;
  }
  j["message"] = r.message;
  return j.dump();
}

namespace {

std::string params_field(const CheckReport& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : r.params) {
    if (!first) os << ';';
    os << k << '=' << v;
    first = false;
  }
  return os.str();
}

}  // namespace

std::string csv_line(const CheckReport& r) {
  std::ostringstream os;
  os << r.check_id << ',' << params_field(r) << ',' << to_string(r.status) << ',';
  if (r.modulus) os << *r.modulus;
  return os.str();
}

std::string text_line(const CheckReport& r) {
  std::ostringstream os;
  os << to_string(r.status) << ' ' << r.check_id;
  for (const auto& [k, v] : r.params) os << ' ' << k << '=' << v;
  if (r.modulus) os << " (mod " << *r.modulus << ')';
  if (r.status == CheckStatus::Fail || r.status == CheckStatus::ExpectedFailReproduced) {
    os << " lhs=[";
    for (std::size_t i = 0; i < r.lhs.size(); ++i) os << (i ? "," : "") << r.lhs[i];
    os << "] rhs=[";
    for (std::size_t i = 0; i < r.rhs.size(); ++i) os << (i ? "," : "") << r.rhs[i];
    os << ']';
  }
  if (!r.message.empty()) os << "  # " << r.message;
  return os.str();
}

void Summary::add(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      ++pass;
      break;
    case CheckStatus::Fail:
      ++fail;
      break;
    case CheckStatus::ExpectedFailReproduced:
      ++expected_fail_reproduced;
      break;
    case CheckStatus::Rejected:
      ++rejected;
      break;
  }
}

Summary summarize(const std::vector<CheckReport>& reports) {
  Summary s;
  for (const CheckReport& r : reports) s.add(r.status);
  return s;
}

std::string json_line(const Summary& s) {
  nlohmann::json j;
  j["summary"]["pass"] = s.pass;
  j["summary"]["fail"] = s.fail;
  j["summary"]["expected-fail-reproduced"] = s.expected_fail_reproduced;
  j["summary"]["rejected"] = s.rejected;
  j["summary"]["total"] = s.total();
  return j.dump();
}

}  // namespace fub
