#include "fub/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fub/mod_poly.hpp"

namespace fub {

namespace {

void validate(const SweepPlan& plan) {
  if (plan.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  for (std::uint32_t p : plan.primes) {
    if (p > ModPoly::kMaxModulus || !is_prime(p)) {
      throw std::invalid_argument("plan prime " + std::to_string(p) + " is not a prime below 2^31");
    }
  }
  for (const std::string& id : plan.check_ids) {
    if (!is_check_id(id)) throw std::invalid_argument("unknown check id '" + id + "'");
  }
  for (const std::string& id : plan.expected_fail) {
    if (!is_check_id(id)) throw std::invalid_argument("unknown expected-fail id '" + id + "'");
  }
}

std::vector<std::string> selected_ids(const SweepPlan& plan) {
  std::vector<std::string> ids;
  for (const CheckInfo& info : check_infos()) {
    if (plan.check_ids.empty() ||
        std::find(plan.check_ids.begin(), plan.check_ids.end(), info.id) !=
            plan.check_ids.end()) {
      ids.push_back(info.id);
    }
  }
  return ids;
}

}  // namespace

std::vector<std::pair<std::string, ParamMap>> sweep_tasks(const SweepPlan& plan) {
  validate(plan);
  const PolyFamily family = PolyFamily::make(plan.seed);
  GridSpec grid;
  grid.primes = plan.primes;
  grid.n_max = plan.n_max;
  grid.m_max = plan.m_max;
  grid.r_max = plan.r_max;
  grid.s_max = plan.s_max;
  grid.q_max = plan.q_max;
  grid.family_size = family.polys.size();
  grid.aseq_count = family.aseqs.size();

  std::vector<std::pair<std::string, ParamMap>> tasks;
  for (const std::string& id : selected_ids(plan)) {
    for (ParamMap& params : enumerate_params(id, grid)) {
      tasks.emplace_back(id, std::move(params));
    }
  }
  // Canonical order: (check_id, params); parallel execution fills fixed
  // slots, so the report stream is a pure function of the plan.
  std::sort(tasks.begin(), tasks.end());
  return tasks;
}

SweepResult sweep(const SweepPlan& plan) {
  const auto tasks = sweep_tasks(plan);
  const PolyFamily family = PolyFamily::make(plan.seed);

  SweepResult result;
  result.reports.resize(tasks.size());
  const auto run_range = [&](std::atomic<std::size_t>& next) {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1)) {
      const auto& [id, params] = tasks[i];
      result.reports[i] =
          run_check(id, params, family, plan.expected_fail.count(id) > 0);
    }
  };

  std::atomic<std::size_t> next{0};
  const unsigned jobs = std::min<std::size_t>(plan.jobs, std::max<std::size_t>(tasks.size(), 1));
  if (jobs <= 1) {
    run_range(next);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) workers.emplace_back([&] { run_range(next); });
    for (std::thread& w : workers) w.join();
  }
  result.summary = summarize(result.reports);
  return result;
}

}  // namespace fub
