#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fub/certify.hpp"
#include "fub/egf.hpp"
#include "fub/families.hpp"
#include "fub/mod_poly.hpp"
#include "fub/oracle.hpp"
#include "fub/report.hpp"
#include "fub/series_eval.hpp"
#include "fub/sweep.hpp"

namespace {

using fub::CheckReport;
using fub::CheckStatus;
using fub::Int;
using fub::IntPoly;
using fub::Rat;

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    const Int num(s.substr(0, slash));
    const Int den(s.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + s + "', expected NUM or NUM/DEN");
  }
}

std::string format_rat(const Rat& v) {
  std::ostringstream os;
  os << numerator(v);
  if (denominator(v) != 1) os << '/' << denominator(v);
  return os.str();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out;
}

void print_poly(const IntPoly& poly, std::optional<std::uint32_t> mod) {
  if (poly.is_zero()) {
    std::cout << "0\n";
    return;
  }
  std::vector<std::string> parts;
  for (const Int& c : poly.coeffs()) {
    parts.push_back(mod ? std::to_string(fub::mod_residue(c, *mod)) : c.str());
  }
  std::cout << join(parts) << "\n";
}

// ----------------------------------------------------------------------
// subcommand drivers
// ----------------------------------------------------------------------

struct PolyArgs {
  std::string kind;
  unsigned n = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::string rs_list;
  std::string at;
  std::uint32_t mod = 0;
  bool has_mod = false;
  bool has_at = false;
};

int run_poly(const PolyArgs& a) {
  IntPoly poly;
  if (a.kind == "fubini") {
    poly = fub::fubini(a.n);
  } else if (a.kind == "rs") {
    poly = fub::fubini_rs(a.n, a.r, a.s);
  } else if (a.kind == "multi") {
    std::vector<unsigned> rs;
    for (const std::string& item : split_csv(a.rs_list)) {
      const long long v = std::stoll(item);
      if (v < 0) throw std::invalid_argument("--rs entries must be non-negative");
      rs.push_back(static_cast<unsigned>(v));
    }
    poly = fub::fubini_multi(a.n, fub::MultiRSpec::make(rs));
  } else if (a.kind == "p") {
    poly = fub::p_poly(a.n, a.r);
  } else {
    poly = fub::t_poly(a.n, a.r);
  }
  if (a.has_at) {
    std::cout << format_rat(poly(parse_rat(a.at))) << "\n";
  } else if (a.has_mod) {
    if (!fub::is_prime(a.mod) || a.mod > fub::ModPoly::kMaxModulus) {
      throw std::invalid_argument("--mod must be a prime below 2^31");
    }
    print_poly(poly, a.mod);
  } else {
    print_poly(poly, std::nullopt);
  }
  return kExitPass;
}

struct VerifyArgs {
  std::string checks;
  std::string primes = "2,3,5,7,11,13";
  unsigned n_max = 6, m_max = 6, r_max = 4, s_max = 4, q_max = 2;
  std::uint32_t seed = 1;
  std::string expect_fail = "t4";
  unsigned jobs = 1;
  std::string format = "json";
};

void emit_report(const CheckReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << fub::json_line(rep) << "\n";
  } else if (format == "csv") {
    std::cout << fub::csv_line(rep) << "\n";
  } else {
    std::cout << fub::text_line(rep) << "\n";
  }
}

int exit_code_for(const fub::Summary& summary) {
  return summary.fail == 0 ? kExitPass : kExitCounterexample;
}

int run_verify(const VerifyArgs& a) {
  fub::SweepPlan plan;
  for (const std::string& id : split_csv(a.checks)) plan.check_ids.push_back(lower(id));
  plan.primes.clear();
  for (const std::string& p : split_csv(a.primes)) {
    const long long v = std::stoll(p);
    if (v < 2) throw std::invalid_argument("--primes entries must be >= 2");
    plan.primes.push_back(static_cast<std::uint32_t>(v));
  }
  plan.n_max = a.n_max;
  plan.m_max = a.m_max;
  plan.r_max = a.r_max;
  plan.s_max = a.s_max;
  plan.q_max = a.q_max;
  plan.seed = a.seed;
  plan.expected_fail.clear();
  for (const std::string& id : split_csv(a.expect_fail)) plan.expected_fail.insert(lower(id));
  plan.jobs = a.jobs;

  const fub::SweepResult result = fub::sweep(plan);
  if (a.format == "csv") std::cout << fub::kCsvHeader << "\n";
  for (const CheckReport& rep : result.reports) emit_report(rep, a.format);
  if (a.format == "json") {
    std::cout << fub::json_line(result.summary) << "\n";
  } else if (a.format == "text") {
    std::cout << "summary: pass=" << result.summary.pass << " fail=" << result.summary.fail
              << " expected-fail-reproduced=" << result.summary.expected_fail_reproduced
              << " rejected=" << result.summary.rejected << " total=" << result.summary.total()
              << "\n";
  } else {
    std::cerr << fub::json_line(result.summary) << "\n";
  }
  return exit_code_for(result.summary);
}

struct SeriesArgs {
  std::string check;
  unsigned order = 10;
  unsigned r = 0;
  unsigned s = 0;
};

int run_series(const SeriesArgs& a) {
  fub::Summary summary;
  if (a.check == "egf") {
    const fub::EgfSeries series = fub::egf_series(a.r, a.s, a.order);
    for (unsigned n = 0; n <= a.order; ++n) {
      const fub::RatPoly lhs = series.coeff(n) * Rat(fub::factorial(n));
      const fub::RatPoly rhs = fub::RatPoly::from_int(fub::fubini_rs(n, a.r, a.s));
      CheckReport rep;
      rep.check_id = "egf-series";
      rep.params = {{"n", n}, {"order", a.order}, {"r", a.r}, {"s", a.s}};
      rep.lhs = lhs.coeff_strings();
      rep.rhs = rhs.coeff_strings();
      rep.status = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;
      rep.message = "n! * [t^n] egf vs F_n(x;r,s)";
      summary.add(rep.status);
      std::cout << fub::json_line(rep) << "\n";
    }
  } else {
    const fub::EgfSeries lhs = fub::log_egf_series(a.r, a.s, a.order);
    const fub::EgfSeries rhs = fub::log_egf_rhs(a.r, a.s, a.order);
    for (unsigned n = 0; n <= a.order; ++n) {
      CheckReport rep;
      rep.check_id = "log-egf-series";
      rep.params = {{"n", n}, {"order", a.order}, {"r", a.r}, {"s", a.s}};
      rep.lhs = lhs.coeff(n).coeff_strings();
      rep.rhs = rhs.coeff(n).coeff_strings();
      rep.status = lhs.coeff(n) == rhs.coeff(n) ? CheckStatus::Pass : CheckStatus::Fail;
      rep.message = "[t^n] log egf vs closed form";
      summary.add(rep.status);
      std::cout << fub::json_line(rep) << "\n";
    }
  }
  std::cout << fub::json_line(summary) << "\n";
  return exit_code_for(summary);
}

struct RootsArgs {
  unsigned n = 1;
  unsigned r = 0;
  unsigned s = 0;
};

int run_roots(const RootsArgs& a) {
  const CheckReport rep = fub::real_roots_certify(a.n, a.r, a.s);
  std::cout << fub::json_line(rep) << "\n";
  return rep.status == CheckStatus::Pass ? kExitPass : kExitCounterexample;
}

struct EvalSeriesArgs {
  std::string f;
  std::string x;
  std::string eps;
};

int run_eval_series(const EvalSeriesArgs& a) {
  std::vector<Int> coeffs;
  for (const std::string& item : split_csv(a.f)) coeffs.emplace_back(item);
  const IntPoly f{std::vector<Int>(coeffs)};
  const Rat value = fub::series_eval(f, parse_rat(a.x), parse_rat(a.eps));
  std::cout << format_rat(value) << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fubini-polynomial toolkit: polynomial families, identity and "
               "mod-p congruence verification, generating-function and root checks"};
  app.require_subcommand(1);

  PolyArgs poly_args;
  CLI::App* poly = app.add_subcommand("poly", "print a polynomial family member");
  poly->add_option("--kind", poly_args.kind, "fubini|rs|multi|P|T")
      ->required()
      ->transform(CLI::IsMember({"fubini", "rs", "multi", "p", "t"}, CLI::ignore_case));
  poly->add_option("--n", poly_args.n, "index n")->required();
  auto* opt_r = poly->add_option("--r", poly_args.r, "parameter r");
  auto* opt_s = poly->add_option("--s", poly_args.s, "parameter s");
  auto* opt_rs = poly->add_option("--rs", poly_args.rs_list, "ascending r_1,...,r_q");
  auto* opt_at = poly->add_option("--at", poly_args.at, "evaluate at rational NUM[/DEN]");
  auto* opt_mod = poly->add_option("--mod", poly_args.mod, "reduce coefficients mod prime");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "run a verification sweep");
  verify->add_option("--checks", verify_args.checks, "comma list of check ids (default all)");
  verify->add_option("--primes", verify_args.primes, "comma list of primes");
  verify->add_option("--n-max", verify_args.n_max, "max n");
  verify->add_option("--m-max", verify_args.m_max, "max m");
  verify->add_option("--r-max", verify_args.r_max, "max r");
  verify->add_option("--s-max", verify_args.s_max, "max s");
  verify->add_option("--q-max", verify_args.q_max, "max multi-r length / index offset");
  verify->add_option("--seed", verify_args.seed, "seed for the polynomial family");
  verify->add_option("--expect-fail", verify_args.expect_fail,
                     "comma list of ids whose mismatch is the expected outcome");
  verify->add_option("--jobs", verify_args.jobs, "worker threads")
      ->envname("FUB_JOBS")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", verify_args.format, "json|csv|text")
      ->check(CLI::IsMember({"json", "csv", "text"}));

  SeriesArgs series_args;
  CLI::App* series = app.add_subcommand("series", "exact generating-function comparison");
  series->add_option("--check", series_args.check, "egf|log")
      ->required()
      ->check(CLI::IsMember({"egf", "log"}));
  series->add_option("--order", series_args.order, "truncation order (<= 24)")->required();
  series->add_option("--r", series_args.r, "parameter r");
  series->add_option("--s", series_args.s, "parameter s");

  RootsArgs roots_args;
  CLI::App* roots = app.add_subcommand("roots", "Sturm real-rootedness certificate");
  roots->add_option("--n", roots_args.n, "index n (>= 1)")->required();
  roots->add_option("--r", roots_args.r, "parameter r");
  roots->add_option("--s", roots_args.s, "parameter s");

  EvalSeriesArgs eval_args;
  CLI::App* eval_series =
      app.add_subcommand("eval-series", "certified series evaluation of f(F_x) at x");
  eval_series->add_option("--f", eval_args.f, "integer coefficients c0,c1,...")->required();
  eval_series->add_option("--x", eval_args.x, "rational NUM[/DEN], x >= 0")->required();
  eval_series->add_option("--eps", eval_args.eps, "positive rational NUM[/DEN]")->required();

  unsigned oracle_n = 0;
  CLI::App* oracle = app.add_subcommand("oracle", "brute-force ordered-set-partition polynomial");
  oracle->add_option("--n", oracle_n, "set size (<= 10)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  poly_args.has_at = opt_at->count() > 0;
  poly_args.has_mod = opt_mod->count() > 0;

  try {
    if (app.got_subcommand(poly)) {
      // flag compatibility per kind
      const bool has_r = opt_r->count() > 0;
      const bool has_s = opt_s->count() > 0;
      const bool has_rs = opt_rs->count() > 0;
      const std::string& kind = poly_args.kind;
      if (poly_args.has_at && poly_args.has_mod) {
        throw std::invalid_argument("--at and --mod are mutually exclusive");
      }
      if (kind == "multi" && !has_rs) throw std::invalid_argument("--kind multi requires --rs");
      if (kind != "multi" && has_rs) throw std::invalid_argument("--rs is only valid with --kind multi");
      if ((kind == "fubini" || kind == "multi") && (has_r || has_s)) {
        throw std::invalid_argument("--r/--s are not valid with --kind " + kind);
      }
      if ((kind == "p" || kind == "t") && has_s) {
        throw std::invalid_argument("--s is not valid with --kind " + kind);
      }
      return run_poly(poly_args);
    }
    if (app.got_subcommand(verify)) return run_verify(verify_args);
    if (app.got_subcommand(series)) return run_series(series_args);
    if (app.got_subcommand(roots)) return run_roots(roots_args);
    if (app.got_subcommand(eval_series)) return run_eval_series(eval_args);
    if (app.got_subcommand(oracle)) {
      print_poly(fub::ordered_partition_oracle(oracle_n), std::nullopt);
      return kExitPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
