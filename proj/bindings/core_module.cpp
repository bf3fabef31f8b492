#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "fub/certify.hpp"
#include "fub/egf.hpp"
#include "fub/families.hpp"
#include "fub/mod_poly.hpp"
#include "fub/oracle.hpp"
#include "fub/rat_poly.hpp"
#include "fub/series_eval.hpp"
#include "fub/stirling.hpp"
#include "fub/sturm.hpp"
#include "fub/sweep.hpp"
#include "fub/umbra.hpp"

namespace py = pybind11;

namespace {

py::object to_pyint(const fub::Int& v) {
  const std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

fub::Int from_pyint(const py::handle& h) {
  return fub::Int(py::str(h).cast<std::string>());
}

py::list poly_to_list(const fub::IntPoly& p) {
  py::list out;
  for (const fub::Int& c : p.coeffs()) out.append(to_pyint(c));
  return out;
}

fub::IntPoly poly_from_list(const py::sequence& seq) {
  std::vector<fub::Int> c;
  c.reserve(seq.size());
  for (const py::handle& h : seq) c.push_back(from_pyint(h));
  return fub::IntPoly(std::move(c));
}

std::string rat_to_string(const fub::Rat& v) {
  std::string s = numerator(v).str();
  if (denominator(v) != 1) s += "/" + denominator(v).str();
  return s;
}

fub::Rat rat_from_string(const std::string& s) {
  const auto slash = s.find('/');
  if (slash == std::string::npos) return fub::Rat(fub::Int(s));
  return fub::Rat(fub::Int(s.substr(0, slash)), fub::Int(s.substr(slash + 1)));
}

py::dict report_to_dict(const fub::CheckReport& rep) {
  py::dict out;
  out["check_id"] = rep.check_id;
  py::dict params;
  for (const auto& [k, v] : rep.params) params[py::str(k)] = v;
  out["params"] = params;
  out["status"] = std::string(fub::to_string(rep.status));
  out["lhs"] = rep.lhs;
  out["rhs"] = rep.rhs;
  out["modulus"] = rep.modulus ? py::cast(*rep.modulus) : py::none();
  out["message"] = rep.message;
  return out;
}

fub::ParamMap params_from_dict(const py::dict& d) {
  fub::ParamMap params;
  for (const auto& item : d) {
    params[item.first.cast<std::string>()] = item.second.cast<long long>();
  }
  return params;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Fubini-polynomial computations and congruence verification";

  m.def("fubini", [](unsigned n) { return poly_to_list(fub::fubini(n)); }, py::arg("n"),
        "Coefficients of F_n(x), low to high");
  m.def(
      "fubini_rs",
      [](unsigned n, unsigned r, unsigned s) { return poly_to_list(fub::fubini_rs(n, r, s)); },
      py::arg("n"), py::arg("r"), py::arg("s"));
  m.def(
      "fubini_multi",
      [](unsigned n, const std::vector<unsigned>& rs) {
        return poly_to_list(fub::fubini_multi(n, fub::MultiRSpec::make(rs)));
      },
      py::arg("n"), py::arg("rs"));
  m.def("p_poly",
        [](unsigned n, unsigned r) { return poly_to_list(fub::p_poly(n, r)); },
        py::arg("n"), py::arg("r"));
  m.def("t_poly",
        [](unsigned n, unsigned r) { return poly_to_list(fub::t_poly(n, r)); },
        py::arg("n"), py::arg("r"));
  m.def("ordered_partition_oracle",
        [](unsigned n) { return poly_to_list(fub::ordered_partition_oracle(n)); },
        py::arg("n"));

  m.def("stirling2",
        [](unsigned n, unsigned k) { return to_pyint(fub::stirling2(n, k)); });
  m.def("stirling2_r", [](unsigned n, unsigned k, unsigned r) {
    return to_pyint(fub::stirling2_r(n, k, r));
  });
  m.def("stirling1_r_unsigned", [](unsigned n, unsigned k, unsigned r) {
    return to_pyint(fub::stirling1_r_unsigned(n, k, r));
  });
  m.def("factorial", [](unsigned n) { return to_pyint(fub::factorial(n)); });
  m.def("binomial",
        [](long long n, long long k) { return to_pyint(fub::binomial(n, k)); });
  m.def("falling", [](const py::object& a, unsigned n) {
    return to_pyint(fub::falling(from_pyint(a), n));
  });
  m.def("rising", [](const py::object& a, unsigned n) {
    return to_pyint(fub::rising(from_pyint(a), n));
  });

  m.def(
      "umbral_eval_poly",
      [](const py::sequence& f) {
        return poly_to_list(fub::umbral_eval(fub::UmbralExpr::from_int_poly(poly_from_list(f))));
      },
      py::arg("f"), "Evaluate f(F_x) for an integer polynomial f given in u");

  m.def(
      "reduce_mod",
      [](const py::sequence& coeffs, std::uint32_t p) {
        const fub::ModPoly m2 = fub::reduce_mod(poly_from_list(coeffs), p);
        return std::vector<std::uint32_t>(m2.coeffs().begin(), m2.coeffs().end());
      },
      py::arg("coeffs"), py::arg("p"));
  m.def("mod_inv", &fub::mod_inv, py::arg("a"), py::arg("p"));

  m.def(
      "sturm_count_nonpositive",
      [](const py::sequence& coeffs) {
        const auto count = fub::sturm_count_nonpositive(
            fub::RatPoly::from_int(poly_from_list(coeffs)));
        return py::make_tuple(count.nonpositive_roots, count.squarefree_degree);
      },
      py::arg("coeffs"), "(roots in (-inf,0], squarefree degree) for integer coefficients");

  m.def(
      "series_eval",
      [](const py::sequence& f, const std::string& x, const std::string& eps) {
        return rat_to_string(fub::series_eval(poly_from_list(f), rat_from_string(x),
                                              rat_from_string(eps)));
      },
      py::arg("f"), py::arg("x"), py::arg("eps"),
      "Certified partial sum of (1/(1+x)) sum f(k) (x/(1+x))^k as NUM[/DEN] strings");

  m.def("real_roots_certify", [](unsigned n, unsigned r, unsigned s) {
    return report_to_dict(fub::real_roots_certify(n, r, s));
  });
  m.def("derivative_identity_check", [](unsigned n, unsigned r, unsigned s) {
    return report_to_dict(fub::derivative_identity_check(n, r, s));
  });

  m.def("egf_matches", [](unsigned r, unsigned s, unsigned order) {
    const fub::EgfSeries series = fub::egf_series(r, s, order);
    for (unsigned n = 0; n <= order; ++n) {
      if (series.coeff(n) * fub::Rat(fub::factorial(n)) !=
          fub::RatPoly::from_int(fub::fubini_rs(n, r, s))) {
        return false;
      }
    }
    return true;
  });
  m.def("log_egf_matches", [](unsigned r, unsigned s, unsigned order) {
    return fub::log_egf_series(r, s, order) == fub::log_egf_rhs(r, s, order);
  });

  m.def(
      "run_check",
      [](const std::string& id, const py::dict& params, std::uint32_t seed,
         bool expected_fail) {
        return report_to_dict(fub::run_check(id, params_from_dict(params), seed, expected_fail));
      },
      py::arg("check_id"), py::arg("params"), py::arg("seed") = 1,
      py::arg("expected_fail") = false);

  m.def("check_ids", [] {
    std::vector<std::string> ids;
    for (const fub::CheckInfo& info : fub::check_infos()) ids.push_back(info.id);
    return ids;
  });

  m.def(
      "sweep",
      [](const std::vector<std::string>& checks, const std::vector<std::uint32_t>& primes,
         unsigned n_max, unsigned m_max, unsigned r_max, unsigned s_max, unsigned q_max,
         std::uint32_t seed, const std::vector<std::string>& expect_fail, unsigned jobs) {
        fub::SweepPlan plan;
        plan.check_ids = checks;
        plan.primes = primes;
        plan.n_max = n_max;
        plan.m_max = m_max;
        plan.r_max = r_max;
        plan.s_max = s_max;
        plan.q_max = q_max;
        plan.seed = seed;
        plan.expected_fail = std::set<std::string>(expect_fail.begin(), expect_fail.end());
        plan.jobs = jobs;
        const fub::SweepResult result = fub::sweep(plan);
        py::list reports;
        for (const fub::CheckReport& rep : result.reports) reports.append(report_to_dict(rep));
        py::dict summary;
        summary["pass"] = result.summary.pass;
        summary["fail"] = result.summary.fail;
        summary["expected-fail-reproduced"] = result.summary.expected_fail_reproduced;
        summary["rejected"] = result.summary.rejected;
        summary["total"] = result.summary.total();
        return py::make_tuple(reports, summary);
      },
      py::arg("checks") = std::vector<std::string>{},
      py::arg("primes") = std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13},
      py::arg("n_max") = 6, py::arg("m_max") = 6, py::arg("r_max") = 4, py::arg("s_max") = 4,
      py::arg("q_max") = 2, py::arg("seed") = 1,
      py::arg("expect_fail") = std::vector<std::string>{"t4"}, py::arg("jobs") = 1);
}
