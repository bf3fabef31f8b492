#include "fub/registry.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>

#include "fub/families.hpp"
#include "fub/mod_poly.hpp"
#include "fub/stirling.hpp"
#include "fub/umbra.hpp"

namespace fub {

namespace {

long long need(const ParamMap& params, const char* key) {
  const auto it = params.find(key);
  if (it == params.end()) {
    throw std::invalid_argument(std::string("missing parameter '") + key + "'");
  }
  return it->second;
}

unsigned need_u(const ParamMap& params, const char* key) {
  const long long v = need(params, key);
  if (v < 0) {
    throw std::invalid_argument(std::string("parameter '") + key + "' must be non-negative");
  }
  return static_cast<unsigned>(v);
}

std::uint32_t need_prime(const ParamMap& params) {
  const long long v = need(params, "p");
  if (v < 2 || v > ModPoly::kMaxModulus || !is_prime(static_cast<std::uint64_t>(v))) {
    throw std::invalid_argument("parameter 'p' must be a prime below 2^31");
  }
  return static_cast<std::uint32_t>(v);
}

std::vector<unsigned> need_multi_rs(const ParamMap& params) {
  const unsigned q = need_u(params, "q");
  std::vector<unsigned> rs;
  rs.reserve(q);
  for (unsigned i = 1; i <= q; ++i) {
    rs.push_back(need_u(params, ("r" + std::to_string(i)).c_str()));
  }
  return rs;
}

struct Outcome {
  bool rejected = false;
  std::string reason;
  std::vector<std::string> labels;  // parallel to pairs; may be empty
  std::vector<std::pair<IntPoly, IntPoly>> int_pairs;
  std::vector<std::pair<ModPoly, ModPoly>> mod_pairs;
  std::optional<std::uint32_t> modulus;
};

Outcome rejected(std::string reason, std::optional<std::uint32_t> modulus = {}) {
  Outcome o;
  o.rejected = true;
  o.reason = std::move(reason);
  o.modulus = modulus;
  return o;
}

Outcome exact(IntPoly lhs, IntPoly rhs) {
  Outcome o;
  o.int_pairs.emplace_back(std::move(lhs), std::move(rhs));
  return o;
}

Outcome congruent(const IntPoly& lhs, const IntPoly& rhs, std::uint32_t p) {
  Outcome o;
  o.modulus = p;
  o.mod_pairs.emplace_back(reduce_mod(lhs, p), reduce_mod(rhs, p));
  return o;
}

Outcome congruent(ModPoly lhs, ModPoly rhs) {
  Outcome o;
  o.modulus = lhs.modulus();
  o.mod_pairs.emplace_back(std::move(lhs), std::move(rhs));
  return o;
}

std::uint32_t inv_of_int(const Int& v, std::uint32_t p) {
  const std::uint32_t r = mod_residue(v, p);
  if (r == 0) throw NotInvertibleError("no inverse of 0 modulo " + std::to_string(p));
  return mod_inv(r, p);
}

Int neg(long long m) { return Int(-m); }

// ---------------------------------------------------------------------
// identity checks (exact IntPoly equality)
// ---------------------------------------------------------------------

Outcome eval_p0_shift(const ParamMap& params, const PolyFamily& fam) {
  const long long r = need(params, "r");
  const IntPoly& f = fam.polys.at(need_u(params, "fidx"));
  const UmbralExpr fe = UmbralExpr::from_int_poly(f);
  IntPoly lhs = x_plus_1_pow(1) * umbral_eval(fe.shifted(r));
  IntPoly rhs = IntPoly::x() * umbral_eval(fe.shifted(r + 1)) + IntPoly::constant(f.at_int(r));
  return exact(std::move(lhs), std::move(rhs));
}

Outcome eval_p0_falling(const ParamMap& params, const PolyFamily&) {
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  IntPoly lhs = umbral_eval(UmbralExpr::falling_shift(r, n + r));
  IntPoly rhs = factorial(n + r) * (x_pow(n) * x_plus_1_pow(r));
  return exact(std::move(lhs), std::move(rhs));
}

Outcome eval_p0_rs_a(const ParamMap& params, const PolyFamily&) {
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  const UmbralExpr e =
      shifted_power(static_cast<long long>(r) - s, n) * UmbralExpr::falling_shift(0, s);
  return exact(umbral_eval(e), x_pow(s) * fubini_rs(n, r, s));
}

Outcome eval_p0_rs_b(const ParamMap& params, const PolyFamily&) {
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  const UmbralExpr e = shifted_power(r, n) * UmbralExpr::falling_shift(s, s);
  return exact(umbral_eval(e), x_plus_1_pow(s) * fubini_rs(n, r, s));
}

Outcome eval_p11(const ParamMap& params, const PolyFamily& fam) {
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  const IntPoly& f = fam.polys.at(need_u(params, "fidx"));
  const UmbralExpr fe = UmbralExpr::from_int_poly(f);
  IntPoly lhs = x_plus_1_pow(s) *
                umbral_eval(fe.shifted(static_cast<long long>(r) - s) *
                            UmbralExpr::falling_shift(0, s));
  IntPoly rhs = x_pow(s) * umbral_eval(fe.shifted(r) * UmbralExpr::falling_shift(s, s));
  return exact(std::move(lhs), std::move(rhs));
}

Outcome eval_r1(const ParamMap& params, const PolyFamily&) {
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  Outcome o;
  o.labels = {"P", "T"};
  o.int_pairs.emplace_back(
      umbral_eval(UmbralExpr::falling_shift(-static_cast<long long>(r) - 1, n)),
      factorial(n) * p_poly(n, r));
  o.int_pairs.emplace_back(umbral_eval(UmbralExpr::falling_shift(n + r, n)),
                           factorial(n) * t_poly(n, r));
  return o;
}

Outcome eval_p12(const ParamMap& params, const PolyFamily& fam) {
  const unsigned m = need_u(params, "m");
  if (m < 1) return rejected("requires m >= 1");
  const IntPoly& f = fam.polys.at(need_u(params, "fidx"));
  const UmbralExpr fe = UmbralExpr::from_int_poly(f);
  IntPoly lhs = x_plus_1_pow(m) * umbral_eval(fe) - x_pow(m) * umbral_eval(fe.shifted(m));
  IntPoly rhs;
  for (unsigned k = 0; k < m; ++k) {
    rhs += f.at_int(k) * (x_plus_1_pow(m - 1 - k) * x_pow(k));
  }
  return exact(std::move(lhs), std::move(rhs));
}

Outcome eval_lemma(const ParamMap& params, const PolyFamily&) {
  const unsigned n = need_u(params, "n");
  if (n < 2) return rejected("requires n >= 2");
  IntPoly lhs = x_plus_1_pow(1) * fubini(n - 1);
  IntPoly rhs;
  for (unsigned k = 1; k <= n; ++k) {
    rhs += IntPoly::monomial(stirling2(n, k) * factorial(k - 1), k);
  }
  return exact(std::move(lhs), std::move(rhs));
}

Outcome eval_deriv(const ParamMap& params, const PolyFamily&) {
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  IntPoly lhs = x_pow(r) * x_plus_1_pow(s) * fubini_rs(n + 1, r, s + r);
  IntPoly inner = x_pow(r) * x_plus_1_pow(s + 1) * fubini_rs(n, r, s + r);
  IntPoly rhs = IntPoly::x() * inner.derivative();
  return exact(std::move(lhs), std::move(rhs));
}

// ---------------------------------------------------------------------
// congruence checks (ModPoly equality mod p)
// ---------------------------------------------------------------------

Outcome eval_c3(const ParamMap& params, const PolyFamily& fam) {
  const std::uint32_t p = need_prime(params);
  const IntPoly& f = fam.polys.at(need_u(params, "fidx"));
  IntPoly lhs;
  for (std::uint32_t k = 0; k < p; ++k) {
    lhs += f.at_int(k) * (x_plus_1_pow(p - 1 - k) * x_pow(k));
  }
  return congruent(lhs, umbral_eval(UmbralExpr::from_int_poly(f)), p);
}

Outcome eval_c3_rs_a(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  IntPoly lhs;
  for (std::uint32_t k = 0; k < p; ++k) {
    const Int scalar = int_pow(Int(r) - s + k, n) * falling(Int(k), s);
    lhs += scalar * (x_plus_1_pow(p - 1 - k) * x_pow(k));
  }
  return congruent(lhs, x_pow(s) * fubini_rs(n, r, s), p);
}

Outcome eval_c3_rs_b(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  IntPoly lhs;
  for (std::uint32_t k = 0; k < p; ++k) {
    const Int scalar = int_pow(Int(r) + k, n) * falling(Int(s) + k, s);
    lhs += scalar * (x_plus_1_pow(p - 1 - k) * x_pow(k));
  }
  return congruent(lhs, x_plus_1_pow(s) * fubini_rs(n, r, s), p);
}

Outcome eval_fermat_prod(const ParamMap& params, const PolyFamily& fam) {
  const std::uint32_t p = need_prime(params);
  const UmbralExpr fe = UmbralExpr::from_int_poly(fam.polys.at(need_u(params, "fidx")));
  const UmbralExpr ge = UmbralExpr::from_int_poly(fam.polys.at(need_u(params, "gidx")));
  IntPoly lhs = umbral_eval(pow(fe, p) * ge);
  IntPoly rhs = umbral_eval(fe * ge);
  return congruent(lhs, rhs, p);
}

Outcome eval_indexred(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned m = need_u(params, "m");
  const unsigned q = need_u(params, "q");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  return congruent(fubini_rs(m * p + q, r, s), fubini_rs(m + q, r, s), p);
}

Outcome eval_p21(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  if (m < 1) return rejected("requires m >= 1", p);
  const unsigned rp = r % p;
  IntPoly lhs =
      x_plus_1_pow(s + 1) * (fubini_rs(m * (p - 1), r, s) - IntPoly::constant(factorial(s)));
  IntPoly rhs;
  if (rp != 0) {
    rhs = -falling(Int(s) - rp, s) * (x_plus_1_pow(rp) * x_pow(p - rp));
  } else {
    rhs = -factorial(s) * (x_pow(p) + IntPoly::constant(1));
  }
  return congruent(lhs, rhs, p);
}

Outcome eval_t1(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  if (m % p == 0) return rejected("requires p not dividing m", p);
  ModPoly lhs(p);
  for (std::uint32_t k = 1; k < p; ++k) {
    const std::uint32_t w = inv_of_int(int_pow(neg(m), k), p);
    lhs += reduce_mod(fubini_rs(n + k, r, s), p) * w;
  }
  IntPoly rhs = int_pow(neg(m), n) *
                (fubini_rs(p - 1, r + m, s) - IntPoly::constant(factorial(s)));
  return congruent(std::move(lhs), reduce_mod(rhs, p));
}

Outcome eval_propp(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const std::vector<unsigned> rs = need_multi_rs(params);
  if (m % p == 0) return rejected("requires p not dividing m", p);
  const MultiRSpec spec = MultiRSpec::make(rs);
  ModPoly acc(p);
  for (std::uint32_t k = 1; k < p; ++k) {
    const std::uint32_t w = inv_of_int(int_pow(neg(m), k), p);
    acc += reduce_mod(fubini_multi(n + k, spec), p) * w;
  }
  ModPoly lhs = reduce_mod(x_pow(spec.last_r()), p) * acc;
  Int c = int_pow(neg(m), n);
  for (unsigned ri : rs) c *= falling(neg(m), ri);
  IntPoly rhs = c * (fubini_rs(p - 1, m, 0) - IntPoly::constant(1));
  return congruent(std::move(lhs), reduce_mod(rhs, p));
}

Outcome eval_remark_a(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned m = need_u(params, "m");
  const std::vector<unsigned> rs = need_multi_rs(params);
  const unsigned q = static_cast<unsigned>(rs.size());
  const MultiRSpec spec = MultiRSpec::make(rs);
  return congruent(fubini_multi(m * p + q, spec), fubini_multi(m + q, spec), p);
}

Outcome eval_remark_b(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned m = need_u(params, "m");
  const std::vector<unsigned> rs = need_multi_rs(params);
  for (unsigned ri : rs) {
    if (ri == 0) return rejected("requires r_1...r_q != 0", p);
  }
  const MultiRSpec spec = MultiRSpec::make(rs);
  return congruent(fubini_multi(m * (p - 1), spec), fubini_multi(0, spec), p);
}

Outcome eval_cc(const ParamMap& params, const PolyFamily& fam) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  const unsigned s = need_u(params, "s");
  const auto& a = fam.aseqs.at(need_u(params, "aidx"));
  if (m % p == 0) return rejected("requires p not dividing m", p);
  ModPoly lhs(p);
  for (std::uint32_t k = 1; k < p; ++k) {
    const std::uint32_t w = inv_of_int(int_pow(neg(m), k), p);
    lhs += reduce_mod(rl_r_poly(a, n + k, r, s), p) * w;
  }
  IntPoly rhs = int_pow(neg(m), n) * rl_l_poly(a, neg(m)) *
                (fubini_rs(p - 1, r + m, s) - IntPoly::constant(factorial(s)));
  return congruent(std::move(lhs), reduce_mod(rhs, p));
}

Outcome eval_t2(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  if (m > p - 1) return rejected("requires m <= p-1", p);
  ModPoly lhs(p);
  for (std::uint32_t k = m; k < p; ++k) {
    const IntPoly term =
        IntPoly::monomial(k % 2 ? Int(-1) : Int(1), k) * fubini_rs(n, r + k, k);
    const std::uint32_t w = inv_of_int(factorial(k - m), p);
    lhs += reduce_mod(term, p) * w;
  }
  Int c = factorial(m) * int_pow(Int(r) + m, n);
  if (m % 2) c = -c;
  IntPoly rhs = c * p_poly(p - 1, m);
  return congruent(std::move(lhs), reduce_mod(rhs, p));
}

Outcome eval_t3(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  IntPoly lhs;
  for (std::uint32_t k = 0; k < p; ++k) {
    lhs += falling(neg(m), p - 1 - k) * (x_plus_1_pow(k) * fubini_rs(n, r + m, k));
  }
  IntPoly rhs = -int_pow(Int(r), n) * t_poly(p - 1, m);
  return congruent(lhs, rhs, p);
}

Outcome eval_t4(const ParamMap& params, const PolyFamily&) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  IntPoly lhs;
  for (std::uint32_t k = 0; k < p; ++k) {
    lhs += rising(Int(m) + r + 1, p - 1 - k) * t_poly(n + k, r);
  }
  IntPoly rhs = -falling(Int(m) + r + n, n) * p_poly(p - 1, m + 1);
  return congruent(lhs, rhs, p);
}

Outcome eval_finalcor(const ParamMap& params, const PolyFamily& fam) {
  const std::uint32_t p = need_prime(params);
  const unsigned n = need_u(params, "n");
  const unsigned m = need_u(params, "m");
  const unsigned r = need_u(params, "r");
  const auto& a = fam.aseqs.at(need_u(params, "aidx"));
  if (m % p == 0) return rejected("requires p not dividing m", p);
  if (m > p - 1) return rejected("requires m <= p-1", p);
  ModPoly lhs(p);
  for (std::uint32_t k = m; k < p; ++k) {
    const IntPoly term = binomial(k, m) * IntPoly::monomial(k % 2 ? Int(-1) : Int(1), k) *
                         rl_r_poly(a, n, r + k, k);
    lhs += reduce_mod(term, p) * inv_of_int(factorial(k), p);
  }
  Int c = int_pow(Int(r) + m, n);
  if (m % 2) c = -c;
  IntPoly rhs = c * (rl_l_poly(a, Int(r) + m) * p_poly(p - 1, m));
  return congruent(std::move(lhs), reduce_mod(rhs, p));
}

// ---------------------------------------------------------------------
// grid enumeration
// ---------------------------------------------------------------------

using Emit = std::vector<ParamMap>;

void for_multi_specs(const GridSpec& g,
                     const std::function<void(const std::vector<unsigned>&)>& fn) {
  std::vector<unsigned> rs;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned q, unsigned low) {
    if (q == 0) {
      if (!rs.empty()) fn(rs);
      return;
    }
    for (unsigned v = low; v <= g.r_max; ++v) {
      rs.push_back(v);
      rec(q - 1, v);
      rs.pop_back();
    }
  };
  for (unsigned q = 1; q <= g.q_max; ++q) rec(q, 0);
}

ParamMap with_multi(ParamMap base, const std::vector<unsigned>& rs) {
  base["q"] = static_cast<long long>(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    base["r" + std::to_string(i + 1)] = rs[i];
  }
  return base;
}

void enum_f_r(const GridSpec& g, Emit& out) {
  for (std::size_t f = 0; f < g.family_size; ++f)
    for (unsigned r = 0; r <= g.r_max; ++r)
      out.push_back({{"fidx", static_cast<long long>(f)}, {"r", r}});
}

void enum_n_r(const GridSpec& g, Emit& out) {
  for (unsigned n = 0; n <= g.n_max; ++n)
    for (unsigned r = 0; r <= g.r_max; ++r) out.push_back({{"n", n}, {"r", r}});
}

void enum_n_r_s(const GridSpec& g, Emit& out) {
  for (unsigned n = 0; n <= g.n_max; ++n)
    for (unsigned r = 0; r <= g.r_max; ++r)
      for (unsigned s = 0; s <= g.s_max; ++s)
        out.push_back({{"n", n}, {"r", r}, {"s", s}});
}

void enum_f_r_s(const GridSpec& g, Emit& out) {
  for (std::size_t f = 0; f < g.family_size; ++f)
    for (unsigned r = 0; r <= g.r_max; ++r)
      for (unsigned s = 0; s <= g.s_max; ++s)
        out.push_back({{"fidx", static_cast<long long>(f)}, {"r", r}, {"s", s}});
}

void enum_f_m(const GridSpec& g, Emit& out) {
  for (std::size_t f = 0; f < g.family_size; ++f)
    for (unsigned m = 0; m <= g.m_max; ++m)
      out.push_back({{"fidx", static_cast<long long>(f)}, {"m", m}});
}

void enum_n(const GridSpec& g, Emit& out) {
  for (unsigned n = 0; n <= g.n_max; ++n) out.push_back({{"n", n}});
}

void enum_p_f(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (std::size_t f = 0; f < g.family_size; ++f)
      out.push_back({{"p", p}, {"fidx", static_cast<long long>(f)}});
}

void enum_p_n_r_s(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned n = 0; n <= g.n_max; ++n)
      for (unsigned r = 0; r <= g.r_max; ++r)
        for (unsigned s = 0; s <= g.s_max; ++s)
          out.push_back({{"p", p}, {"n", n}, {"r", r}, {"s", s}});
}

void enum_p_f_g(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (std::size_t f = 0; f < g.family_size; ++f)
      for (std::size_t h = 0; h < g.family_size; ++h)
        out.push_back({{"p", p},
                       {"fidx", static_cast<long long>(f)},
                       {"gidx", static_cast<long long>(h)}});
}

void enum_p_m_q_r_s(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned m = 0; m <= g.m_max; ++m)
      for (unsigned q = 0; q <= g.q_max; ++q)
        for (unsigned r = 0; r <= g.r_max; ++r)
          for (unsigned s = 0; s <= g.s_max; ++s)
            out.push_back({{"p", p}, {"m", m}, {"q", q}, {"r", r}, {"s", s}});
}

void enum_p_m_r_s(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned m = 0; m <= g.m_max; ++m)
      for (unsigned r = 0; r <= g.r_max; ++r)
        for (unsigned s = 0; s <= g.s_max; ++s)
          out.push_back({{"p", p}, {"m", m}, {"r", r}, {"s", s}});
}

void enum_p_n_m_r_s(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned n = 0; n <= g.n_max; ++n)
      for (unsigned m = 0; m <= g.m_max; ++m)
        for (unsigned r = 0; r <= g.r_max; ++r)
          for (unsigned s = 0; s <= g.s_max; ++s)
            out.push_back({{"p", p}, {"n", n}, {"m", m}, {"r", r}, {"s", s}});
}

void enum_p_n_m_multi(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned n = 0; n <= g.n_max; ++n)
      for (unsigned m = 0; m <= g.m_max; ++m)
        for_multi_specs(g, [&](const std::vector<unsigned>& rs) {
          out.push_back(with_multi({{"p", p}, {"n", n}, {"m", m}}, rs));
        });
}

void enum_p_m_multi(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned m = 0; m <= g.m_max; ++m)
      for_multi_specs(g, [&](const std::vector<unsigned>& rs) {
        out.push_back(with_multi({{"p", p}, {"m", m}}, rs));
      });
}

void enum_p_n_m_r_s_a(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned n = 0; n <= g.n_max; ++n)
      for (unsigned m = 0; m <= g.m_max; ++m)
        for (unsigned r = 0; r <= g.r_max; ++r)
          for (unsigned s = 0; s <= g.s_max; ++s)
            for (std::size_t a = 0; a < g.aseq_count; ++a)
              out.push_back({{"p", p},
                             {"n", n},
                             {"m", m},
                             {"r", r},
                             {"s", s},
                             {"aidx", static_cast<long long>(a)}});
}

void enum_p_n_m_r(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned n = 0; n <= g.n_max; ++n)
      for (unsigned m = 0; m <= g.m_max; ++m)
        for (unsigned r = 0; r <= g.r_max; ++r)
          out.push_back({{"p", p}, {"n", n}, {"m", m}, {"r", r}});
}

void enum_p_n_m_r_a(const GridSpec& g, Emit& out) {
  for (std::uint32_t p : g.primes)
    for (unsigned n = 0; n <= g.n_max; ++n)
      for (unsigned m = 0; m <= g.m_max; ++m)
        for (unsigned r = 0; r <= g.r_max; ++r)
          for (std::size_t a = 0; a < g.aseq_count; ++a)
            out.push_back({{"p", p},
                           {"n", n},
                           {"m", m},
                           {"r", r},
                           {"aidx", static_cast<long long>(a)}});
}

// ---------------------------------------------------------------------
// the registry table
// ---------------------------------------------------------------------

struct CheckDef {
  CheckInfo info;
  Outcome (*eval)(const ParamMap&, const PolyFamily&);
  void (*enumerate)(const GridSpec&, Emit&);
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {{"p0-shift", false, true}, eval_p0_shift, enum_f_r},
      {{"p0-falling", false, false}, eval_p0_falling, enum_n_r},
      {{"p0-rs-a", false, false}, eval_p0_rs_a, enum_n_r_s},
      {{"p0-rs-b", false, false}, eval_p0_rs_b, enum_n_r_s},
      {{"p11", false, true}, eval_p11, enum_f_r_s},
      {{"r1", false, false}, eval_r1, enum_n_r},
      {{"p12", false, true}, eval_p12, enum_f_m},
      {{"lemma", false, false}, eval_lemma, enum_n},
      {{"deriv", false, false}, eval_deriv, enum_n_r_s},
      {{"c3", true, true}, eval_c3, enum_p_f},
      {{"c3-rs-a", true, false}, eval_c3_rs_a, enum_p_n_r_s},
      {{"c3-rs-b", true, false}, eval_c3_rs_b, enum_p_n_r_s},
      {{"fermat-prod", true, true}, eval_fermat_prod, enum_p_f_g},
      {{"indexred", true, false}, eval_indexred, enum_p_m_q_r_s},
      {{"p21", true, false}, eval_p21, enum_p_m_r_s},
      {{"t1", true, false}, eval_t1, enum_p_n_m_r_s},
      {{"propp", true, false}, eval_propp, enum_p_n_m_multi},
      {{"remark-a", true, false}, eval_remark_a, enum_p_m_multi},
      {{"remark-b", true, false}, eval_remark_b, enum_p_m_multi},
      {{"cc", true, true}, eval_cc, enum_p_n_m_r_s_a},
      {{"t2", true, false}, eval_t2, enum_p_n_m_r},
      {{"t3", true, false}, eval_t3, enum_p_n_m_r},
      {{"t4", true, false}, eval_t4, enum_p_n_m_r},
      {{"finalcor", true, true}, eval_finalcor, enum_p_n_m_r_a},
  };
  return defs;
}

const CheckDef& find_check(const std::string& id) {
  for (const CheckDef& def : registry()) {
    if (def.info.id == id) return def;
  }
  throw std::invalid_argument("unknown check id '" + id + "'");
}

}  // namespace

const std::vector<CheckInfo>& check_infos() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const CheckDef& def : registry()) out.push_back(def.info);
    return out;
  }();
  return infos;
}

bool is_check_id(std::string_view id) {
  for (const CheckDef& def : registry()) {
    if (def.info.id == id) return true;
  }
  return false;
}

CheckReport run_check(const std::string& id, const ParamMap& params,
                      const PolyFamily& family, bool expected_fail) {
  const CheckDef& def = find_check(id);
  CheckReport rep;
  rep.check_id = id;
  rep.params = params;
  if (def.info.uses_family) rep.params["seed"] = family.seed;

  const Outcome o = def.eval(params, family);
  rep.modulus = o.modulus;
  if (o.rejected) {
    rep.status = CheckStatus::Rejected;
    rep.message = o.reason;
    return rep;
  }

  // First differing pair decides; on full agreement the last pair is the
  // witness.
  const std::size_t pair_count = o.int_pairs.size() + o.mod_pairs.size();
  if (pair_count == 0) return rep;
  std::size_t failing = pair_count;
  for (std::size_t i = 0; i < o.int_pairs.size(); ++i) {
    if (o.int_pairs[i].first != o.int_pairs[i].second) {
      failing = i;
      break;
    }
  }
  if (failing == pair_count) {
    for (std::size_t i = 0; i < o.mod_pairs.size(); ++i) {
      if (o.mod_pairs[i].first != o.mod_pairs[i].second) {
        failing = o.int_pairs.size() + i;
        break;
      }
    }
  }
  const bool ok = failing == pair_count;
  const std::size_t witness = ok ? pair_count - 1 : failing;
  if (witness < o.int_pairs.size()) {
    rep.lhs = o.int_pairs[witness].first.coeff_strings();
    rep.rhs = o.int_pairs[witness].second.coeff_strings();
  } else {
    const auto& pr = o.mod_pairs[witness - o.int_pairs.size()];
    rep.lhs = pr.first.coeff_strings();
    rep.rhs = pr.second.coeff_strings();
  }
  if (ok) {
    rep.status = CheckStatus::Pass;
  } else {
    rep.status = expected_fail ? CheckStatus::ExpectedFailReproduced : CheckStatus::Fail;
    if (failing < o.labels.size()) {
      rep.message = "sub-identity " + o.labels[failing] + " differs";
    }
  }
  return rep;
}

CheckReport run_check(const std::string& id, const ParamMap& params, std::uint32_t seed,
                      bool expected_fail) {
  return run_check(id, params, PolyFamily::make(seed), expected_fail);
}

std::vector<ParamMap> enumerate_params(const std::string& id, const GridSpec& grid) {
  std::vector<ParamMap> out;
  find_check(id).enumerate(grid, out);
  return out;
}

}  // namespace fub
