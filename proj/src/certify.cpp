#include "fub/certify.hpp"

#include <sstream>
#include <stdexcept>

#include "fub/families.hpp"
#include "fub/sturm.hpp"

namespace fub {

CheckReport real_roots_certify(unsigned n, unsigned r, unsigned s) {
  if (n < 1) throw std::invalid_argument("real-roots certification requires n >= 1");
  CheckReport rep;
  rep.check_id = "real-roots";
  rep.params = {{"n", n}, {"r", r}, {"s", s}};
  const IntPoly f = fubini_rs(n, r, s + r);
  const RootCount count = sturm_count_nonpositive(RatPoly::from_int(f));
  rep.lhs = {std::to_string(count.nonpositive_roots)};
  rep.rhs = {std::to_string(count.squarefree_degree)};
  rep.status = count.nonpositive_roots == count.squarefree_degree ? CheckStatus::Pass
                                                                  : CheckStatus::Fail;
  std::ostringstream msg;
  msg << "distinct roots in (-inf,0]: " << count.nonpositive_roots
      << ", squarefree degree: " << count.squarefree_degree;
  rep.message = msg.str();
  return rep;
}

CheckReport derivative_identity_check(unsigned n, unsigned r, unsigned s) {
  CheckReport rep;
  rep.check_id = "deriv";
  rep.params = {{"n", n}, {"r", r}, {"s", s}};
  const IntPoly lhs = x_pow(r) * x_plus_1_pow(s) * fubini_rs(n + 1, r, s + r);
  const IntPoly inner = x_pow(r) * x_plus_1_pow(s + 1) * fubini_rs(n, r, s + r);
  const IntPoly rhs = IntPoly::x() * inner.derivative();
  rep.lhs = lhs.coeff_strings();
  rep.rhs = rhs.coeff_strings();
  rep.status = lhs == rhs ? CheckStatus::Pass : CheckStatus::Fail;
  return rep;
}

}  // namespace fub
