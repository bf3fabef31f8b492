#include "fub/stirling.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace fub {

namespace {

// rows[n][k]; grown whole rows at a time under the lock, so concurrent
// readers only ever see complete rows.
struct Triangle {
  std::vector<std::vector<Int>> rows{{Int(1)}};
};

std::mutex mu;
std::map<unsigned, Triangle> second_kind;   // keyed by r
std::map<unsigned, Triangle> first_kind;    // keyed by r

// weight(n, k): multiplier of rows[n-1][k] in the recurrence.
template <typename Weight>
Int lookup(Triangle& t, unsigned n, unsigned k, Weight weight) {
  while (t.rows.size() <= n) {
    const unsigned m = static_cast<unsigned>(t.rows.size());
    const auto& prev = t.rows[m - 1];
    std::vector<Int> row(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
      Int v = 0;
      if (j < prev.size()) v += weight(m, j) * prev[j];
      if (j >= 1) v += prev[j - 1];
      row[j] = std::move(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t.rows[n][k];
}

}  // namespace

Int stirling2_r(unsigned n, unsigned k, unsigned r) {
  if (k > n) return 0;
  std::lock_guard lock(mu);
  return lookup(second_kind[r], n, k,
                [r](unsigned, unsigned j) { return Int(j) + r; });
}

Int stirling2(unsigned n, unsigned k) { return stirling2_r(n, k, 0); }

Int stirling1_r_unsigned(unsigned n, unsigned k, unsigned r) {
  if (k > n) return 0;
  std::lock_guard lock(mu);
  return lookup(first_kind[r], n, k,
                [r](unsigned m, unsigned) { return Int(m) - 1 + r; });
}

}  // namespace fub
