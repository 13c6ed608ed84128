#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/constructions.hpp"
#include "heffter/modular.hpp"

namespace heffter::testing {

inline std::vector<Residue> residues(const ModulusContext& ctx, std::initializer_list<std::int64_t> xs) {
  std::vector<Residue> out;
  for (auto x : xs) out.push_back(ctx.reduce(x));
  return out;
}

inline NzsArray from_signed(const ModulusContext& ctx, const std::vector<std::vector<std::int64_t>>& rows) {
  NzsArray a(ctx, rows.size(), rows.front().size(), Provenance::external);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) a.set_value(r, c, rows[r][c]);
  }
  return a;
}

struct Params {
  std::int64_t n;
  std::int64_t t;
};

/// Every (n, t) the acceptance suite sweeps: odd n <= max_odd with t a divisor
/// of n or t in {2, 2n, n^2, 2n^2}, and even n <= max_even with t = 2.
inline std::vector<Params> supported_params(std::int64_t max_odd = 15, std::int64_t max_even = 10) {
  std::vector<Params> out;
  for (std::int64_t n = 1; n <= max_odd; n += 2) {
    std::vector<std::int64_t> ts;
    for (std::int64_t d = 1; d <= n; ++d) {
      if (n % d == 0) ts.push_back(d);
    }
    for (std::int64_t t : {std::int64_t{2}, 2 * n, n * n, 2 * n * n}) ts.push_back(t);
    std::vector<std::int64_t> seen;
    for (auto t : ts) {
      bool dup = false;
      for (auto s : seen) dup = dup || s == t;
      if (dup) continue;
      seen.push_back(t);
      out.push_back({n, t});
    }
  }
  for (std::int64_t n = 2; n <= max_even; n += 2) out.push_back({n, 2});
  return out;
}

}  // namespace heffter::testing
