#include "heffter/embedding.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "heffter/errors.hpp"

namespace heffter {

namespace {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Lexicographically least rotation among those starting at the minimum vertex.
std::vector<Residue> canonical_rotation(const std::vector<Residue>& cycle) {
  const Residue lo = *std::min_element(cycle.begin(), cycle.end());
  const std::size_t len = cycle.size();
  std::size_t best = len;
  for (std::size_t s = 0; s < len; ++s) {
    if (cycle[s] != lo) continue;
    if (best == len) {
      best = s;
      continue;
    }
    for (std::size_t k = 1; k < len; ++k) {
      const Residue x = cycle[(s + k) % len];
      const Residue y = cycle[(best + k) % len];
      if (x != y) {
        if (x < y) best = s;
        break;
      }
    }
  }
  std::vector<Residue> out;
  out.reserve(len);
  for (std::size_t k = 0; k < len; ++k) out.push_back(cycle[(best + k) % len]);
  return out;
}

}  // namespace

RotationSeed build_rho0(const NzsArray& a, const DirectedCyclicOrdering& dirs) {
  const auto& ctx = a.ctx();
  const auto v = static_cast<std::size_t>(ctx.v());
  RotationSeed seed{ctx, std::vector<std::int64_t>(v, -1), std::vector<Cell>(v), std::vector<char>(v, 0), {}};

  auto claim = [&](Residue x, Cell cell, bool positive, Residue image) {
    auto& slot = seed.rho0[static_cast<std::size_t>(x.value)];
    if (slot != -1) {
      throw NotCyclic("residue " + std::to_string(x.value) + " occurs twice in +-E(A)");
    }
    slot = image.value;
    seed.cell_of[static_cast<std::size_t>(x.value)] = cell;
    seed.positive[static_cast<std::size_t>(x.value)] = positive ? 1 : 0;
  };

  std::size_t entries = 0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const auto x = a.at(r, c);
      if (!x) continue;
      ++entries;
      const Cell cell{r, c};
      const Residue right = *a.at(line_successor(a, dirs, Axis::rows, cell));
      const Residue down = *a.at(line_successor(a, dirs, Axis::cols, cell));
      claim(*x, cell, true, ctx.neg(right));
      claim(ctx.neg(*x), cell, false, down);
    }
  }
  for (std::size_t x = 0; x < v; ++x) {
    if (seed.rho0[x] != -1) seed.support.push_back(Residue{static_cast<std::int64_t>(x)});
  }

  // Walk from the smallest element; a single cycle visits everything.
  if (entries == 0) throw NotCyclic("array has no entries");
  std::size_t steps = 0;
  const std::int64_t start = seed.support.front().value;
  std::int64_t x = start;
  do {
    x = seed.rho0[static_cast<std::size_t>(x)];
    ++steps;
  } while (x != start && steps <= seed.support.size());
  if (steps != seed.support.size()) {
    throw NotCyclic("rho0 has a cycle of length " + std::to_string(steps) + " instead of " +
                    std::to_string(seed.support.size()));
  }
  return seed;
}

EmbeddingReport trace_faces(const RotationSeed& seed) {
  const auto& ctx = seed.ctx;
  const std::int64_t v = ctx.v();

  std::int64_t g = v;
  for (Residue a : seed.support) g = std::gcd(g, a.value);
  if (g != 1) throw Error("+-E(A) generates a proper subgroup of Z_" + std::to_string(v));

  // Directed edge (x, a) is state x * S + slot(a).
  const std::size_t S = seed.support.size();
  std::vector<std::size_t> slot(static_cast<std::size_t>(v), S);
  for (std::size_t i = 0; i < S; ++i) slot[static_cast<std::size_t>(seed.support[i].value)] = i;

  EmbeddingReport report;
  std::vector<char> seen(static_cast<std::size_t>(v) * S, 0);
  std::size_t traced = 0;
  bool closed = true;
  for (std::int64_t x0 = 0; x0 < v; ++x0) {
    for (std::size_t i0 = 0; i0 < S; ++i0) {
      const std::size_t s0 = static_cast<std::size_t>(x0) * S + i0;
      if (seen[s0]) continue;
      const Residue a0 = seed.support[i0];
      Face face;
      face.color = seed.positive[static_cast<std::size_t>(a0.value)] ? Axis::cols : Axis::rows;
      const Cell gen = seed.cell_of[static_cast<std::size_t>(a0.value)];
      face.generator = face.color == Axis::cols ? gen.col : gen.row;

      std::vector<Residue> cycle;
      Residue x{x0};
      Residue a = a0;
      for (;;) {
        const std::size_t s = static_cast<std::size_t>(x.value) * S + slot[static_cast<std::size_t>(a.value)];
        if (seen[s]) {
          // Every orbit of a bijection returns to its seed first.
          if (s != s0) closed = false;
          break;
        }
        seen[s] = 1;
        cycle.push_back(x);
        const bool positive = seed.positive[static_cast<std::size_t>(a.value)] != 0;
        if (positive != (face.color == Axis::cols)) closed = false;
        x = ctx.add(x, a);
        const auto next = seed.rho0[static_cast<std::size_t>(ctx.neg(a).value)];
        if (next < 0) {
          closed = false;
          break;
        }
        a = Residue{next};
      }
      traced += cycle.size();
      face.boundary = canonical_rotation(cycle);
      report.faces.push_back(std::move(face));
    }
  }

  report.vertices = v;
  report.edges = v * (v - ctx.t()) / 2;
  report.face_count = static_cast<std::int64_t>(report.faces.size());
  report.closed = closed && traced == static_cast<std::size_t>(2 * report.edges);
  report.euler_characteristic = report.vertices - report.edges + report.face_count;
  report.euler_even = report.euler_characteristic % 2 == 0;
  report.genus = (2 - report.euler_characteristic) / 2;

  // Each undirected edge needs exactly one row-face and one column-face side.
  std::unordered_map<std::uint64_t, std::pair<int, int>> sides;
  sides.reserve(static_cast<std::size_t>(report.edges));
  for (const Face& f : report.faces) {
    const std::size_t len = f.boundary.size();
    for (std::size_t k = 0; k < len; ++k) {
      auto p = f.boundary[k].value;
      auto q = f.boundary[(k + 1) % len].value;
      if (p > q) std::swap(p, q);
      auto& side = sides[static_cast<std::uint64_t>(p) * static_cast<std::uint64_t>(v) +
                         static_cast<std::uint64_t>(q)];
      (f.color == Axis::rows ? side.first : side.second) += 1;
    }
  }
  report.two_colorable = sides.size() == static_cast<std::size_t>(report.edges) &&
                         std::all_of(sides.begin(), sides.end(), [](const auto& kv) {
                           return kv.second.first == 1 && kv.second.second == 1;
                         });

  std::map<std::pair<Axis, std::size_t>, std::size_t> tally;
  for (const Face& f : report.faces) ++tally[{f.color, f.length()}];
  for (const auto& [key, count] : tally) report.spectrum.push_back(SpectrumEntry{key.second, count, key.first});
  return report;
}

std::int64_t line_lambda(const NzsArray& a, Axis axis, std::size_t index) {
  return a.ctx().additive_order(a.line_sum(axis, index));
}

SpectrumCheck predicted_spectrum_check(const EmbeddingReport& report, std::int64_t n, std::int64_t t) {
  SpectrumCheck check;
  const bool odd = n % 2 == 1;
  const bool odd_prime = odd && is_prime(n);
  std::function<bool(std::int64_t)> allowed;
  if (t == 2 && odd) {
    const std::int64_t m = n * (n * n + 1) / 2;
    check.rule = "t=2: 4n or a multiple of n(n^2+1)/2";
    allowed = [=](std::int64_t len) { return len == 4 * n || len % m == 0; };
  } else if (t == 2 * n && odd_prime) {
    check.rule = "t=2n: 4n or a multiple of n^2";
    allowed = [=](std::int64_t len) { return len == 4 * n || len % (n * n) == 0; };
  } else if (t == n * n && odd_prime) {
    check.rule = "t=n^2: 3n^2 or 3n^3";
    allowed = [=](std::int64_t len) { return len == 3 * n * n || len == 3 * n * n * n; };
  } else if (t == 2 * n * n && odd_prime) {
    check.rule = "t=2n^2: 4n, 4n^2 or 4n^3";
    allowed = [=](std::int64_t len) { return len == 4 * n || len == 4 * n * n || len == 4 * n * n * n; };
  } else if (t == n && is_prime(2 * n + 1)) {
    check.rule = "t=n: a multiple of n(2n+1)";
    allowed = [=](std::int64_t len) { return len % (n * (2 * n + 1)) == 0; };
  } else {
    throw UnsupportedParameters("no face-length prediction for (n=" + std::to_string(n) +
                                ", t=" + std::to_string(t) + ")");
  }
  for (const SpectrumEntry& e : report.spectrum) {
    if (!allowed(static_cast<std::int64_t>(e.length))) check.violations.push_back(e.length);
  }
  std::sort(check.violations.begin(), check.violations.end());
  check.violations.erase(std::unique(check.violations.begin(), check.violations.end()), check.violations.end());
  check.ok = check.violations.empty();
  return check;
}

}  // namespace heffter
