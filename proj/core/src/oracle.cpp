#include "heffter/oracle.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <string>

#include "heffter/errors.hpp"

namespace heffter::oracle {

std::vector<Residue> accumulate(std::span<const Residue> seq, const ModulusContext& ctx) {
  std::vector<Residue> out;
  std::int64_t acc = 0;
  for (Residue x : seq) {
    acc = (acc + x.value) % ctx.v();
    out.push_back(Residue{acc});
  }
  return out;
}

std::vector<Residue> zigzag_sequence(Residue a, Residue b, Residue g, std::int64_t ell,
                                     ZigzagVariant variant, const ModulusContext& ctx) {
  std::vector<Residue> seq;
  const bool nu = variant == ZigzagVariant::nu || variant == ZigzagVariant::nu_inv;
  for (std::int64_t k = 0; k <= ell; ++k) {
    seq.push_back(ctx.reduce(a.value + k * g.value));
    if (k < ell || nu) seq.push_back(ctx.reduce(b.value - k * g.value));
  }
  if (variant == ZigzagVariant::omega_inv || variant == ZigzagVariant::nu_inv) {
    std::reverse(seq.begin(), seq.end());
  }
  return seq;
}

bool satisfies_definition(const NzsArray& a) {
  const std::int64_t v = a.ctx().v();
  const std::int64_t t = a.ctx().t();
  if (v % t != 0) return false;
  const std::int64_t step = v / t;
  auto mod = [v](std::int64_t x) { return ((x % v) + v) % v; };

  // Collect lines by hand.
  std::vector<std::vector<std::int64_t>> rows(a.rows()), cols(a.cols());
  std::multiset<std::int64_t> signed_support;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (auto x = a.at(r, c)) {
        rows[r].push_back(x->value);
        cols[c].push_back(x->value);
        signed_support.insert(mod(x->value));
        signed_support.insert(mod(-x->value));
      }
    }
  }

  // Every row holds h cells, every column k, with v = 2nk + t (n columns).
  if (rows.empty() || cols.empty()) return false;
  const std::size_t h = rows[0].size();
  const std::size_t k = cols[0].size();
  for (const auto& r : rows) {
    if (r.size() != h) return false;
  }
  for (const auto& c : cols) {
    if (c.size() != k) return false;
  }
  if (h == 0 || v != 2 * static_cast<std::int64_t>(a.cols() * k) + t) return false;

  // {+-x} is exactly Z_v minus multiples of v/t, each once. When 2x = v the
  // class {x, -x} is a single residue and is hit twice.
  for (std::int64_t y = 0; y < v; ++y) {
    const auto hits = signed_support.count(y);
    const std::size_t want = y % step == 0 ? 0 : (2 * y == v ? 2 : 1);
    if (hits != want) return false;
  }

  // Lines sum to non-zero values and read simply from their first cell.
  auto simple_line = [&](const std::vector<std::int64_t>& line) {
    std::set<std::int64_t> seen;
    std::int64_t acc = 0;
    for (std::int64_t x : line) {
      acc = mod(acc + x);
      if (acc == 0 || !seen.insert(acc).second) return false;
    }
    return true;
  };
  return std::all_of(rows.begin(), rows.end(), simple_line) &&
         std::all_of(cols.begin(), cols.end(), simple_line);
}

namespace {

using Grid = std::array<std::int64_t, 4>;  // signed cells, row-major

Grid transform(const Grid& g, int which) {
  Grid out = g;
  if (which & 1) out = {out[2], out[3], out[0], out[1]};  // swap rows
  if (which & 2) out = {out[1], out[0], out[3], out[2]};  // swap columns
  if (which & 4) out = {out[0], out[2], out[1], out[3]};  // transpose
  if (which & 8) {
    for (auto& x : out) x = -x;
  }
  return out;
}

}  // namespace

std::vector<NzsArray> enumerate_nh22(std::int64_t t, bool reduce_symmetry) {
  if (t != 1 && t != 2 && t != 4 && t != 8) {
    throw UnsupportedParameters("NH_t(2;2) needs t in {1, 2, 4, 8}, got " + std::to_string(t));
  }
  const auto ctx = ModulusContext::tight(2, t);
  const std::int64_t v = ctx.v();

  std::vector<std::int64_t> classes;
  for (std::int64_t x = 1; 2 * x <= v; ++x) {
    if (x % ctx.step() != 0) classes.push_back(x);
  }

  std::vector<Grid> found;
  std::sort(classes.begin(), classes.end());
  do {
    for (int signs = 0; signs < 16; ++signs) {
      Grid g;
      for (std::size_t i = 0; i < 4; ++i) {
        g[i] = (signs >> (3 - i)) & 1 ? -classes[i] : classes[i];
      }
      // Early prune: no row or column may sum to 0 mod v.
      if ((g[0] + g[1]) % v == 0 || (g[2] + g[3]) % v == 0 || (g[0] + g[2]) % v == 0 ||
          (g[1] + g[3]) % v == 0) {
        continue;
      }
      NzsArray a(ctx, 2, 2, Provenance::external);
      for (std::size_t i = 0; i < 4; ++i) a.set_value(i / 2, i % 2, g[i]);
      if (satisfies_definition(a)) found.push_back(g);
    }
  } while (std::next_permutation(classes.begin(), classes.end()));

  std::sort(found.begin(), found.end());
  if (reduce_symmetry) {
    auto reduce_grid = [v](Grid g) {
      for (auto& x : g) {
        x = ((x % v) + v) % v;
        if (2 * x > v) x -= v;
      }
      return g;
    };
    std::vector<Grid> kept;
    for (const Grid& g : found) {
      bool least = true;
      for (int w = 1; w < 16 && least; ++w) least = !(reduce_grid(transform(g, w)) < g);
      if (least) kept.push_back(g);
    }
    found = std::move(kept);
  }

  std::vector<NzsArray> out;
  for (const Grid& g : found) {
    NzsArray a(ctx, 2, 2, Provenance::external);
    for (std::size_t i = 0; i < 4; ++i) a.set_value(i / 2, i % 2, g[i]);
    out.push_back(std::move(a));
  }
  return out;
}

std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> count_edge_cover(
    std::span<const PathBlock> blocks) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> counts;
  for (const PathBlock& b : blocks) {
    for (std::size_t i = 0; i + 1 < b.vertices.size(); ++i) {
      auto x = b.vertices[i].value;
      auto y = b.vertices[i + 1].value;
      ++counts[{std::min(x, y), std::max(x, y)}];
    }
  }
  return counts;
}

}  // namespace heffter::oracle
