#include "heffter/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>

#include "heffter/errors.hpp"

namespace heffter {

namespace {

std::uint64_t edge_key(const Edge& e, std::int64_t v) {
  return static_cast<std::uint64_t>(e.lo) * static_cast<std::uint64_t>(v) +
         static_cast<std::uint64_t>(e.hi);
}

template <typename Fn>
void run_sharded(unsigned threads, Fn&& fn) {
  threads = std::max(1U, threads);
  if (threads == 1) {
    fn(0U, 1U);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w) pool.emplace_back([&fn, w, threads] { fn(w, threads); });
}

Direction opposite(Direction d) {
  return d == Direction::forward ? Direction::reverse : Direction::forward;
}

}  // namespace

Edge make_edge(Residue x, Residue y) noexcept {
  return x.value < y.value ? Edge{x.value, y.value} : Edge{y.value, x.value};
}

std::vector<Edge> block_edges(const PathBlock& block) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < block.vertices.size(); ++i) {
    edges.push_back(make_edge(block.vertices[i - 1], block.vertices[i]));
  }
  return edges;
}

PathBlock translate(const PathBlock& block, Residue g, const ModulusContext& ctx) {
  PathBlock out;
  out.vertices.reserve(block.vertices.size());
  for (Residue x : block.vertices) out.vertices.push_back(ctx.add(x, g));
  return out;
}

PathBlock base_block(const AnchoredSequence& line, const ModulusContext& ctx) {
  if (auto result = is_simple(line, ctx); !result) {
    const auto& w = *result.witness;
    throw NotSimple(w.kind == SimplicityWitness::Kind::zero_sum
                        ? "partial sum " + std::to_string(w.first + 1) + " is zero"
                        : "partial sums " + std::to_string(w.first + 1) + " and " +
                              std::to_string(w.second + 1) + " coincide");
  }
  PathBlock block;
  block.vertices.push_back(Residue{0});
  for (Residue s : partial_sums(line, ctx)) block.vertices.push_back(s);
  return block;
}

std::vector<Edge> multipartite_edges(const ModulusContext& ctx) {
  std::vector<Edge> edges;
  const std::int64_t v = ctx.v();
  edges.reserve(static_cast<std::size_t>(v * (v - ctx.t()) / 2));
  for (std::int64_t x = 0; x < v; ++x) {
    for (std::int64_t y = x + 1; y < v; ++y) {
      if ((y - x) % ctx.step() != 0) edges.push_back(Edge{x, y});
    }
  }
  return edges;
}

Decomposition develop(std::vector<PathBlock> base_blocks, const ModulusContext& ctx, Axis axis,
                      unsigned threads) {
  Decomposition d{ctx, axis, std::move(base_blocks), {}};
  const auto v = static_cast<std::size_t>(ctx.v());
  d.blocks.resize(d.base_blocks.size() * v);
  run_sharded(threads, [&](unsigned first, unsigned stride) {
    for (std::size_t g = first; g < v; g += stride) {
      for (std::size_t b = 0; b < d.base_blocks.size(); ++b) {
        d.blocks[b * v + g] = translate(d.base_blocks[b], Residue{static_cast<std::int64_t>(g)}, ctx);
      }
    }
  });
  return d;
}

Decomposition line_decomposition(const NzsArray& a, Axis axis, unsigned threads) {
  std::vector<PathBlock> base;
  for (std::size_t k = 0; k < a.line_count(axis); ++k) {
    base.push_back(base_block(natural_ordering(a, axis, k), a.ctx()));
  }
  return develop(std::move(base), a.ctx(), axis, threads);
}

Decomposition directed_decomposition(const NzsArray& a, const DirectedCyclicOrdering& dirs,
                                     Axis axis, unsigned threads) {
  std::vector<PathBlock> base;
  for (std::size_t k = 0; k < a.line_count(axis); ++k) {
    const Direction dir = axis == Axis::rows ? opposite(dirs.rows.at(k)) : dirs.cols.at(k);
    base.push_back(base_block(directed_reading(a, axis, k, dir), a.ctx()));
  }
  return develop(std::move(base), a.ctx(), axis, threads);
}

PartitionReport check_partition(const Decomposition& d, unsigned threads) {
  const std::int64_t v = d.ctx.v();
  threads = std::max(1U, threads);

  // Per-worker counts keyed by edge, merged afterwards.
  std::vector<std::unordered_map<std::uint64_t, std::size_t>> partial(threads);
  const auto uv = static_cast<std::size_t>(v);
  const std::size_t translates = d.base_blocks.empty() ? 0 : d.blocks.size() / d.base_blocks.size();
  run_sharded(threads, [&](unsigned first, unsigned stride) {
    auto& counts = partial[first];
    // Shard by translate g; blocks not laid out by develop() go to worker 0.
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      const std::size_t g = translates == uv ? i % uv : 0;
      if (g % stride != first) continue;
      for (const Edge& e : block_edges(d.blocks[i])) ++counts[edge_key(e, v)];
    }
  });
  auto& counts = partial.front();
  for (std::size_t w = 1; w < partial.size(); ++w) {
    for (auto [key, c] : partial[w]) counts[key] += c;
  }

  PartitionReport report;
  for (std::int64_t x = 0; x < v; ++x) {
    for (std::int64_t y = x + 1; y < v; ++y) {
      const bool wanted = (y - x) % d.ctx.step() != 0;
      const Edge e{x, y};
      auto it = counts.find(edge_key(e, v));
      const std::size_t c = it == counts.end() ? 0 : it->second;
      if (wanted) ++report.expected_edges;
      if (c > 0) ++report.covered_edges;
      if (c != (wanted ? 1U : 0U)) report.defects.push_back(EdgeDefect{e, c});
    }
  }
  // Loops (x, x) cannot come from a path but are still reported if present.
  for (std::int64_t x = 0; x < v; ++x) {
    if (auto it = counts.find(edge_key(Edge{x, x}, v)); it != counts.end()) {
      report.defects.push_back(EdgeDefect{Edge{x, x}, it->second});
    }
  }
  std::sort(report.defects.begin(), report.defects.end(),
            [](const EdgeDefect& l, const EdgeDefect& r) { return l.edge < r.edge; });
  report.ok = report.defects.empty();
  return report;
}

OrthogonalityReport check_orthogonal(const Decomposition& d1, const Decomposition& d2) {
  if (!(d1.ctx == d2.ctx)) throw std::invalid_argument("decompositions over different moduli");
  const std::int64_t v = d1.ctx.v();

  std::unordered_map<std::uint64_t, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < d1.blocks.size(); ++i) {
    for (const Edge& e : block_edges(d1.blocks[i])) owners[edge_key(e, v)].push_back(i);
  }

  OrthogonalityReport report;
  std::unordered_map<std::size_t, std::size_t> shared;
  for (std::size_t j = 0; j < d2.blocks.size(); ++j) {
    shared.clear();
    for (const Edge& e : block_edges(d2.blocks[j])) {
      auto it = owners.find(edge_key(e, v));
      if (it == owners.end()) continue;
      for (std::size_t i : it->second) {
        if (++shared[i] >= 2) {
          report.witness = std::pair{i, j};
          return report;
        }
      }
    }
  }
  report.ok = true;
  return report;
}

Circuit circuit_closure(const PathBlock& path, const ModulusContext& ctx) {
  if (path.vertices.size() < 2) throw std::invalid_argument("circuit closure needs a path with an edge");
  Circuit circuit;
  circuit.source = path;
  const Residue d = ctx.sub(path.vertices.back(), path.vertices.front());
  circuit.lambda = ctx.additive_order(d);
  for (std::int64_t i = 0; i < circuit.lambda; ++i) {
    const Residue shift = ctx.scale(d, i);
    for (std::size_t p = 0; p + 1 < path.vertices.size(); ++p) {
      circuit.vertices.push_back(ctx.add(path.vertices[p], shift));
    }
  }
  return circuit;
}

std::vector<Edge> circuit_edges(const Circuit& circuit) {
  std::vector<Edge> edges;
  const std::size_t len = circuit.vertices.size();
  for (std::size_t i = 0; i < len; ++i) {
    edges.push_back(make_edge(circuit.vertices[i], circuit.vertices[(i + 1) % len]));
  }
  return edges;
}

}  // namespace heffter
