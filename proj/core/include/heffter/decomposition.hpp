#pragma once

// Cyclic path decompositions of K_{v/t x t} developed from simple line
// orderings, partition and orthogonality checks, and circuit closures.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/modular.hpp"
#include "heffter/verifier.hpp"

namespace heffter {

/// A path (x_0, ..., x_k) in Z_v with pairwise distinct vertices.
struct PathBlock {
  std::vector<Residue> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }

  friend bool operator==(const PathBlock&, const PathBlock&) = default;
};

/// Unordered edge stored as (min, max).
struct Edge {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Residue x, Residue y) noexcept;

/// Edges of a path block, in path order.
std::vector<Edge> block_edges(const PathBlock& block);

/// Every vertex shifted by g.
PathBlock translate(const PathBlock& block, Residue g, const ModulusContext& ctx);

struct Decomposition {
  ModulusContext ctx;
  Axis axis = Axis::rows;
  std::vector<PathBlock> base_blocks;
  /// base_blocks[b] + g is stored at blocks[b * v + g].
  std::vector<PathBlock> blocks;
};

/// (0, s_1, ..., s_k) from the partial sums of `line`. Throws NotSimple when
/// the partial sums are zero or collide.
PathBlock base_block(const AnchoredSequence& line, const ModulusContext& ctx);

/// All {x, y} with y - x outside J, sorted. There are v(v-t)/2 of them.
std::vector<Edge> multipartite_edges(const ModulusContext& ctx);

/// Adds every translate of every base block. Work is split by translate.
Decomposition develop(std::vector<PathBlock> base_blocks, const ModulusContext& ctx,
                      Axis axis = Axis::rows, unsigned threads = 1);

/// Base blocks from the natural ordering of every row (or column) of `a`.
Decomposition line_decomposition(const NzsArray& a, Axis axis, unsigned threads = 1);

/// Base blocks from directed readings: rows read against dirs.rows (the
/// decomposition of omega_r^{-1}), or columns read along dirs.cols (omega_c).
Decomposition directed_decomposition(const NzsArray& a, const DirectedCyclicOrdering& dirs,
                                     Axis axis, unsigned threads = 1);

struct EdgeDefect {
  Edge edge;
  /// How often the blocks use the edge. Expected is 1 for multipartite edges, 0 otherwise.
  std::size_t multiplicity = 0;

  friend bool operator==(const EdgeDefect&, const EdgeDefect&) = default;
};

struct PartitionReport {
  bool ok = false;
  std::size_t expected_edges = 0;
  std::size_t covered_edges = 0;
  /// Sorted by edge.
  std::vector<EdgeDefect> defects;
};

/// Every edge of K_{v/t x t} is used exactly once and no other pair is used.
PartitionReport check_partition(const Decomposition& d, unsigned threads = 1);

struct OrthogonalityReport {
  bool ok = false;
  /// (index in d1, index in d2) of the first offending pair, scanning d2 in order.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Every block of d1 shares at most one edge with every block of d2.
/// Throws std::invalid_argument when the moduli differ.
OrthogonalityReport check_orthogonal(const Decomposition& d1, const Decomposition& d2);

struct Circuit {
  /// x_0, ..., with the closing edge back to x_0 implied. Vertices may repeat.
  std::vector<Residue> vertices;
  PathBlock source;
  std::int64_t lambda = 0;

  std::size_t edge_count() const noexcept { return vertices.size(); }
};

/// Union of P + i(x_k - x_0) for i in [0, lambda), lambda = v / gcd(x_k - x_0, v).
Circuit circuit_closure(const PathBlock& path, const ModulusContext& ctx);

/// Edges of a circuit in traversal order, closing edge included.
std::vector<Edge> circuit_edges(const Circuit& circuit);

}  // namespace heffter
