#pragma once

// Exact certification of the defining conditions of a non-zero sum array:
//   (a1) uniform filled-cell counts per row and per column,
//   (b1) {+-x : x in A} covers Z_v \ J exactly once,
//   (c1) no row or column sums to 0,
// plus global simplicity, simple-ordering search and the direction search
// for compatible orderings.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/modular.hpp"

namespace heffter {

struct LineRef {
  Axis axis = Axis::rows;
  std::size_t index = 0;

  friend bool operator==(const LineRef&, const LineRef&) = default;
};

struct LineFailure {
  LineRef line;
  SimplicityWitness witness;
};

struct GlobalSimplicity {
  /// First line (rows before columns) whose natural ordering is not simple.
  std::optional<LineFailure> failure;

  bool ok() const noexcept { return !failure.has_value(); }
  explicit operator bool() const noexcept { return ok(); }
};

struct VerificationReport {
  bool filled_counts_ok = false;
  std::vector<std::size_t> row_counts;
  std::vector<std::size_t> col_counts;

  bool support_ok = false;
  /// +-classes (values in [1, floor(v/2)]) that are not covered.
  std::vector<std::int64_t> missing_classes;
  /// Classes covered more than once.
  std::vector<std::int64_t> duplicated_classes;
  /// Cells holding an element of J (0 included).
  std::vector<Cell> subgroup_cells;

  bool sums_ok = false;
  std::vector<LineRef> zero_sum_lines;

  bool globally_simple = false;
  std::optional<LineFailure> first_not_simple;

  bool overall = false;
};

/// Natural ordering of a line anchored at its first filled cell.
AnchoredSequence natural_ordering(const NzsArray& a, Axis axis, std::size_t index);

/// Every row anchored at its leftmost filled cell and every column at its
/// topmost filled cell is simple.
GlobalSimplicity check_globally_simple(const NzsArray& a);

/// Runs all four checks. Never throws on bad arrays; failures are fields.
/// (a1) also requires m*h = n*k and v = 2nk + t for the observed h, k.
VerificationReport check_axioms(const NzsArray& a);

/// t | 2nk / lambda (with lambda | 2nk).
bool is_admissible(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lambda = 1);

inline constexpr std::size_t kDefaultOrderingBound = 12;

/// Depth-first search for an ordering of the multiset `elements` whose
/// partial sums are non-zero and pairwise distinct. Returns std::nullopt when
/// none exists. Throws BoundExceeded when elements.size() > bound.
std::optional<std::vector<Residue>> find_simple_ordering(std::span<const Residue> elements,
                                                         const ModulusContext& ctx,
                                                         std::size_t bound = kDefaultOrderingBound);

enum class Direction { forward, reverse };

/// A cyclic ordering of every row and every column: each line is read in its
/// natural order or reversed. Reversed lines are anchored at their last cell.
struct DirectedCyclicOrdering {
  std::vector<Direction> rows;
  std::vector<Direction> cols;

  static DirectedCyclicOrdering all_forward(std::size_t rows, std::size_t cols);

  friend bool operator==(const DirectedCyclicOrdering&, const DirectedCyclicOrdering&) = default;
};

/// The anchored reading of a line in the given direction.
AnchoredSequence directed_reading(const NzsArray& a, Axis axis, std::size_t index, Direction dir);

/// Successor of `cell` under omega_r (along its row) or omega_c (along its column).
Cell line_successor(const NzsArray& a, const DirectedCyclicOrdering& dirs, Axis axis, Cell cell);

/// Number of cycles of omega_c o omega_r on the filled cells.
std::size_t composite_cycle_count(const NzsArray& a, const DirectedCyclicOrdering& dirs);

/// omega_c o omega_r is one cycle through all filled cells and every
/// directed reading is simple.
bool is_compatible(const NzsArray& a, const DirectedCyclicOrdering& dirs);

struct CompatibilitySearch {
  std::uint64_t seed = 1;
  std::uint64_t max_tries = 200'000;
  /// Arrays with rows + cols <= 2 * exhaustive_up_to are searched exhaustively.
  std::size_t exhaustive_up_to = 6;
  unsigned threads = 1;
};

struct CompatibilityOutcome {
  std::optional<DirectedCyclicOrdering> ordering;
  /// Patterns examined, counting up to and including the reported one.
  std::uint64_t tries = 0;
  bool exhaustive = false;
};

/// Searches direction flags (2^{rows+cols} patterns). Small arrays are
/// enumerated in pattern-index order regardless of max_tries; larger ones
/// draw max_tries patterns from a seeded generator.
/// The result depends on (seed, max_tries) only, never on `threads`.
CompatibilityOutcome find_compatible_orderings(const NzsArray& a, const CompatibilitySearch& opts = {});

}  // namespace heffter
