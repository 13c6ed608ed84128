#include "heffter/verifier.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <thread>

#include "heffter/errors.hpp"

namespace heffter {

AnchoredSequence natural_ordering(const NzsArray& a, Axis axis, std::size_t index) {
  return AnchoredSequence{a.line(axis, index), 0};
}

GlobalSimplicity check_globally_simple(const NzsArray& a) {
  for (Axis axis : {Axis::rows, Axis::cols}) {
    for (std::size_t k = 0; k < a.line_count(axis); ++k) {
      auto result = is_simple(natural_ordering(a, axis, k), a.ctx());
      if (!result) return {LineFailure{LineRef{axis, k}, *result.witness}};
    }
  }
  return {};
}

VerificationReport check_axioms(const NzsArray& a) {
  VerificationReport report;
  const auto& ctx = a.ctx();

  // (a1)
  for (std::size_t r = 0; r < a.rows(); ++r) report.row_counts.push_back(a.line_cells(Axis::rows, r).size());
  for (std::size_t c = 0; c < a.cols(); ++c) report.col_counts.push_back(a.line_cells(Axis::cols, c).size());
  auto uniform = [](const std::vector<std::size_t>& counts) {
    return std::adjacent_find(counts.begin(), counts.end(), std::not_equal_to<>()) == counts.end();
  };
  if (uniform(report.row_counts) && uniform(report.col_counts) && a.rows() > 0 && a.cols() > 0) {
    const auto h = static_cast<std::int64_t>(report.row_counts.front());
    const auto k = static_cast<std::int64_t>(report.col_counts.front());
    const auto m = static_cast<std::int64_t>(a.rows());
    const auto n = static_cast<std::int64_t>(a.cols());
    report.filled_counts_ok = h > 0 && m * h == n * k && ctx.v() == 2 * n * k + ctx.t();
  }

  // (b1): cover[x] counts x in {+-a : a in A}.
  std::vector<std::uint32_t> cover(static_cast<std::size_t>(ctx.v()), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      auto x = a.at(r, c);
      if (!x) continue;
      if (ctx.in_subgroup(*x)) {
        report.subgroup_cells.push_back(Cell{r, c});
        continue;
      }
      ++cover[static_cast<std::size_t>(x->value)];
      ++cover[static_cast<std::size_t>(ctx.neg(*x).value)];
    }
  }
  for (std::int64_t x = 1; 2 * x <= ctx.v(); ++x) {
    if (ctx.in_subgroup(Residue{x})) continue;
    const auto count = cover[static_cast<std::size_t>(x)];
    // x = v/2 is its own negative and is counted twice per occurrence.
    const std::uint32_t expected = 2 * x == ctx.v() ? 2 : 1;
    if (count == 0) report.missing_classes.push_back(x);
    if (count > expected) report.duplicated_classes.push_back(x);
  }
  report.support_ok = report.subgroup_cells.empty() && report.missing_classes.empty() &&
                      report.duplicated_classes.empty();

  // (c1)
  for (Axis axis : {Axis::rows, Axis::cols}) {
    for (std::size_t k = 0; k < a.line_count(axis); ++k) {
      if (a.line_sum(axis, k).value == 0) report.zero_sum_lines.push_back(LineRef{axis, k});
    }
  }
  report.sums_ok = report.zero_sum_lines.empty();

  auto simplicity = check_globally_simple(a);
  report.globally_simple = simplicity.ok();
  report.first_not_simple = simplicity.failure;

  report.overall = report.filled_counts_ok && report.support_ok && report.sums_ok &&
                   report.globally_simple;
  return report;
}

bool is_admissible(std::int64_t n, std::int64_t k, std::int64_t t, std::int64_t lambda) {
  if (n < 1 || k < 1 || t < 1 || lambda < 1) return false;
  const std::int64_t total = 2 * n * k;
  return total % lambda == 0 && (total / lambda) % t == 0;
}

std::optional<std::vector<Residue>> find_simple_ordering(std::span<const Residue> elements,
                                                         const ModulusContext& ctx,
                                                         std::size_t bound) {
  if (elements.size() > bound) {
    throw BoundExceeded("simple-ordering search limited to " + std::to_string(bound) +
                        " elements, got " + std::to_string(elements.size()));
  }
  // Distinct values with multiplicities so equal elements are not permuted among themselves.
  std::map<std::int64_t, std::size_t> counts;
  for (Residue x : elements) ++counts[ctx.reduce(x.value).value];
  std::vector<std::int64_t> values;
  std::vector<std::size_t> remaining;
  for (auto [value, count] : counts) {
    values.push_back(value);
    remaining.push_back(count);
  }

  std::vector<Residue> chosen;
  std::vector<std::int64_t> sums;  // partial sums so far; tiny, linear scan is fine
  chosen.reserve(elements.size());
  sums.reserve(elements.size());

  auto dfs = [&](auto&& self, std::int64_t acc) -> bool {
    if (chosen.size() == elements.size()) return true;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (remaining[i] == 0) continue;
      const std::int64_t next = ctx.add(Residue{acc}, Residue{values[i]}).value;
      if (next == 0 || std::find(sums.begin(), sums.end(), next) != sums.end()) continue;
      --remaining[i];
      chosen.push_back(Residue{values[i]});
      sums.push_back(next);
      if (self(self, next)) return true;
      sums.pop_back();
      chosen.pop_back();
      ++remaining[i];
    }
    return false;
  };
  if (!dfs(dfs, 0)) return std::nullopt;
  return chosen;
}

DirectedCyclicOrdering DirectedCyclicOrdering::all_forward(std::size_t rows, std::size_t cols) {
  return DirectedCyclicOrdering{std::vector<Direction>(rows, Direction::forward),
                                std::vector<Direction>(cols, Direction::forward)};
}

AnchoredSequence directed_reading(const NzsArray& a, Axis axis, std::size_t index, Direction dir) {
  auto seq = natural_ordering(a, axis, index);
  return dir == Direction::forward ? seq : seq.reversed();
}

namespace {

// Filled cells of every line, precomputed once per array, plus each cell's
// position inside its row and column.
struct LineIndex {
  std::vector<std::vector<std::size_t>> row_cells;  // ids into `cells`
  std::vector<std::vector<std::size_t>> col_cells;
  std::vector<Cell> cells;
  std::vector<std::size_t> pos_in_row;
  std::vector<std::size_t> pos_in_col;
  std::vector<std::size_t> id_of;  // r * cols + c -> id, or npos

  explicit LineIndex(const NzsArray& a)
      : row_cells(a.rows()), col_cells(a.cols()), id_of(a.rows() * a.cols(), npos) {
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (!a.at(r, c)) continue;
        const std::size_t id = cells.size();
        cells.push_back(Cell{r, c});
        id_of[r * a.cols() + c] = id;
        pos_in_row.push_back(row_cells[r].size());
        row_cells[r].push_back(id);
      }
    }
    pos_in_col.resize(cells.size());
    for (std::size_t c = 0; c < a.cols(); ++c) {
      for (std::size_t r = 0; r < a.rows(); ++r) {
        const std::size_t id = id_of[r * a.cols() + c];
        if (id == npos) continue;
        pos_in_col[id] = col_cells[c].size();
        col_cells[c].push_back(id);
      }
    }
  }

  static std::size_t step(const std::vector<std::size_t>& line, std::size_t pos, Direction dir) {
    const std::size_t len = line.size();
    return line[dir == Direction::forward ? (pos + 1) % len : (pos + len - 1) % len];
  }

  std::size_t next_in_row(std::size_t id, Direction dir) const {
    return step(row_cells[cells[id].row], pos_in_row[id], dir);
  }
  std::size_t next_in_col(std::size_t id, Direction dir) const {
    return step(col_cells[cells[id].col], pos_in_col[id], dir);
  }

  template <typename RowDir, typename ColDir>
  std::size_t cycle_count(RowDir row_dir, ColDir col_dir) const {
    std::vector<char> seen(cells.size(), 0);
    std::size_t cycles = 0;
    for (std::size_t start = 0; start < cells.size(); ++start) {
      if (seen[start]) continue;
      ++cycles;
      for (std::size_t x = start; !seen[x];) {
        seen[x] = 1;
        const std::size_t y = next_in_row(x, row_dir(cells[x].row));
        x = next_in_col(y, col_dir(cells[y].col));
      }
    }
    return cycles;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Cell line_successor(const NzsArray& a, const DirectedCyclicOrdering& dirs, Axis axis, Cell cell) {
  auto cells = a.line_cells(axis, axis == Axis::rows ? cell.row : cell.col);
  const auto it = std::find(cells.begin(), cells.end(), cell);
  const std::size_t len = cells.size();
  const std::size_t pos = static_cast<std::size_t>(it - cells.begin());
  const Direction dir = axis == Axis::rows ? dirs.rows[cell.row] : dirs.cols[cell.col];
  return cells[dir == Direction::forward ? (pos + 1) % len : (pos + len - 1) % len];
}

std::size_t composite_cycle_count(const NzsArray& a, const DirectedCyclicOrdering& dirs) {
  LineIndex index(a);
  return index.cycle_count([&](std::size_t r) { return dirs.rows[r]; },
                           [&](std::size_t c) { return dirs.cols[c]; });
}

bool is_compatible(const NzsArray& a, const DirectedCyclicOrdering& dirs) {
  if (dirs.rows.size() != a.rows() || dirs.cols.size() != a.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (!is_simple(directed_reading(a, Axis::rows, r, dirs.rows[r]), a.ctx())) return false;
  }
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_simple(directed_reading(a, Axis::cols, c, dirs.cols[c]), a.ctx())) return false;
  }
  return a.filled_count() > 0 && composite_cycle_count(a, dirs) == 1;
}

CompatibilityOutcome find_compatible_orderings(const NzsArray& a, const CompatibilitySearch& opts) {
  const std::size_t rows = a.rows();
  const std::size_t lines = rows + a.cols();
  CompatibilityOutcome outcome;
  if (a.filled_count() == 0) return outcome;

  // Which (line, direction) readings are usable at all.
  std::vector<std::array<bool, 2>> usable(lines);
  for (std::size_t k = 0; k < lines; ++k) {
    const Axis axis = k < rows ? Axis::rows : Axis::cols;
    const std::size_t idx = k < rows ? k : k - rows;
    for (Direction dir : {Direction::forward, Direction::reverse}) {
      usable[k][static_cast<std::size_t>(dir)] =
          is_simple(directed_reading(a, axis, idx, dir), a.ctx()).simple();
    }
  }

  const LineIndex index(a);
  outcome.exhaustive = lines <= 2 * opts.exhaustive_up_to && lines < 63;
  const std::uint64_t total =
      outcome.exhaustive ? (std::uint64_t{1} << lines) : opts.max_tries;

  // Pattern for try `i`: one bit per line, set bit = reversed.
  auto pattern = [&](std::uint64_t i) {
    std::vector<Direction> bits(lines);
    if (outcome.exhaustive) {
      for (std::size_t k = 0; k < lines; ++k) {
        bits[k] = (i >> k) & 1U ? Direction::reverse : Direction::forward;
      }
    } else {
      std::mt19937_64 gen(splitmix64(opts.seed ^ splitmix64(i)));
      std::uint64_t word = 0;
      for (std::size_t k = 0; k < lines; ++k) {
        if (k % 64 == 0) word = gen();
        bits[k] = (word >> (k % 64)) & 1U ? Direction::reverse : Direction::forward;
      }
    }
    return bits;
  };
  auto accepts = [&](const std::vector<Direction>& bits) {
    for (std::size_t k = 0; k < lines; ++k) {
      if (!usable[k][static_cast<std::size_t>(bits[k])]) return false;
    }
    return index.cycle_count([&](std::size_t r) { return bits[r]; },
                             [&](std::size_t c) { return bits[rows + c]; }) == 1;
  };

  std::atomic<std::uint64_t> best{total};
  auto worker = [&](std::uint64_t first, std::uint64_t stride) {
    for (std::uint64_t i = first; i < total && i < best.load(std::memory_order_relaxed); i += stride) {
      if (accepts(pattern(i))) {
        std::uint64_t current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
        return;
      }
    }
  };
  const unsigned threads = std::max(1U, opts.threads);
  if (threads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w, threads);
  }

  const std::uint64_t found = best.load();
  if (found == total) {
    outcome.tries = total;
    return outcome;
  }
  auto bits = pattern(found);
  DirectedCyclicOrdering dirs;
  dirs.rows.assign(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(rows));
  dirs.cols.assign(bits.begin() + static_cast<std::ptrdiff_t>(rows), bits.end());
  outcome.ordering = std::move(dirs);
  outcome.tries = found + 1;
  return outcome;
}

}  // namespace heffter
