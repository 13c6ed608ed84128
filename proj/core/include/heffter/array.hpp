#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "heffter/modular.hpp"

namespace heffter {

enum class Axis { rows, cols };

std::string_view to_string(Axis axis) noexcept;

/// Which construction produced an array; `external` marks arrays read from files.
enum class Provenance { t2, t2n, tn2, t2n2, t_div_n, lookup_n2, external };

std::string_view to_string(Provenance p) noexcept;
std::optional<Provenance> provenance_from_string(std::string_view name) noexcept;

/// Position of a cell, 0-based.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
};

/// A partially filled array over Z_v.
///
/// The grid itself enforces nothing beyond its shape: arrays read from files
/// may hold zeros, subgroup elements or repeated classes, and it is the
/// verifier's job to report them. Arrays returned by the constructors are
/// tight and square, and every entry is non-zero and outside J.
class NzsArray {
 public:
  NzsArray(ModulusContext ctx, std::size_t rows, std::size_t cols, Provenance provenance);

  const ModulusContext& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Provenance provenance() const noexcept { return provenance_; }

  std::optional<Residue> at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  std::optional<Residue> at(Cell cell) const { return at(cell.row, cell.col); }

  void set(std::size_t r, std::size_t c, std::optional<Residue> value) {
    cells_[r * cols_ + c] = value;
  }
  /// Stores x reduced mod v.
  void set_value(std::size_t r, std::size_t c, std::int64_t x) { set(r, c, ctx_.reduce(x)); }

  std::optional<std::int64_t> signed_at(std::size_t r, std::size_t c) const;

  bool is_square() const noexcept { return rows_ == cols_; }
  /// No empty cells.
  bool is_tight() const noexcept;
  std::size_t filled_count() const noexcept;

  /// Filled cells of one line in reading order (left to right, top to bottom).
  std::vector<Cell> line_cells(Axis axis, std::size_t index) const;
  /// Values of those cells.
  std::vector<Residue> line(Axis axis, std::size_t index) const;
  std::size_t line_count(Axis axis) const noexcept { return axis == Axis::rows ? rows_ : cols_; }

  /// Sum of a line mod v.
  Residue line_sum(Axis axis, std::size_t index) const;

  /// Signed grid, empty cells as std::nullopt.
  std::vector<std::vector<std::optional<std::int64_t>>> signed_rows() const;

  friend bool operator==(const NzsArray&, const NzsArray&) = default;

 private:
  ModulusContext ctx_;
  std::size_t rows_;
  std::size_t cols_;
  Provenance provenance_;
  std::vector<std::optional<Residue>> cells_;
};

}  // namespace heffter
