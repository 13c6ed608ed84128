#include "heffter/array.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace heffter {

namespace {

constexpr std::array<std::pair<Provenance, std::string_view>, 7> kProvenanceNames{{
    {Provenance::t2, "t2"},
    {Provenance::t2n, "t2n"},
    {Provenance::tn2, "tn2"},
    {Provenance::t2n2, "t2n2"},
    {Provenance::t_div_n, "t_div_n"},
    {Provenance::lookup_n2, "lookup_n2"},
    {Provenance::external, "external"},
}};

}  // namespace

std::string_view to_string(Axis axis) noexcept { return axis == Axis::rows ? "rows" : "cols"; }

std::string_view to_string(Provenance p) noexcept {
  for (const auto& [value, name] : kProvenanceNames) {
    if (value == p) return name;
  }
  return "external";
}

std::optional<Provenance> provenance_from_string(std::string_view name) noexcept {
  for (const auto& [value, label] : kProvenanceNames) {
    if (label == name) return value;
  }
  return std::nullopt;
}

NzsArray::NzsArray(ModulusContext ctx, std::size_t rows, std::size_t cols, Provenance provenance)
    : ctx_(ctx), rows_(rows), cols_(cols), provenance_(provenance), cells_(rows * cols) {}

std::optional<std::int64_t> NzsArray::signed_at(std::size_t r, std::size_t c) const {
  auto x = at(r, c);
  if (!x) return std::nullopt;
  return ctx_.signed_value(*x);
}

bool NzsArray::is_tight() const noexcept {
  return std::all_of(cells_.begin(), cells_.end(), [](const auto& x) { return x.has_value(); });
}

std::size_t NzsArray::filled_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(cells_.begin(), cells_.end(), [](const auto& x) { return x.has_value(); }));
}

std::vector<Cell> NzsArray::line_cells(Axis axis, std::size_t index) const {
  std::vector<Cell> out;
  const std::size_t len = axis == Axis::rows ? cols_ : rows_;
  for (std::size_t k = 0; k < len; ++k) {
    Cell cell = axis == Axis::rows ? Cell{index, k} : Cell{k, index};
    if (at(cell)) out.push_back(cell);
  }
  return out;
}

std::vector<Residue> NzsArray::line(Axis axis, std::size_t index) const {
  std::vector<Residue> out;
  for (Cell cell : line_cells(axis, index)) out.push_back(*at(cell));
  return out;
}

Residue NzsArray::line_sum(Axis axis, std::size_t index) const {
  Residue acc{0};
  for (Residue x : line(axis, index)) acc = ctx_.add(acc, x);
  return acc;
}

std::vector<std::vector<std::optional<std::int64_t>>> NzsArray::signed_rows() const {
  std::vector<std::vector<std::optional<std::int64_t>>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r].reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out[r].push_back(signed_at(r, c));
  }
  return out;
}

}  // namespace heffter
