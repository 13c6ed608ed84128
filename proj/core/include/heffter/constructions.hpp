#pragma once

// Direct constructions of tight, globally simple non-zero sum arrays
// NH_t(n;n) and the closed-form row/column sums that come with them.
//
// Index conventions: the entry rules below are written with 1-based (i, j)
// as in the usual tables; the C++ API (NzsArray::at, closed_form_sums) is
// 0-based throughout.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/modular.hpp"

namespace heffter {

/// t = 2, any n >= 1. a_{i,j} = eps * (j + (i-1)n) over Z_{2n^2+2},
/// eps = +1 when i = j (mod 2) and -1 otherwise.
NzsArray construct_t2(std::int64_t n);

/// t = 2n, n odd. Over Z_{2n^2+2n}:
///   a_{i,j} = i + (n+1)(j-1)             if i = j (mod 2)
///   a_{i,j} = n^2 + n - i - (n+1)(j-1)   otherwise
NzsArray construct_t2n(std::int64_t n);

/// t = n^2, n odd. Over Z_{3n^2}:
///   eps * (3n(j-1) + 3(i-1) + 1)   for j <= (n+1)/2
///   eps * (3nj - 3i + 1)           for j >= (n+3)/2
NzsArray construct_tn2(std::int64_t n);

/// t = 2n^2, n odd. Over Z_{4n^2}, every entry odd.
NzsArray construct_t2n2(std::int64_t n);

/// The n x t base block H of the t | n construction and its shifted copies
/// H_{alpha n}, which add eps * alpha * n to every cell of H
/// (eps = +1 on cells with i = j (mod 2), -1 elsewhere).
class BlockArray {
 public:
  BlockArray(std::int64_t n, std::int64_t t);

  const ModulusContext& ctx() const noexcept { return ctx_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t width() const noexcept { return width_; }
  /// n / t blocks laid out as H, -H_n, H_2n, -H_3n, ...
  std::size_t block_count() const noexcept { return blocks_; }

  Residue base(std::size_t r, std::size_t c) const { return base_[r * width_ + c]; }
  /// Cell (r, c) of H_{alpha n}; alpha = 0 gives H.
  Residue shifted(std::size_t alpha, std::size_t r, std::size_t c) const;

  NzsArray assemble() const;

 private:
  ModulusContext ctx_;
  std::size_t rows_;
  std::size_t width_;
  std::size_t blocks_;
  std::vector<Residue> base_;
};

/// n odd, t | n. Over Z_{2n^2+t}; when t = n the array is H itself.
NzsArray construct_t_div_n(std::int64_t n, std::int64_t t);

/// The three 2 x 2 arrays for n = 2 and t in {1, 2, 4, 8} (t = 1 and t = 2
/// share [[1,2],[3,4]]).
NzsArray construct_n2_lookup(std::int64_t t);

/// Which constructor construct(n, t) dispatches to, if any.
///
///   t = 2                -> t2 (any n)
///   n = 2, t in {1,4,8}  -> lookup_n2
///   n odd, t | n         -> t_div_n (covers t = 1)
///   n odd, t = 2n        -> t2n
///   n odd, t = n^2       -> tn2
///   n odd, t = 2n^2      -> t2n2
std::optional<Provenance> construction_for(std::int64_t n, std::int64_t t) noexcept;

/// Throws UnsupportedParameters when construction_for(n, t) is empty.
NzsArray construct(std::int64_t n, std::int64_t t);

/// Closed-form total of row/column `index` (0-based) of construct(n, t),
/// reduced mod v. Throws UnsupportedParameters for the n = 2 lookup arrays
/// and for parameters construct() rejects.
Residue closed_form_sums(std::int64_t n, std::int64_t t, Axis axis, std::size_t index);

}  // namespace heffter
