#pragma once

// Slow, independent reference implementations used to cross-check the
// library: naive accumulation, the zig-zag orderings written out term by
// term, a brute-force NH_t(2;2) enumeration and plain edge counting.

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/decomposition.hpp"
#include "heffter/modular.hpp"

namespace heffter::oracle {

/// Left fold of sums mod v: (x_1, x_1 + x_2, ...).
std::vector<Residue> accumulate(std::span<const Residue> seq, const ModulusContext& ctx);

/// The ordering itself (not its partial sums), e.g. omega = (a, b, a+g, b-g, ..., a+ell*g).
std::vector<Residue> zigzag_sequence(Residue a, Residue b, Residue g, std::int64_t ell,
                                     ZigzagVariant variant, const ModulusContext& ctx);

/// Checks the definition of a globally simple NH_t(m;n) from scratch, without
/// using the verifier.
bool satisfies_definition(const NzsArray& a);

/// Every 2 x 2 array over Z_{8+t} with entries from Z_{8+t} \ J that
/// satisfies satisfies_definition(), in lexicographic order of the signed
/// cells (row-major). t must be 1, 2, 4 or 8; throws UnsupportedParameters
/// otherwise. With reduce_symmetry only the least array of each class under
/// row swap, column swap, transposition and negation is kept.
std::vector<NzsArray> enumerate_nh22(std::int64_t t, bool reduce_symmetry = false);

/// Multiplicity of every unordered edge used by the blocks, keyed (min, max).
std::map<std::pair<std::int64_t, std::int64_t>, std::size_t> count_edge_cover(
    std::span<const PathBlock> blocks);

}  // namespace heffter::oracle
