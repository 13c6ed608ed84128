#pragma once

// Exact arithmetic in Z_v together with the order-t subgroup J that a
// relative array has to avoid, plus anchored partial sums.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace heffter {

/// Largest array order accepted by ModulusContext::tight. Keeps v <= 4'000'000
/// so every product formed by the library fits comfortably in 64 bits.
inline constexpr std::int64_t kMaxOrder = 1000;

/// Canonical representative of a class of Z_v, always in [0, v-1]. The
/// modulus lives in the ModulusContext that produced the value.
struct Residue {
  std::int64_t value = 0;

  friend constexpr auto operator<=>(const Residue&, const Residue&) = default;
};

/// Z_v with its subgroup J of order t (generated by step = v/t).
///
/// Contexts built with tight() come from an n x n array with no empty cells,
/// so v = 2n^2 + t and t | 2n^2. Contexts built with with_modulus() only know
/// v and t; their order() is 0.
class ModulusContext {
 public:
  /// Throws UnsupportedParameters unless n in [1, kMaxOrder] and t | 2n^2.
  static ModulusContext tight(std::int64_t n, std::int64_t t);

  /// Throws UnsupportedParameters unless v >= 1, t >= 1 and t | v.
  static ModulusContext with_modulus(std::int64_t v, std::int64_t t);

  std::int64_t order() const noexcept { return n_; }
  std::int64_t t() const noexcept { return t_; }
  std::int64_t v() const noexcept { return v_; }
  std::int64_t step() const noexcept { return step_; }

  Residue reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % v_;
    return Residue{r < 0 ? r + v_ : r};
  }
  Residue add(Residue a, Residue b) const noexcept { return reduce(a.value + b.value); }
  Residue sub(Residue a, Residue b) const noexcept { return reduce(a.value - b.value); }
  Residue neg(Residue a) const noexcept { return reduce(-a.value); }
  Residue scale(Residue a, std::int64_t k) const noexcept { return reduce(reduce(k).value * a.value); }

  bool in_subgroup(Residue a) const noexcept { return a.value % step_ == 0; }

  /// Signed view in [-floor(v/2), floor(v/2)]; v/2 itself maps to +v/2.
  std::int64_t signed_value(Residue a) const noexcept {
    return 2 * a.value > v_ ? a.value - v_ : a.value;
  }

  /// |signed_value|, i.e. the +-class the residue belongs to.
  std::int64_t class_of(Residue a) const noexcept {
    return a.value * 2 > v_ ? v_ - a.value : a.value;
  }

  /// Additive order of a in Z_v.
  std::int64_t additive_order(Residue a) const noexcept;

  friend bool operator==(const ModulusContext&, const ModulusContext&) = default;

 private:
  ModulusContext(std::int64_t n, std::int64_t t, std::int64_t v)
      : n_(n), t_(t), v_(v), step_(v / t) {}

  std::int64_t n_;
  std::int64_t t_;
  std::int64_t v_;
  std::int64_t step_;
};

/// J = { k * v/t : 0 <= k < t }, ascending.
std::vector<Residue> subgroup(const ModulusContext& ctx);

/// A line read linearly after rotating it so that `start` comes first.
struct AnchoredSequence {
  std::vector<Residue> elements;
  std::size_t start = 0;

  /// The elements in the order they are summed.
  std::vector<Residue> linear() const;
  /// Same elements, reversed, anchored at what was the last summed element.
  AnchoredSequence reversed() const;
};

/// (s_1, ..., s_k), s_i the sum of the first i anchored elements mod v.
std::vector<Residue> partial_sums(const AnchoredSequence& seq, const ModulusContext& ctx);

/// Why a sequence fails to be simple. Positions index the partial-sum list
/// (0-based). For a zero partial sum first == second.
struct SimplicityWitness {
  enum class Kind { zero_sum, repeated_sum };
  Kind kind;
  std::size_t first;
  std::size_t second;

  friend bool operator==(const SimplicityWitness&, const SimplicityWitness&) = default;
};

struct SimplicityResult {
  std::optional<SimplicityWitness> witness;

  bool simple() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return simple(); }
};

/// Partial sums non-zero and pairwise distinct; otherwise the earliest offence.
SimplicityResult is_simple(const AnchoredSequence& seq, const ModulusContext& ctx);

/// The four zig-zag orderings built from a, b, g and ell:
///   omega = (a, b, a+g, b-g, ..., b-(ell-1)g, a+ell*g)     length 2ell+1
///   nu    = (a, b, a+g, b-g, ..., a+ell*g, b-ell*g)        length 2ell+2
/// and their reversals.
enum class ZigzagVariant { omega, omega_inv, nu, nu_inv };

std::string_view to_string(ZigzagVariant variant) noexcept;

/// Closed-form unordered list of the partial sums of a zig-zag ordering,
/// returned as a sorted multiset (duplicates are kept).
std::vector<Residue> zigzag_sums(Residue a, Residue b, Residue g, std::int64_t ell,
                                 ZigzagVariant variant, const ModulusContext& ctx);

}  // namespace heffter
