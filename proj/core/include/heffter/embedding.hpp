#pragma once

// Face-2-colourable embeddings of K_{v/t x t} built from compatible
// orderings of a tight array: the rotation seed rho0 on +-E(A), face tracing
// on directed edges, the face-length spectrum and the genus.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "heffter/array.hpp"
#include "heffter/modular.hpp"
#include "heffter/verifier.hpp"

namespace heffter {

/// rho0(a) = -omega_r(a) for a in E(A), rho0(a) = omega_c(-a) for a in -E(A).
struct RotationSeed {
  ModulusContext ctx;
  /// Indexed by residue value; -1 where the residue is not in +-E(A).
  std::vector<std::int64_t> rho0;
  /// The cell holding +a (for a in E(A)) or -a (for a in -E(A)); meaningless where rho0 is -1.
  std::vector<Cell> cell_of;
  /// True where the residue is an entry of A (as opposed to the negative of one).
  std::vector<char> positive;
  /// +-E(A), ascending.
  std::vector<Residue> support;
};

/// Throws NotCyclic unless rho0 is one cycle through all of +-E(A). That also
/// fails when the entries of A are not distinct up to sign.
RotationSeed build_rho0(const NzsArray& a, const DirectedCyclicOrdering& dirs);

struct Face {
  /// Vertex cycle, rotated to start at its smallest vertex (lexicographically
  /// least such rotation), orientation as traced.
  std::vector<Residue> boundary;
  /// cols: differences in E(A); rows: differences in -E(A).
  Axis color = Axis::rows;
  /// Index of the row or column the differences come from.
  std::size_t generator = 0;

  std::size_t length() const noexcept { return boundary.size(); }
};

struct SpectrumEntry {
  std::size_t length = 0;
  std::size_t count = 0;
  Axis color = Axis::rows;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct EmbeddingReport {
  std::vector<Face> faces;
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t face_count = 0;
  std::int64_t euler_characteristic = 0;
  /// (2 - chi) / 2; only meaningful when euler_even.
  std::int64_t genus = 0;
  bool euler_even = false;
  /// Every directed edge lies on exactly one face.
  bool closed = false;
  /// Every undirected edge lies on one row face and one column face.
  bool two_colorable = false;
  /// Sorted by (color, length).
  std::vector<SpectrumEntry> spectrum;
};

/// Orbits of (x, a) -> (x + a, rho0(-a)) on the v(v-t) directed edges.
/// Throws Error when +-E(A) does not generate Z_v (disconnected graph).
EmbeddingReport trace_faces(const RotationSeed& seed);

/// v / gcd(line sum, v).
std::int64_t line_lambda(const NzsArray& a, Axis axis, std::size_t index);

/// Face lengths the known results allow for a tight array of order n:
///   t = 2:     4n or a multiple of n(n^2+1)/2     (n odd)
///   t = 2n:    4n or a multiple of n^2            (n an odd prime)
///   t = n^2:   3n^2 or 3n^3                       (n an odd prime)
///   t = 2n^2:  4n, 4n^2 or 4n^3                   (n an odd prime)
///   t = n:     a multiple of n(2n+1)              (2n+1 prime)
/// Rules are tried in this order; the first whose t and hypotheses match wins.
struct SpectrumCheck {
  bool ok = false;
  std::string rule;
  /// Face lengths outside the predicted set, ascending, without repeats.
  std::vector<std::size_t> violations;
};

/// Throws UnsupportedParameters when no rule applies to (n, t).
SpectrumCheck predicted_spectrum_check(const EmbeddingReport& report, std::int64_t n, std::int64_t t);

}  // namespace heffter
