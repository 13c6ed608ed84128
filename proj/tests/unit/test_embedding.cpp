#include <doctest.h>

#include <map>
#include <set>

#include "heffter/constructions.hpp"
#include "heffter/decomposition.hpp"
#include "heffter/embedding.hpp"
#include "heffter/errors.hpp"
#include "support/helpers.hpp"

using namespace heffter;

namespace {

EmbeddingReport embed(std::int64_t n, std::int64_t t) {
  const auto a = construct(n, t);
  const auto found = find_compatible_orderings(a);
  REQUIRE(found.ordering);
  return trace_faces(build_rho0(a, *found.ordering));
}

std::map<std::size_t, std::size_t> lengths(const EmbeddingReport& r, Axis color) {
  std::map<std::size_t, std::size_t> out;
  for (const auto& e : r.spectrum) {
    if (e.color == color) out[e.length] += e.count;
  }
  return out;
}

}  // namespace

TEST_CASE("rotation seed") {
  SUBCASE("n = 1") {
    // construct(1, 1) is [[1]] over Z_3; rho0 swaps 1 and -1.
    const auto seed = build_rho0(construct(1, 1), DirectedCyclicOrdering::all_forward(1, 1));
    CHECK(seed.rho0[1] == 2);
    CHECK(seed.rho0[2] == 1);
    CHECK(seed.support.size() == 2);
  }
  SUBCASE("n = 3, compatible directions") {
    const auto a = construct_t2(3);
    const auto found = find_compatible_orderings(a);
    REQUIRE(found.ordering);
    const auto seed = build_rho0(a, *found.ordering);
    CHECK(seed.support.size() == 18);
  }
  SUBCASE("n = 3, all forward") {
    CHECK_THROWS_AS(build_rho0(construct_t2(3), DirectedCyclicOrdering::all_forward(3, 3)), NotCyclic);
  }
}

TEST_CASE("K_3 on the sphere") {
  const auto r = embed(1, 1);
  CHECK(r.vertices == 3);
  CHECK(r.edges == 3);
  CHECK(r.face_count == 2);
  CHECK(r.genus == 0);
  for (const auto& f : r.faces) CHECK(f.length() == 3);
  CHECK(r.closed);
  CHECK(r.two_colorable);
}

TEST_CASE("n = 3, t = 2") {
  const auto r = embed(3, 2);
  CHECK(r.face_count == 22);
  CHECK(r.genus == 70);
  const std::map<std::size_t, std::size_t> expected{{12, 5}, {15, 4}, {30, 2}};
  CHECK(lengths(r, Axis::cols) == expected);
  CHECK(lengths(r, Axis::rows) == expected);
  CHECK(predicted_spectrum_check(r, 3, 2).ok);
}

TEST_CASE("n = 3, t = 3") {
  // Row sums are 8, 12 and 10 (row 2 is 5, -12, 19), so row 2 has lambda 7
  // and contributes three faces of length 21.
  const auto r = embed(3, 3);
  CHECK(lengths(r, Axis::cols) == std::map<std::size_t, std::size_t>{{21, 9}});
  CHECK(lengths(r, Axis::rows) == std::map<std::size_t, std::size_t>{{21, 3}, {63, 2}});
  CHECK(r.face_count == 14);
  CHECK(r.genus == 78);
  const auto check = predicted_spectrum_check(r, 3, 3);
  CHECK(check.ok);
  CHECK(check.rule == "t=n: a multiple of n(2n+1)");
}

TEST_CASE("remaining n = 3 cases") {
  struct Want {
    std::int64_t t;
    std::int64_t faces;
    std::int64_t genus;
  };
  for (auto w : {Want{6, 18, 88}, Want{9, 6, 106}, Want{18, 26, 132}}) {
    CAPTURE(w.t);
    const auto r = embed(3, w.t);
    CHECK(r.face_count == w.faces);
    CHECK(r.genus == w.genus);
    CHECK(predicted_spectrum_check(r, 3, w.t).ok);
  }
}

TEST_CASE("line lambda") {
  CHECK(line_lambda(construct_t2(3), Axis::cols, 1) == 4);
  const auto a = construct(3, 3);
  for (std::size_t c = 0; c < 3; ++c) CHECK(line_lambda(a, Axis::cols, c) == 7);
  CHECK(line_lambda(a, Axis::rows, 0) == 21);
}

TEST_CASE("face structure follows the line sums") {
  for (auto [n, t] : heffter::testing::supported_params(7, 0)) {
    CAPTURE(n);
    CAPTURE(t);
    const auto a = construct(n, t);
    const auto found = find_compatible_orderings(a);
    REQUIRE(found.ordering);
    const auto r = trace_faces(build_rho0(a, *found.ordering));
    CHECK(r.closed);
    CHECK(r.two_colorable);
    CHECK(r.euler_even);
    CHECK(r.genus >= 0);

    std::size_t traced = 0;
    for (const auto& f : r.faces) traced += f.length();
    CHECK(static_cast<std::int64_t>(traced) == a.ctx().v() * (a.ctx().v() - t));

    // Per line: v / lambda faces of length n * lambda.
    std::map<std::pair<Axis, std::size_t>, std::vector<std::size_t>> by_line;
    for (const auto& f : r.faces) by_line[{f.color, f.generator}].push_back(f.length());
    for (Axis axis : {Axis::rows, Axis::cols}) {
      for (std::size_t k = 0; k < a.line_count(axis); ++k) {
        const auto lambda = static_cast<std::size_t>(line_lambda(a, axis, k));
        const auto& got = by_line[{axis, k}];
        CHECK(got.size() == static_cast<std::size_t>(a.ctx().v()) / lambda);
        for (auto len : got) CHECK(len == static_cast<std::size_t>(n) * lambda);
      }
    }

    // Each face is the closure of a block of D_{omega_r^-1} or D_{omega_c}.
    std::set<std::vector<Edge>> circuits;
    for (Axis axis : {Axis::rows, Axis::cols}) {
      const auto d = directed_decomposition(a, *found.ordering, axis);
      for (const auto& b : d.blocks) {
        auto edges = circuit_edges(circuit_closure(b, d.ctx));
        std::sort(edges.begin(), edges.end());
        circuits.insert(edges);
      }
    }
    for (const auto& f : r.faces) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < f.boundary.size(); ++i) {
        edges.push_back(make_edge(f.boundary[i], f.boundary[(i + 1) % f.boundary.size()]));
      }
      std::sort(edges.begin(), edges.end());
      CHECK(circuits.count(edges) == 1);
    }

    // Some (n, t) fall outside every prediction rule, e.g. t = n with 2n + 1 composite.
    auto prime = [](std::int64_t p) {
      for (std::int64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
      }
      return p > 1;
    };
    const bool predicted = t == 2 || ((t == 2 * n || t == n * n || t == 2 * n * n) && prime(n)) ||
                           (t == n && prime(2 * n + 1));
    if (predicted) {
      CHECK(predicted_spectrum_check(r, n, t).ok);
    } else {
      CHECK_THROWS_AS(predicted_spectrum_check(r, n, t), UnsupportedParameters);
    }
  }
}

TEST_CASE("faces are in canonical rotation") {
  const auto r = embed(3, 3);
  for (const auto& f : r.faces) {
    CHECK(f.boundary.front() == *std::min_element(f.boundary.begin(), f.boundary.end()));
  }
}

TEST_CASE("prediction rules") {
  EmbeddingReport r;
  r.spectrum = {SpectrumEntry{27, 3, Axis::cols}, SpectrumEntry{81, 3, Axis::rows}};
  CHECK(predicted_spectrum_check(r, 3, 9).ok);
  r.spectrum.push_back(SpectrumEntry{54, 1, Axis::rows});
  const auto bad = predicted_spectrum_check(r, 3, 9);
  CHECK_FALSE(bad.ok);
  CHECK(bad.violations == std::vector<std::size_t>{54});

  r.spectrum = {SpectrumEntry{12, 1, Axis::cols}, SpectrumEntry{36, 1, Axis::cols}, SpectrumEntry{108, 1, Axis::rows}};
  CHECK(predicted_spectrum_check(r, 3, 18).ok);

  CHECK_THROWS_AS(predicted_spectrum_check(r, 9, 81), UnsupportedParameters);  // 9 is not prime
  CHECK_THROWS_AS(predicted_spectrum_check(r, 4, 2), UnsupportedParameters);
}
