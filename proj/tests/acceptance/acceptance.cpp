// One line per acceptance criterion: PASS/FAIL, what was measured, wall time
// against the budget. Exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "heffter/heffter.hpp"
#include "support/helpers.hpp"
#include "support/reference_arrays.hpp"

using namespace heffter;
using heffter::testing::Params;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = out.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s  %d. %-28s %s [%.3f s, limit %.0f s%s]\n", pass ? "PASS" : "FAIL", id, name,
              out.detail.c_str(), secs, budget_s, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::vector<std::vector<std::int64_t>> signed_grid(const NzsArray& a) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& row : a.signed_rows()) {
    std::vector<std::int64_t> line;
    for (const auto& x : row) line.push_back(x.value_or(0));
    out.push_back(line);
  }
  return out;
}

std::string spectrum_text(const EmbeddingReport& r) {
  std::map<std::size_t, std::size_t> merged;
  for (const auto& e : r.spectrum) merged[e.length] += e.count;
  std::ostringstream s;
  s << '{';
  bool first = true;
  for (auto [len, count] : merged) {
    s << (first ? "" : ", ") << len << '^' << count;
    first = false;
  }
  s << '}';
  return s.str();
}

Outcome printed_arrays() {
  std::size_t exact = 0;
  std::string misses;
  for (const auto* ref : heffter::testing::kAllReferenceArrays) {
    const auto a = construct(ref->n, ref->t);
    if (a.ctx().v() == ref->v && signed_grid(a) == ref->rows) {
      ++exact;
    } else {
      misses += std::string(" ") + ref->label;
    }
  }
  const auto total = heffter::testing::kAllReferenceArrays.size();
  return {exact == total, std::to_string(exact) + "/" + std::to_string(total) + " arrays exact" + misses};
}

Outcome axiom_suite() {
  std::size_t ok = 0;
  std::string misses;
  const auto params = heffter::testing::supported_params(15, 10);
  for (auto [n, t] : params) {
    const auto a = construct(n, t);
    if (check_axioms(a).overall && check_globally_simple(a).ok()) {
      ++ok;
    } else {
      misses += " (" + std::to_string(n) + "," + std::to_string(t) + ")";
    }
  }
  return {ok == params.size(), std::to_string(ok) + "/" + std::to_string(params.size()) + " (n,t) pass" + misses};
}

Outcome sum_formulas() {
  std::size_t lines = 0, equal = 0;
  for (auto [n, t] : heffter::testing::supported_params(15, 10)) {
    const auto a = construct(n, t);
    for (Axis axis : {Axis::rows, Axis::cols}) {
      for (std::size_t k = 0; k < a.line_count(axis); ++k) {
        ++lines;
        if (closed_form_sums(n, t, axis, k) == a.line_sum(axis, k)) ++equal;
      }
    }
  }
  return {equal == lines, std::to_string(equal) + "/" + std::to_string(lines) + " line sums equal"};
}

Outcome zigzag_oracle() {
  std::mt19937_64 gen(31);
  std::size_t agree = 0, total = 0;
  for (auto variant : {ZigzagVariant::omega, ZigzagVariant::omega_inv, ZigzagVariant::nu, ZigzagVariant::nu_inv}) {
    for (int i = 0; i < 1000; ++i) {
      const std::int64_t v = std::uniform_int_distribution<std::int64_t>(1, 1'000'000)(gen);
      const auto ctx = ModulusContext::with_modulus(v, 1);
      std::uniform_int_distribution<std::int64_t> any(0, v - 1);
      const Residue a{any(gen)}, b{any(gen)}, g{any(gen)};
      const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(0, 20)(gen);
      auto direct = oracle::accumulate(oracle::zigzag_sequence(a, b, g, ell, variant, ctx), ctx);
      std::sort(direct.begin(), direct.end());
      ++total;
      if (zigzag_sums(a, b, g, ell, variant, ctx) == direct) ++agree;
    }
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " instances agree (4 variants)"};
}

Outcome decompositions() {
  std::size_t ok = 0, cases = 0;
  std::string misses;
  for (auto [n, t] : heffter::testing::supported_params(7, 0)) {
    ++cases;
    const auto a = construct(n, t);
    const auto dr = line_decomposition(a, Axis::rows);
    const auto dc = line_decomposition(a, Axis::cols);
    const std::size_t expected = multipartite_edges(a.ctx()).size();
    auto counted_exactly = [&](const Decomposition& d) {
      const auto counts = oracle::count_edge_cover(d.blocks);
      if (counts.size() != expected) return false;
      return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) {
        return kv.second == 1 && (kv.first.second - kv.first.first) % a.ctx().step() != 0;
      });
    };
    const bool good = check_partition(dr).ok && check_partition(dc).ok && counted_exactly(dr) &&
                      counted_exactly(dc) && check_orthogonal(dr, dc).ok;
    if (good) {
      ++ok;
    } else {
      misses += " (" + std::to_string(n) + "," + std::to_string(t) + ")";
    }
  }
  return {ok == cases, std::to_string(ok) + "/" + std::to_string(cases) +
                           " (n,t) with n in {1,3,5,7}: D_R, D_C partition and orthogonal" + misses};
}

Outcome compatibility() {
  std::size_t found = 0, odd_cases = 0;
  std::string misses;
  for (auto [n, t] : heffter::testing::supported_params(9, 0)) {
    ++odd_cases;
    const auto a = construct(n, t);
    const auto out = find_compatible_orderings(a);
    if (out.ordering && is_compatible(a, *out.ordering)) {
      ++found;
    } else {
      misses += " (" + std::to_string(n) + "," + std::to_string(t) + ")";
    }
  }
  std::size_t even_refuted = 0;
  for (std::int64_t t : {1, 2, 4, 8}) {
    const auto out = find_compatible_orderings(construct(2, t));
    if (!out.ordering && out.exhaustive && out.tries == 16) ++even_refuted;
  }
  return {found == odd_cases && even_refuted == 4,
          "odd n<=9: " + std::to_string(found) + "/" + std::to_string(odd_cases) +
              " found; n=2: " + std::to_string(even_refuted) + "/4 refuted over 2^4 patterns" + misses};
}

Outcome embeddings() {
  Outcome out;
  std::ostringstream detail;
  auto trace = [](std::int64_t n, std::int64_t t) {
    const auto a = construct(n, t);
    const auto found = find_compatible_orderings(a);
    if (!found.ordering) throw Error("no compatible orderings");
    return trace_faces(build_rho0(a, *found.ordering));
  };

  bool structural = true;
  for (std::int64_t t : {2, 3, 6, 9, 18}) {
    const auto r = trace(3, t);
    const bool ok = r.closed && r.two_colorable && r.euler_even && r.genus >= 0 &&
                    predicted_spectrum_check(r, 3, t).ok;
    structural = structural && ok;
    detail << "t=" << t << ":F=" << r.face_count << ",g=" << r.genus << (ok ? "" : "(bad)") << ' ';
  }
  out.pass = structural;

  const auto r33 = trace(3, 3);
  const bool t33 = r33.face_count == 12 && r33.genus == 79 && spectrum_text(r33) == "{21^9, 63^3}";
  if (!t33) {
    out.pass = false;
    detail << "| target (3,3) F=12 g=79 {21^9, 63^3} not met: got F=" << r33.face_count << " g=" << r33.genus
           << ' ' << spectrum_text(r33) << ' ';
  }
  const auto r32 = trace(3, 2);
  if (r32.face_count != 22 || r32.genus != 70) {
    out.pass = false;
    detail << "| target (3,2) missed ";
  }
  const auto r11 = trace(1, 1);
  if (r11.genus != 0) {
    out.pass = false;
    detail << "| target (1,1) missed ";
  }
  out.detail = detail.str();
  return out;
}

Outcome oracle_equivalence() {
  using heffter::testing::from_signed;
  std::size_t contained = 0, agree = 0, candidates = 0;
  const std::map<std::int64_t, std::vector<std::vector<std::int64_t>>> printed{
      {1, heffter::testing::kSmallT2}, {2, heffter::testing::kSmallT2},
      {4, heffter::testing::kSmallT4}, {8, heffter::testing::kSmallT8}};
  for (const auto& [t, grid] : printed) {
    const auto ctx = ModulusContext::tight(2, t);
    const auto all = oracle::enumerate_nh22(t);
    const auto wanted = from_signed(ctx, grid);
    if (std::any_of(all.begin(), all.end(), [&](const NzsArray& a) {
          return signed_grid(a) == signed_grid(wanted);
        })) {
      ++contained;
    }
    const std::int64_t v = ctx.v();
    for (std::int64_t code = 0; code < v * v * v * v; ++code) {
      NzsArray a(ctx, 2, 2, Provenance::external);
      std::int64_t c = code;
      for (std::size_t i = 0; i < 4; ++i, c /= v) a.set_value(i / 2, i % 2, c % v);
      ++candidates;
      const auto report = check_axioms(a);
      if ((report.overall && check_globally_simple(a).ok()) == oracle::satisfies_definition(a)) ++agree;
    }
  }
  return {contained == 4 && agree == candidates,
          std::to_string(contained) + "/4 printed arrays enumerated; verdicts agree on " + std::to_string(agree) +
              "/" + std::to_string(candidates) + " grids"};
}

}  // namespace

int main() {
  criterion(1, "printed-array reproduction", 1, printed_arrays);
  criterion(2, "axiom suite", 5, axiom_suite);
  criterion(3, "sum-formula suite", 5, sum_formulas);
  criterion(4, "zig-zag partial-sum oracle", 1, zigzag_oracle);
  criterion(5, "decomposition suite", 30, decompositions);
  criterion(6, "compatibility parity", 60, compatibility);
  criterion(7, "embedding suite", 30, embeddings);
  criterion(8, "oracle equivalence", 5, oracle_equivalence);
  std::printf("%d criteria failed\n", failures);
  return failures;
}
