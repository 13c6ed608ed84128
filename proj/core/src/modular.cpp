#include "heffter/modular.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "heffter/errors.hpp"

namespace heffter {

namespace {

// Keeps every pairwise product of canonical residues below 2^62.
constexpr std::int64_t kMaxModulus = (std::int64_t{1} << 31) - 1;

}  // namespace

ModulusContext ModulusContext::tight(std::int64_t n, std::int64_t t) {
  if (n < 1 || n > kMaxOrder) {
    throw UnsupportedParameters("array order n=" + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxOrder) + "]");
  }
  if (t < 1 || (2 * n * n) % t != 0) {
    throw UnsupportedParameters("t=" + std::to_string(t) + " is not admissible for n=" +
                                std::to_string(n) + " (t must divide 2n^2)");
  }
  return ModulusContext(n, t, 2 * n * n + t);
}

ModulusContext ModulusContext::with_modulus(std::int64_t v, std::int64_t t) {
  if (v < 1 || v > kMaxModulus) {
    throw UnsupportedParameters("modulus v=" + std::to_string(v) + " out of range");
  }
  if (t < 1 || v % t != 0) {
    throw UnsupportedParameters("subgroup order t=" + std::to_string(t) +
                                " does not divide v=" + std::to_string(v));
  }
  return ModulusContext(0, t, v);
}

std::int64_t ModulusContext::additive_order(Residue a) const noexcept {
  return v_ / std::gcd(a.value, v_);
}

std::vector<Residue> subgroup(const ModulusContext& ctx) {
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(ctx.t()));
  for (std::int64_t k = 0; k < ctx.t(); ++k) out.push_back(Residue{k * ctx.step()});
  return out;
}

std::vector<Residue> AnchoredSequence::linear() const {
  std::vector<Residue> out(elements.begin(), elements.end());
  if (!out.empty()) {
    std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(start % out.size()),
                out.end());
  }
  return out;
}

AnchoredSequence AnchoredSequence::reversed() const {
  auto seq = linear();
  std::reverse(seq.begin(), seq.end());
  return AnchoredSequence{std::move(seq), 0};
}

std::vector<Residue> partial_sums(const AnchoredSequence& seq, const ModulusContext& ctx) {
  std::vector<Residue> sums;
  sums.reserve(seq.elements.size());
  Residue acc{0};
  for (Residue x : seq.linear()) {
    acc = ctx.add(acc, x);
    sums.push_back(acc);
  }
  return sums;
}

SimplicityResult is_simple(const AnchoredSequence& seq, const ModulusContext& ctx) {
  const auto sums = partial_sums(seq, ctx);
  std::unordered_map<std::int64_t, std::size_t> seen;
  seen.reserve(sums.size() * 2);
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i].value == 0) {
      return {SimplicityWitness{SimplicityWitness::Kind::zero_sum, i, i}};
    }
    auto [it, inserted] = seen.emplace(sums[i].value, i);
    if (!inserted) {
      return {SimplicityWitness{SimplicityWitness::Kind::repeated_sum, it->second, i}};
    }
  }
  return {};
}

std::string_view to_string(ZigzagVariant variant) noexcept {
  switch (variant) {
    case ZigzagVariant::omega: return "omega";
    case ZigzagVariant::omega_inv: return "omega_inv";
    case ZigzagVariant::nu: return "nu";
    case ZigzagVariant::nu_inv: return "nu_inv";
  }
  return "?";
}

std::vector<Residue> zigzag_sums(Residue a, Residue b, Residue g, std::int64_t ell,
                                 ZigzagVariant variant, const ModulusContext& ctx) {
  const Residue ab = ctx.add(a, b);
  const Residue abg = ctx.add(ab, g);
  std::vector<Residue> out;
  out.reserve(static_cast<std::size_t>(2 * ell + 2));

  // {k * step : k in [1, last]}
  auto multiples = [&](Residue step, std::int64_t last) {
    for (std::int64_t k = 1; k <= last; ++k) out.push_back(ctx.scale(step, k));
  };
  // {base + k * step : k in [0, ell]}
  auto progression = [&](Residue base, Residue step) {
    for (std::int64_t k = 0; k <= ell; ++k) out.push_back(ctx.add(base, ctx.scale(step, k)));
  };

  switch (variant) {
    case ZigzagVariant::omega:
      multiples(ab, ell);
      progression(a, abg);
      break;
    case ZigzagVariant::omega_inv:
      multiples(abg, ell);
      progression(ctx.add(a, ctx.scale(g, ell)), ab);
      break;
    case ZigzagVariant::nu:
      multiples(ab, ell + 1);
      progression(a, abg);
      break;
    case ZigzagVariant::nu_inv:
      multiples(ab, ell + 1);
      progression(ctx.sub(b, ctx.scale(g, ell)), abg);
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace heffter
