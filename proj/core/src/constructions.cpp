#include "heffter/constructions.hpp"

#include <string>

#include "heffter/errors.hpp"

namespace heffter {

namespace {

std::string params(std::int64_t n, std::int64_t t) {
  return "(n=" + std::to_string(n) + ", t=" + std::to_string(t) + ")";
}

std::string pair(std::int64_t n, std::int64_t t) {
  return "(" + std::to_string(n) + "," + std::to_string(t) + ")";
}

void require_odd(std::int64_t n, const char* what) {
  if (n < 1 || n % 2 == 0) {
    throw UnsupportedParameters(std::string(what) + " requires odd n >= 1, got n=" +
                                std::to_string(n));
  }
}

constexpr std::int64_t sign(bool positive) { return positive ? 1 : -1; }
constexpr std::int64_t alternating(std::int64_t k) { return k % 2 == 0 ? 1 : -1; }  // (-1)^k

// Fills an n x n array from a 1-based entry rule.
template <typename Rule>
NzsArray fill(std::int64_t n, std::int64_t t, Provenance provenance, Rule rule) {
  NzsArray a(ModulusContext::tight(n, t), static_cast<std::size_t>(n), static_cast<std::size_t>(n),
             provenance);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      a.set_value(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), rule(i, j));
    }
  }
  return a;
}

}  // namespace

NzsArray construct_t2(std::int64_t n) {
  return fill(n, 2, Provenance::t2, [n](std::int64_t i, std::int64_t j) {
    return sign((i - j) % 2 == 0) * (j + (i - 1) * n);
  });
}

NzsArray construct_t2n(std::int64_t n) {
  require_odd(n, "construct_t2n");
  return fill(n, 2 * n, Provenance::t2n, [n](std::int64_t i, std::int64_t j) {
    if ((i - j) % 2 == 0) return i + (n + 1) * (j - 1);
    return n * n + n - i - (n + 1) * (j - 1);
  });
}

NzsArray construct_tn2(std::int64_t n) {
  require_odd(n, "construct_tn2");
  return fill(n, n * n, Provenance::tn2, [n](std::int64_t i, std::int64_t j) {
    const std::int64_t eps = sign((i - j) % 2 == 0);
    if (j <= (n + 1) / 2) return eps * (3 * n * (j - 1) + 3 * (i - 1) + 1);
    return eps * (3 * n * j - 3 * i + 1);
  });
}

NzsArray construct_t2n2(std::int64_t n) {
  require_odd(n, "construct_t2n2");
  return fill(n, 2 * n * n, Provenance::t2n2, [n](std::int64_t i, std::int64_t j) {
    const bool same = (i - j) % 2 == 0;
    if (j <= (n + 1) / 2) {
      return same ? 2 * n * (j - 1) + 2 * i - 1 : 2 * n * (n - j + 1) - 2 * i + 1;
    }
    return same ? 2 * n * j - 2 * i + 1 : 2 * n * (n - j) + 2 * i - 1;
  });
}

BlockArray::BlockArray(std::int64_t n, std::int64_t t)
    : ctx_([&] {
        require_odd(n, "construct_t_div_n");
        if (t < 1 || n % t != 0) {
          throw UnsupportedParameters("construct_t_div_n requires t | n, got " + params(n, t));
        }
        return ModulusContext::tight(n, t);
      }()),
      rows_(static_cast<std::size_t>(n)),
      width_(static_cast<std::size_t>(t)),
      blocks_(static_cast<std::size_t>(n / t)),
      base_(rows_ * width_) {
  const std::int64_t s = ctx_.step();
  for (std::int64_t j = 1; j <= t; ++j) {
    for (std::int64_t i = 1; i <= n; ++i) {
      std::int64_t x = 0;
      if (j % 2 == 1) {
        x = i % 2 == 1 ? (j - 1) * s + i : j * s - i;
      } else {
        x = i % 2 == 1 ? -(j - 1) * s - i : -j * s + i;
      }
      base_[static_cast<std::size_t>(i - 1) * width_ + static_cast<std::size_t>(j - 1)] =
          ctx_.reduce(x);
    }
  }
}

Residue BlockArray::shifted(std::size_t alpha, std::size_t r, std::size_t c) const {
  const std::int64_t eps = sign((r + c) % 2 == 0);
  return ctx_.reduce(base(r, c).value +
                     eps * static_cast<std::int64_t>(alpha) * ctx_.order());
}

NzsArray BlockArray::assemble() const {
  NzsArray a(ctx_, rows_, rows_, Provenance::t_div_n);
  for (std::size_t alpha = 0; alpha < blocks_; ++alpha) {
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < width_; ++c) {
        Residue x = shifted(alpha, r, c);
        a.set(r, alpha * width_ + c, alpha % 2 == 0 ? x : ctx_.neg(x));
      }
    }
  }
  return a;
}

NzsArray construct_t_div_n(std::int64_t n, std::int64_t t) { return BlockArray(n, t).assemble(); }

NzsArray construct_n2_lookup(std::int64_t t) {
  std::int64_t cells[4];
  switch (t) {
    case 1:
    case 2: cells[0] = 1, cells[1] = 2, cells[2] = 3, cells[3] = 4; break;
    case 4: cells[0] = 1, cells[1] = 2, cells[2] = 4, cells[3] = 5; break;
    case 8: cells[0] = 1, cells[1] = 3, cells[2] = 5, cells[3] = 7; break;
    default:
      throw UnsupportedParameters("no 2x2 lookup array for t=" + std::to_string(t) +
                                  " (admissible: 1, 2, 4, 8)");
  }
  NzsArray a(ModulusContext::tight(2, t), 2, 2, Provenance::lookup_n2);
  for (std::size_t k = 0; k < 4; ++k) a.set_value(k / 2, k % 2, cells[k]);
  return a;
}

std::optional<Provenance> construction_for(std::int64_t n, std::int64_t t) noexcept {
  if (n < 1 || n > kMaxOrder || t < 1) return std::nullopt;
  if (t == 2) return Provenance::t2;
  if (n == 2 && (t == 1 || t == 4 || t == 8)) return Provenance::lookup_n2;
  if (n % 2 == 0) return std::nullopt;
  if (n % t == 0) return Provenance::t_div_n;
  if (t == 2 * n) return Provenance::t2n;
  if (t == n * n) return Provenance::tn2;
  if (t == 2 * n * n) return Provenance::t2n2;
  return std::nullopt;
}

NzsArray construct(std::int64_t n, std::int64_t t) {
  auto which = construction_for(n, t);
  if (!which) throw UnsupportedParameters("no construction for " + pair(n, t));
  switch (*which) {
    case Provenance::t2: return construct_t2(n);
    case Provenance::t2n: return construct_t2n(n);
    case Provenance::tn2: return construct_tn2(n);
    case Provenance::t2n2: return construct_t2n2(n);
    case Provenance::t_div_n: return construct_t_div_n(n, t);
    case Provenance::lookup_n2: return construct_n2_lookup(t);
    case Provenance::external: break;
  }
  throw UnsupportedParameters("no construction for " + pair(n, t));
}

Residue closed_form_sums(std::int64_t n, std::int64_t t, Axis axis, std::size_t index) {
  auto which = construction_for(n, t);
  if (!which || *which == Provenance::lookup_n2) {
    throw UnsupportedParameters("no closed-form line sums for " + params(n, t));
  }
  if (index >= static_cast<std::size_t>(n)) {
    throw UnsupportedParameters("line index " + std::to_string(index) + " out of range for n=" +
                                std::to_string(n));
  }
  const auto ctx = ModulusContext::tight(n, t);
  const std::int64_t k = static_cast<std::int64_t>(index) + 1;  // 1-based i or j
  const bool cols = axis == Axis::cols;
  std::int64_t sum = 0;

  switch (*which) {
    case Provenance::t2:
      if (n % 2 == 1) {
        sum = cols ? alternating(k + 1) * (k + (n - 1) / 2 * n)
                   : alternating(k + 1) * ((k - 1) * n + (n + 1) / 2);
      } else {
        sum = cols ? alternating(k) * (n * n / 2) : alternating(k) * (n / 2);
      }
      break;
    case Provenance::t2n:
      if (cols) {
        sum = k % 2 == 1 ? k * (n + 1) + (n * n * n - 2 * n - 1) / 2
                         : -k * (n + 1) + (n * n * n + 2 * n * n + 2 * n + 1) / 2;
      } else {
        sum = (n * n + n) / 2 + alternating(k) * ((n * n * n + 1) / 2 - k);
      }
      break;
    case Provenance::tn2:
      if (cols) {
        sum = alternating(k - 1) * (3 * n * k - (3 * n + 1) / 2);
      } else if (n % 4 == 1) {
        sum = alternating(k - 1) * (3 * k - 2 + 3 * n * (n - 1) / 2);
      } else {
        sum = alternating(k - 1) * (3 * (n + 1 - k) - 2 + 3 * n * (n - 1) / 2);
      }
      break;
    case Provenance::t2n2:
      if (cols) {
        sum = n * n * n + alternating(k - 1) * (2 * n * k - n * n - n);
      } else if (n % 4 == 1) {
        sum = n * n * n + alternating(k - 1) * (2 * k - n - 1);
      } else {
        sum = n * n * n + alternating(k - 1) * (n + 1 - 2 * k);
      }
      break;
    case Provenance::t_div_n: {
      const std::int64_t s = ctx.step();
      if (cols) {
        const std::int64_t alpha = (k - 1) / t;
        const std::int64_t j = (k - 1) % t + 1;
        sum = alternating(alpha + j + 1) *
              ((j - 1) * s + 1 + alpha * n + (n - 1) / 2 * ((2 * j - 1) * s + 1));
      } else {
        const std::int64_t drift = n * (n / t - 1) / 2;
        const std::int64_t middle = (t - 1) / 2 * s;
        sum = k % 2 == 1 ? k + drift + middle : s - k - drift + middle;
      }
      break;
    }
    case Provenance::lookup_n2:
    case Provenance::external:
      break;
  }
  return ctx.reduce(sum);
}

}  // namespace heffter
