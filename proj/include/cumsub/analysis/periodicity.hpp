#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "cumsub/core.hpp"

namespace cumsub {

enum class PeriodicityMode { pure, additive };

/// f(h + period) = f(h) + additive_constant for preperiod <= h <= verified_up_to - period.
struct PeriodicityReport {
  Heap preperiod = 0;
  Heap period = 1;
  std::int64_t additive_constant = 0;
  Heap verified_up_to = 0;
  friend bool operator==(const PeriodicityReport&, const PeriodicityReport&) = default;
};

/// Direct recheck of a report against the whole sequence.
inline bool verify_periodicity(std::span<const std::int64_t> f, const PeriodicityReport& r) {
  if (r.period == 0 || r.verified_up_to >= f.size()) return false;
  for (Heap h = r.preperiod; h + r.period <= r.verified_up_to; ++h)
    if (f[h + r.period] != f[h] + r.additive_constant) return false;
  return true;
}

/// Smallest period p <= pmax (then smallest preperiod) such that the tail
/// from the preperiod on is (additively) periodic and spans at least
/// 2*pmax entries. Pure mode forces the additive constant to 0.
inline std::optional<PeriodicityReport> detect_periodicity(std::span<const std::int64_t> f, std::size_t pmax,
                                                           PeriodicityMode mode) {
  if (pmax == 0) throw PreconditionError("pmax must be positive");
  if (f.size() <= 2 * pmax) throw PreconditionError("sequence must be longer than 2*pmax");
  const std::size_t n = f.size();
  for (std::size_t p = 1; p <= pmax; ++p) {
    // Walk back from the end while the p-step difference stays constant.
    const std::int64_t c = mode == PeriodicityMode::pure ? 0 : f[n - 1] - f[n - 1 - p];
    std::size_t start = n - p;  // first index h whose difference f[h+p]-f[h] is checked
    while (start > 0 && f[start - 1 + p] - f[start - 1] == c) --start;
    if (start == n - p) continue;  // not even the last difference matched (pure mode)
    if (n - start < 2 * pmax) continue;
    PeriodicityReport r{start, p, c, n - 1};
    if (!verify_periodicity(f, r)) throw std::logic_error("periodicity report failed recheck");
    return r;
  }
  return std::nullopt;
}

}  // namespace cumsub
