#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cumsub/analysis/discrepancy.hpp"
#include "cumsub/analysis/parallel.hpp"
#include "cumsub/core.hpp"
#include "cumsub/solver.hpp"

namespace cumsub {

/// A subtraction set together with the first heap meeting a criterion.
struct ScanPoint {
  SubtractionSet set;
  std::optional<Heap> first_heap;
  Criterion criterion = Criterion::diff_of_diff;

  friend bool operator==(const ScanPoint&, const ScanPoint&) = default;
};

struct ScanOptions {
  Heap hmax = 300;
  unsigned jobs = 1;
};

/// Every set of `arity` actions drawn from 1..smax, in lexicographic order.
inline std::vector<SubtractionSet> all_sets(std::size_t arity, Action smax) {
  std::vector<SubtractionSet> out;
  if (arity == 0 || arity > smax) return out;
  std::vector<Action> cur(arity);
  for (std::size_t i = 0; i < arity; ++i) cur[i] = i + 1;
  while (true) {
    out.emplace_back(cur);
    std::size_t i = arity;
    while (i > 0 && cur[i - 1] == smax - (arity - i)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < arity; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

/// FvF against AvA (or zero-sum against AvA) for each set; keeps the sets
/// that show a discrepancy within opts.hmax, sorted by set.
inline std::vector<ScanPoint> scan_sets(std::span<const SubtractionSet> sets, Criterion c, ScanOptions opts = {}) {
  auto found = parallel_map(sets, opts.jobs, [&](const SubtractionSet& s) {
    const bool zs = c == Criterion::zs_vs_ava;
    const Convention both[] = {Convention::FvF, Convention::AvA};
    const Convention ava_only[] = {Convention::AvA};
    const auto t = zs ? solve(s, opts.hmax, ava_only) : solve(s, opts.hmax, both);
    return first_discrepancy(t, Convention::FvF, Convention::AvA, c);
  });
  std::vector<ScanPoint> out;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (found[i]) out.push_back({sets[i], found[i], c});
  std::sort(out.begin(), out.end(), [](const ScanPoint& a, const ScanPoint& b) { return a.set < b.set; });
  return out;
}

inline std::vector<ScanPoint> scan_two_action(Action smax, Criterion c, ScanOptions opts = {}) {
  if (smax < 2) throw PreconditionError("smax must be at least 2");
  const auto sets = all_sets(2, smax);
  return scan_sets(sets, c, opts);
}

inline std::vector<ScanPoint> scan_three_action(Action smax, Criterion c, ScanOptions opts = {}) {
  if (smax < 3) throw PreconditionError("smax must be at least 3");
  const auto sets = all_sets(3, smax);
  return scan_sets(sets, c, opts);
}

inline std::vector<ScanPoint> scan_ava_vs_zero_sum(std::size_t arity, Action smax, ScanOptions opts = {}) {
  if (arity != 2 && arity != 3) throw PreconditionError("arity must be 2 or 3");
  if (smax < arity) throw PreconditionError("smax must be at least the arity");
  const auto sets = all_sets(arity, smax);
  return scan_sets(sets, Criterion::zs_vs_ava, opts);
}

}  // namespace cumsub
