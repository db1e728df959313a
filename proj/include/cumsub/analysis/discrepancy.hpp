#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cumsub/core.hpp"
#include "cumsub/solver.hpp"

namespace cumsub {

/// What counts as a discrepancy between two conventions.
///
/// diff_of_diff compares o1 - o2, componentwise compares the pairs, and
/// zs_vs_ava compares the zero-sum value with o1 - o2 of the other convention.
enum class Criterion { diff_of_diff, componentwise, zs_vs_ava };

inline std::string_view to_string(Criterion c) {
  switch (c) {
    case Criterion::diff_of_diff: return "diff-of-diff";
    case Criterion::componentwise: return "componentwise";
    case Criterion::zs_vs_ava: return "zs-vs-ava";
  }
  return "?";
}

inline Criterion parse_criterion(std::string_view text) {
  if (text == "diff-of-diff" || text == "diff_of_diff") return Criterion::diff_of_diff;
  if (text == "componentwise") return Criterion::componentwise;
  if (text == "zs-vs-ava" || text == "zs_vs_ava") return Criterion::zs_vs_ava;
  throw std::invalid_argument("unknown criterion: " + std::string(text));
}

inline std::vector<DiscrepancyRecord> discrepancy_table(const SolveTable& t, Convention base, Convention other) {
  std::vector<DiscrepancyRecord> out;
  out.reserve(t.hmax() + 1);
  for (Heap h = 0; h <= t.hmax(); ++h) out.push_back(make_discrepancy(h, t.outcome(base, h), t.outcome(other, h)));
  return out;
}

inline std::vector<DiscrepancyRecord> discrepancy_table(const SubtractionSet& s, Convention base, Convention other,
                                                        Heap hmax) {
  const Convention wanted[] = {base, other};
  return discrepancy_table(solve(s, hmax, wanted), base, other);
}

inline bool meets(const DiscrepancyRecord& r, Criterion c) {
  if (c == Criterion::componentwise) return r.d1 != 0 || r.d2 != 0;
  return r.diff_of_diff != 0;
}

/// Smallest heap meeting the criterion. For zs_vs_ava, `base` is ignored
/// and `other` is compared against the zero-sum value.
inline std::optional<Heap> first_discrepancy(const SolveTable& t, Convention base, Convention other, Criterion c) {
  if (c == Criterion::zs_vs_ava) {
    const auto z = zero_sum_solve(t.set(), t.hmax());
    for (Heap h = 0; h <= t.hmax(); ++h) {
      const auto& o = t.outcome(other, h);
      if (z[h] != static_cast<std::int64_t>(o.o1) - static_cast<std::int64_t>(o.o2)) return h;
    }
    return std::nullopt;
  }
  for (Heap h = 0; h <= t.hmax(); ++h)
    if (meets(make_discrepancy(h, t.outcome(base, h), t.outcome(other, h)), c)) return h;
  return std::nullopt;
}

inline std::optional<Heap> first_discrepancy(const SubtractionSet& s, Convention base, Convention other, Heap hmax,
                                             Criterion c) {
  const Convention wanted[] = {base, other};
  return first_discrepancy(solve(s, hmax, wanted), base, other, c);
}

}  // namespace cumsub
