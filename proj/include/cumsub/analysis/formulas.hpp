#pragma once

#include <cstdint>
#include <optional>

#include "cumsub/analysis/discrepancy.hpp"
#include "cumsub/core.hpp"

namespace cumsub {

/// s1/s2 = (k+1)/k for some natural k, i.e. s1 - s2 divides s2.
inline bool is_consecutive_ratio(const SubtractionSet& s) {
  if (s.size() != 2) throw PreconditionError("ratio test needs a two-action set");
  return s.s2() % (s.s1() - s.s2()) == 0;
}

struct FormulaPrediction {
  Heap heap;
  std::uint64_t i;
  std::uint64_t k;  // 0 for the additive formula, which has no k
  friend bool operator==(const FormulaPrediction&, const FormulaPrediction&) = default;
};

inline constexpr std::uint64_t kFormulaSearchBound = 64;

/// Predicted first FvF/AvA heap x = (i+2)s2 + i*k*s1 for a non-dominant
/// two-action set, where (i+1)/i > s1/s2 > (i+2)/(k+i).
///
/// The pair (i, k) is searched with k in the outer loop, so the smallest
/// admissible k wins and i follows from it.
inline std::optional<FormulaPrediction> predicted_first_discrepancy_2action(const SubtractionSet& s) {
  if (s.size() != 2) throw PreconditionError("formula needs a two-action set");
  if (classify_regime(s).is_dominant()) throw PreconditionError("formula needs the non-dominant regime");
  if (is_consecutive_ratio(s)) throw PreconditionError("formula excludes ratios (k+1)/k");
  const std::uint64_t big = s.s1(), small = s.s2();
  for (std::uint64_t k = 1; k <= kFormulaSearchBound; ++k)
    for (std::uint64_t i = 1; i <= kFormulaSearchBound; ++i)
      if ((i + 1) * small > i * big && big * (k + i) > (i + 2) * small)
        return FormulaPrediction{(i + 2) * small + i * k * big, i, k};
  return std::nullopt;
}

/// Predicted first FvF/AvA heap for an additive triple s1 = s2 + s3 with
/// s2/s3 not an integer: x = (i+2)s2 + i*s1 where i < s2/s3 < i+1.
inline FormulaPrediction predicted_first_discrepancy_additive(const SubtractionSet& s) {
  if (s.size() != 3) throw PreconditionError("additive formula needs a three-action set");
  if (s.s1() != s.s2() + s.s3()) throw PreconditionError("additive formula needs s1 = s2 + s3");
  if (s.s2() % s.s3() == 0) throw PreconditionError("additive formula needs s2/s3 not an integer");
  const std::uint64_t i = s.s2() / s.s3();
  return {(i + 2) * s.s2() + i * s.s1(), i, 0};
}

enum class FormulaStatus { agree, mismatch, beyond_hmax };

inline std::string_view to_string(FormulaStatus st) {
  switch (st) {
    case FormulaStatus::agree: return "agree";
    case FormulaStatus::mismatch: return "mismatch";
    case FormulaStatus::beyond_hmax: return "beyond_hmax";
  }
  return "?";
}

struct FormulaCheck {
  std::optional<FormulaPrediction> predicted;
  std::optional<Heap> observed;  // first diff-of-diff FvF/AvA heap within hmax
  FormulaStatus status = FormulaStatus::mismatch;
};

namespace detail {

inline FormulaCheck compare_prediction(std::optional<FormulaPrediction> p, std::optional<Heap> seen, Heap hmax) {
  FormulaCheck c{p, seen, FormulaStatus::mismatch};
  if (p && seen && p->heap == *seen)
    c.status = FormulaStatus::agree;
  else if (p && !seen && p->heap > hmax)
    c.status = FormulaStatus::beyond_hmax;
  return c;
}

}  // namespace detail

inline FormulaCheck check_first_formula(const SubtractionSet& s, Heap hmax) {
  const auto seen = first_discrepancy(s, Convention::FvF, Convention::AvA, hmax, Criterion::diff_of_diff);
  return detail::compare_prediction(predicted_first_discrepancy_2action(s), seen, hmax);
}

inline FormulaCheck check_additive_formula(const SubtractionSet& s, Heap hmax) {
  const auto seen = first_discrepancy(s, Convention::FvF, Convention::AvA, hmax, Criterion::diff_of_diff);
  return detail::compare_prediction(predicted_first_discrepancy_additive(s), seen, hmax);
}

/// First FvF/AvA discrepancy of a (k+1)/k set; expected to be absent.
inline std::optional<Heap> check_ratio_conjecture(const SubtractionSet& s, Heap hmax) {
  if (!is_consecutive_ratio(s)) throw PreconditionError("ratio check needs s1/s2 = (k+1)/k");
  return first_discrepancy(s, Convention::FvF, Convention::AvA, hmax, Criterion::diff_of_diff);
}

/// Triples for which zero-sum and AvA are expected to coincide:
/// s2 <= 2*s3 or s1 >= s2 + s3.
inline bool zs_coincidence_expected(const SubtractionSet& s) {
  if (s.size() != 3) throw PreconditionError("needs a three-action set");
  return s.s2() <= 2 * s.s3() || s.s1() >= s.s2() + s.s3();
}

}  // namespace cumsub
