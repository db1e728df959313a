#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "cumsub/core.hpp"
#include "cumsub/solver.hpp"

namespace cumsub {

struct ConventionViolation {
  Heap heap;
  Convention convention;
  friend bool operator==(const ConventionViolation&, const ConventionViolation&) = default;
};

/// o1 + o2 = h - r with 0 <= r < min S, for every solved convention.
inline std::vector<ConventionViolation> check_conservation(const SolveTable& t) {
  std::vector<ConventionViolation> out;
  for (Convention x : kAllConventions) {
    if (!t.has(x)) continue;
    for (Heap h = 0; h <= t.hmax(); ++h) {
      const auto& o = t.outcome(x, h);
      const Utility taken = o.o1 + o.o2;
      if (taken > h || h - taken >= t.set().min_action()) out.push_back({h, x});
    }
  }
  return out;
}

/// Heaps where the second mover ends up ahead under x.
inline std::vector<Heap> check_first_player_advantage(const SolveTable& t, Convention x) {
  std::vector<Heap> out;
  for (Heap h = 0; h <= t.hmax(); ++h) {
    const auto& o = t.outcome(x, h);
    if (o.o2 > o.o1) out.push_back(h);
  }
  return out;
}

inline std::vector<Heap> check_first_player_advantage(const SubtractionSet& s, Convention x, Heap hmax) {
  const Convention wanted[] = {x};
  return check_first_player_advantage(solve(s, hmax, wanted), x);
}

/// The eight unilateral-deviation relations: four comparing FvF with the
/// mixed conventions, four comparing AvA with them. The AvA equalities do
/// not hold for every two-action set; {4,7} at h=34 breaks o2_AvA = o2_AvF.
enum class Relation : std::uint8_t {
  fvf_o1_ge_fva,
  fvf_o2_eq_fva,
  fvf_o1_eq_avf,
  fvf_o2_ge_avf,
  ava_o1_eq_fva,
  ava_o2_le_fva,
  ava_o1_le_avf,
  ava_o2_eq_avf,
};

inline constexpr std::array<Relation, 8> kAllRelations{
    Relation::fvf_o1_ge_fva, Relation::fvf_o2_eq_fva, Relation::fvf_o1_eq_avf, Relation::fvf_o2_ge_avf,
    Relation::ava_o1_eq_fva, Relation::ava_o2_le_fva, Relation::ava_o1_le_avf, Relation::ava_o2_eq_avf};

inline std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::fvf_o1_ge_fva: return "o1_FvF >= o1_FvA";
    case Relation::fvf_o2_eq_fva: return "o2_FvF = o2_FvA";
    case Relation::fvf_o1_eq_avf: return "o1_FvF = o1_AvF";
    case Relation::fvf_o2_ge_avf: return "o2_FvF >= o2_AvF";
    case Relation::ava_o1_eq_fva: return "o1_AvA = o1_FvA";
    case Relation::ava_o2_le_fva: return "o2_AvA <= o2_FvA";
    case Relation::ava_o1_le_avf: return "o1_AvA <= o1_AvF";
    case Relation::ava_o2_eq_avf: return "o2_AvA = o2_AvF";
  }
  return "?";
}

inline bool holds(Relation r, const SolveTable& t, Heap h) {
  const auto& fvf = t.outcome(Convention::FvF, h);
  const auto& fva = t.outcome(Convention::FvA, h);
  const auto& avf = t.outcome(Convention::AvF, h);
  const auto& ava = t.outcome(Convention::AvA, h);
  switch (r) {
    case Relation::fvf_o1_ge_fva: return fvf.o1 >= fva.o1;
    case Relation::fvf_o2_eq_fva: return fvf.o2 == fva.o2;
    case Relation::fvf_o1_eq_avf: return fvf.o1 == avf.o1;
    case Relation::fvf_o2_ge_avf: return fvf.o2 >= avf.o2;
    case Relation::ava_o1_eq_fva: return ava.o1 == fva.o1;
    case Relation::ava_o2_le_fva: return ava.o2 <= fva.o2;
    case Relation::ava_o1_le_avf: return ava.o1 <= avf.o1;
    case Relation::ava_o2_eq_avf: return ava.o2 == avf.o2;
  }
  return false;
}

struct MonotonicityViolation {
  Heap heap;
  Relation relation;
  friend bool operator==(const MonotonicityViolation&, const MonotonicityViolation&) = default;
};

/// Needs all four conventions in `t`.
inline std::vector<MonotonicityViolation> check_tiebreak_monotonicity(const SolveTable& t) {
  std::vector<MonotonicityViolation> out;
  for (Heap h = 0; h <= t.hmax(); ++h)
    for (Relation r : kAllRelations)
      if (!holds(r, t, h)) out.push_back({h, r});
  return out;
}

inline std::vector<MonotonicityViolation> check_tiebreak_monotonicity(const SubtractionSet& s, Heap hmax) {
  return check_tiebreak_monotonicity(solve(s, hmax));
}

struct PlayerViolation {
  Heap heap;
  int player;  // 1 or 2
  friend bool operator==(const PlayerViolation&, const PlayerViolation&) = default;
};

/// Heaps where a player does strictly better under AvA than under FvF.
inline std::vector<PlayerViolation> check_main_theorem(const SolveTable& t) {
  std::vector<PlayerViolation> out;
  for (Heap h = 0; h <= t.hmax(); ++h) {
    const auto& f = t.outcome(Convention::FvF, h);
    const auto& a = t.outcome(Convention::AvA, h);
    if (a.o1 > f.o1) out.push_back({h, 1});
    if (a.o2 > f.o2) out.push_back({h, 2});
  }
  return out;
}

inline std::vector<PlayerViolation> check_main_theorem(const SubtractionSet& s, Heap hmax) {
  const Convention wanted[] = {Convention::FvF, Convention::AvA};
  return check_main_theorem(solve(s, hmax, wanted));
}

struct PairViolation {
  Heap heap;
  Convention a;
  Convention b;
  friend bool operator==(const PairViolation&, const PairViolation&) = default;
};

/// In the dominant regime all four conventions should agree everywhere.
/// Reports each disagreeing pair (a before b in declaration order).
inline std::vector<PairViolation> check_dominant_equality(const SubtractionSet& s, Heap hmax) {
  if (s.size() != 2 || !classify_regime(s).is_dominant())
    throw PreconditionError("dominant-equality needs a two-action set with 2*s2 <= s1, got {" + s.to_string() + "}");
  const auto t = solve(s, hmax);
  std::vector<PairViolation> out;
  for (Heap h = 0; h <= hmax; ++h)
    for (std::size_t i = 0; i < kAllConventions.size(); ++i)
      for (std::size_t j = i + 1; j < kAllConventions.size(); ++j)
        if (t.outcome(kAllConventions[i], h) != t.outcome(kAllConventions[j], h))
          out.push_back({h, kAllConventions[i], kAllConventions[j]});
  return out;
}

struct OracleMismatch {
  Heap heap;
  Convention convention;
  OutcomePair solved;
  OutcomePair oracle;
};

/// Compares solve() with naive_pspe() for every convention and heap.
inline std::vector<OracleMismatch> check_oracle(const SubtractionSet& s, Heap hmax, OracleOptions opts = {}) {
  const auto t = solve(s, hmax);
  std::vector<OracleMismatch> out;
  for (Convention x : kAllConventions)
    for (Heap h = 0; h <= hmax; ++h) {
      const auto ref = naive_pspe(s, x, h, opts);
      if (ref != t.outcome(x, h)) out.push_back({h, x, t.outcome(x, h), ref});
    }
  return out;
}

/// Every refined move must lead to the same outcome pair.
inline std::vector<ConventionViolation> check_move_equivalence(const SolveTable& t) {
  std::vector<ConventionViolation> out;
  for (Convention x : kAllConventions) {
    if (!t.has(x)) continue;
    const Convention y = dual(x);
    for (Heap h = 0; h <= t.hmax(); ++h) {
      const auto& p = t.at(x, h);
      for (Action a : p.pspe_moves) {
        const auto& next = t.outcome(y, h - a);
        if (OutcomePair{a + next.o2, next.o1} != p.outcome) {
          out.push_back({h, x});
          break;
        }
      }
    }
  }
  return out;
}

}  // namespace cumsub
