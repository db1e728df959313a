#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cumsub/core.hpp"

namespace cumsub {

class SolveTable;
SolveTable solve(const SubtractionSet& s, Heap hmax, std::span<const Convention> wanted);

/// Per-convention PSPE solutions for every heap 0..hmax.
///
/// Immutable once built. FvA and AvF are always present together because
/// each one's recursion runs through the other.
class SolveTable {
 public:
  const SubtractionSet& set() const { return set_; }
  Heap hmax() const { return hmax_; }

  bool has(Convention x) const { return !columns_[index(x)].empty(); }

  const PositionSolution& at(Convention x, Heap h) const {
    const auto& col = columns_[index(x)];
    if (col.empty()) throw std::out_of_range("convention " + std::string(to_string(x)) + " was not solved");
    if (h > hmax_) throw std::out_of_range("heap " + std::to_string(h) + " exceeds hmax " + std::to_string(hmax_));
    return col[h];
  }

  const OutcomePair& outcome(Convention x, Heap h) const { return at(x, h).outcome; }

  std::span<const PositionSolution> column(Convention x) const { return columns_[index(x)]; }

 private:
  friend SolveTable solve(const SubtractionSet& s, Heap hmax, std::span<const Convention> wanted);

  SubtractionSet set_;
  Heap hmax_ = 0;
  std::array<std::vector<PositionSolution>, 4> columns_;
};

namespace detail {

// One step of the backward induction: the mover at `h` under `x` looks up
// the dual convention's solutions at the smaller heaps h - a.
inline PositionSolution solve_position(const SubtractionSet& s, Heap h, Convention x,
                                       std::span<const PositionSolution> next) {
  PositionSolution p;
  p.heap = h;
  Utility best = 0;
  for (Action a : s.actions()) {
    if (a > h) break;
    const Utility own = a + next[h - a].outcome.o2;
    if (p.best_own.empty() || own > best) {
      best = own;
      p.best_own.assign(1, a);
    } else if (own == best) {
      p.best_own.push_back(a);
    }
  }
  if (p.best_own.empty()) return p;

  const bool antagonistic = mover_is_antagonistic(x);
  Utility target = next[h - p.best_own.front()].outcome.o1;
  for (Action a : p.best_own) {
    const Utility opp = next[h - a].outcome.o1;
    target = antagonistic ? std::min(target, opp) : std::max(target, opp);
  }
  for (Action a : p.best_own)
    if (next[h - a].outcome.o1 == target) p.pspe_moves.push_back(a);
  p.outcome = {best, target};
  return p;
}

}  // namespace detail

/// Solves the requested conventions for heaps 0..hmax.
///
/// Self-dual conventions get their own pass; FvA and AvF share one.
inline SolveTable solve(const SubtractionSet& s, Heap hmax, std::span<const Convention> wanted) {
  SolveTable t;
  t.set_ = s;
  t.hmax_ = hmax;
  std::array<bool, 4> done{};
  for (Convention x : wanted) {
    if (done[index(x)]) continue;
    const Convention y = dual(x);
    auto& cx = t.columns_[index(x)];
    auto& cy = t.columns_[index(y)];
    cx.reserve(hmax + 1);
    if (y != x) cy.reserve(hmax + 1);
    for (Heap h = 0; h <= hmax; ++h) {
      cx.push_back(detail::solve_position(s, h, x, cy));
      if (y != x) cy.push_back(detail::solve_position(s, h, y, cx));
    }
    done[index(x)] = done[index(y)] = true;
  }
  return t;
}

inline SolveTable solve(const SubtractionSet& s, Heap hmax) { return solve(s, hmax, kAllConventions); }

/// Zero-sum scoring values o_zs(x) for x = 0..hmax, from the mover's side.
inline std::vector<std::int64_t> zero_sum_solve(const SubtractionSet& s, Heap hmax) {
  std::vector<std::int64_t> z(hmax + 1, 0);
  for (Heap x = s.min_action(); x <= hmax; ++x) {
    bool any = false;
    std::int64_t best = 0;
    for (Action a : s.actions()) {
      if (a > x) break;
      const std::int64_t v = static_cast<std::int64_t>(a) - z[x - a];
      if (!any || v > best) best = v;
      any = true;
    }
    z[x] = best;
  }
  return z;
}

struct Move {
  int mover;  // 1 = player to move at the root, 2 = the other player
  Action action;

  friend bool operator==(const Move&, const Move&) = default;
};

using PlayLine = std::vector<Move>;

/// Pockets collected by each mover along a line.
inline OutcomePair line_totals(const PlayLine& line) {
  OutcomePair p;
  for (const auto& m : line) (m.mover == 1 ? p.o1 : p.o2) += m.action;
  return p;
}

/// "3-3-5-3"
inline std::string format_line(const PlayLine& line) {
  std::string out;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(line[i].action);
  }
  return out;
}

/// Principal PSPE line from h, taking the smallest refined move each turn.
inline PlayLine play_line(const SolveTable& t, Convention x, Heap h) {
  PlayLine line;
  Convention c = x;
  int mover = 1;
  while (true) {
    const auto& p = t.at(c, h);
    if (p.pspe_moves.empty()) break;
    const Action a = p.pspe_moves.front();
    line.push_back({mover, a});
    h -= a;
    c = dual(c);
    mover = 3 - mover;
  }
  return line;
}

/// Optimal zero-sum line from h; ties go to the smallest action.
inline PlayLine zs_play_line(const SubtractionSet& s, Heap h) {
  const auto z = zero_sum_solve(s, h);
  PlayLine line;
  int mover = 1;
  while (h >= s.min_action()) {
    std::optional<Action> pick;
    std::int64_t best = 0;
    for (Action a : s.actions()) {
      if (a > h) break;
      const std::int64_t v = static_cast<std::int64_t>(a) - z[h - a];
      if (!pick || v > best) {
        best = v;
        pick = a;
      }
    }
    line.push_back({mover, *pick});
    h -= *pick;
    mover = 3 - mover;
  }
  return line;
}

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  Heap max_heap = 64;
  bool memoize = true;
  std::uint64_t node_budget = 50'000'000;  // evaluations allowed when memoize is off
};

namespace detail {

// Top-down transcription of the outcome recursion: o1 and o2 are separate
// functions and the indifference set is rebuilt explicitly on every call.
class NaiveOracle {
 public:
  NaiveOracle(const SubtractionSet& s, OracleOptions opts) : s_(s), opts_(opts) {}

  Utility first(Convention x, Heap h) {
    if (h < s_.min_action()) return 0;
    const auto key = std::make_pair(x, h);
    if (opts_.memoize) {
      if (auto it = memo1_.find(key); it != memo1_.end()) return it->second;
    }
    tick();
    Utility best = 0;
    for (Action a : s_.actions())
      if (a <= h) best = std::max(best, second(dual(x), h - a) + a);
    if (opts_.memoize) memo1_.emplace(key, best);
    return best;
  }

  Utility second(Convention x, Heap h) {
    if (h < s_.min_action()) return 0;
    const auto key = std::make_pair(x, h);
    if (opts_.memoize) {
      if (auto it = memo2_.find(key); it != memo2_.end()) return it->second;
    }
    tick();
    const Utility mine = first(x, h);
    std::vector<Action> indifferent;
    for (Action a : s_.actions())
      if (a <= h && second(dual(x), h - a) + a == mine) indifferent.push_back(a);
    bool have = false;
    Utility chosen = 0;
    for (Action a : indifferent) {
      const Utility v = first(dual(x), h - a);
      if (!have || (mover_is_antagonistic(x) ? v < chosen : v > chosen)) chosen = v;
      have = true;
    }
    if (opts_.memoize) memo2_.emplace(key, chosen);
    return chosen;
  }

 private:
  void tick() {
    if (!opts_.memoize && ++nodes_ > opts_.node_budget)
      throw BudgetExceeded("naive recursion exceeded " + std::to_string(opts_.node_budget) + " evaluations");
  }

  const SubtractionSet& s_;
  OracleOptions opts_;
  std::uint64_t nodes_ = 0;
  std::map<std::pair<Convention, Heap>, Utility> memo1_, memo2_;
};

}  // namespace detail

/// Reference outcome computed by direct recursion, independent of solve().
inline OutcomePair naive_pspe(const SubtractionSet& s, Convention x, Heap h, OracleOptions opts = {}) {
  if (h > opts.max_heap)
    throw BudgetExceeded("heap " + std::to_string(h) + " exceeds oracle limit " + std::to_string(opts.max_heap));
  detail::NaiveOracle oracle(s, opts);
  return {oracle.first(x, h), oracle.second(x, h)};
}

}  // namespace cumsub
