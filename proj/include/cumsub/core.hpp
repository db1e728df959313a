#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cumsub {

using Heap = std::uint64_t;
using Action = std::uint64_t;
using Utility = std::uint64_t;

/// Thrown when an operation is called outside its documented domain
/// (wrong set size, wrong regime, and so on).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sorted set of allowed removals.
///
/// Stored ascending. The accessors s1(), s2(), s3() use the descending
/// naming common in the literature: s1 is the largest action, s2 the
/// second largest, s3 the third largest.
class SubtractionSet {
 public:
  SubtractionSet() = default;

  /// Accepts actions in any order; rejects empty input, zero and duplicates.
  explicit SubtractionSet(std::vector<Action> actions) : actions_(std::move(actions)) {
    if (actions_.empty()) throw std::invalid_argument("subtraction set must not be empty");
    std::sort(actions_.begin(), actions_.end());
    if (actions_.front() == 0) throw std::invalid_argument("actions must be positive");
    if (std::adjacent_find(actions_.begin(), actions_.end()) != actions_.end())
      throw std::invalid_argument("actions must be distinct");
  }

  SubtractionSet(std::initializer_list<Action> actions)
      : SubtractionSet(std::vector<Action>(actions)) {}

  /// Parses "a,b,c". Whitespace around entries is tolerated.
  static SubtractionSet parse(std::string_view text) {
    std::vector<Action> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto comma = text.find(',', pos);
      if (comma == std::string_view::npos) comma = text.size();
      auto token = text.substr(pos, comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      if (token.empty()) throw std::invalid_argument("empty entry in action list");
      Action value = 0;
      for (char c : token) {
        if (c < '0' || c > '9') throw std::invalid_argument("non-numeric action: " + std::string(token));
        if (value > (UINT64_MAX - 9) / 10) throw std::invalid_argument("action too large");
        value = value * 10 + static_cast<Action>(c - '0');
      }
      out.push_back(value);
      pos = comma + 1;
    }
    return SubtractionSet(std::move(out));
  }

  std::span<const Action> actions() const { return actions_; }
  std::size_t size() const { return actions_.size(); }
  Action min_action() const { return actions_.front(); }
  Action max_action() const { return actions_.back(); }

  Action s1() const { return from_top(0); }
  Action s2() const { return from_top(1); }
  Action s3() const { return from_top(2); }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < actions_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(actions_[i]);
    }
    return out;
  }

  friend bool operator==(const SubtractionSet&, const SubtractionSet&) = default;
  friend auto operator<=>(const SubtractionSet& a, const SubtractionSet& b) {
    return a.actions_ <=> b.actions_;
  }

 private:
  Action from_top(std::size_t i) const {
    if (i >= actions_.size()) throw PreconditionError("set has fewer than " + std::to_string(i + 1) + " actions");
    return actions_[actions_.size() - 1 - i];
  }

  std::vector<Action> actions_;
};

/// S(h): actions not exceeding h, ascending.
inline std::vector<Action> feasible(const SubtractionSet& s, Heap h) {
  auto acts = s.actions();
  auto end = std::upper_bound(acts.begin(), acts.end(), h);
  return {acts.begin(), end};
}

enum class RegimeKind { dominant, balanced, non_dominant };

struct Regime {
  RegimeKind kind;
  Action delta;  // s1 - s2

  /// Balanced is the boundary case of dominance.
  bool is_dominant() const { return kind != RegimeKind::non_dominant; }
  friend bool operator==(const Regime&, const Regime&) = default;
};

inline Regime classify_regime(const SubtractionSet& s) {
  if (s.size() != 2) throw PreconditionError("regime is defined for two-action sets only");
  const Action big = s.s1(), small = s.s2();
  RegimeKind kind = RegimeKind::non_dominant;
  if (2 * small == big)
    kind = RegimeKind::balanced;
  else if (2 * small < big)
    kind = RegimeKind::dominant;
  return {kind, big - small};
}

inline std::string_view to_string(RegimeKind k) {
  switch (k) {
    case RegimeKind::dominant: return "dominant";
    case RegimeKind::balanced: return "balanced";
    case RegimeKind::non_dominant: return "non_dominant";
  }
  return "?";
}

/// Tie-breaking convention pair. First letter is the player to move,
/// second letter the opponent; F = friendly, A = antagonistic.
enum class Convention : std::uint8_t { FvF = 0, FvA = 1, AvF = 2, AvA = 3 };

inline constexpr std::array<Convention, 4> kAllConventions{Convention::FvF, Convention::FvA,
                                                           Convention::AvF, Convention::AvA};

/// Convention seen from the next position, where the roles are swapped.
constexpr Convention dual(Convention x) {
  switch (x) {
    case Convention::FvA: return Convention::AvF;
    case Convention::AvF: return Convention::FvA;
    default: return x;
  }
}

/// True when the mover breaks ties by minimizing the opponent.
constexpr bool mover_is_antagonistic(Convention x) {
  return x == Convention::AvF || x == Convention::AvA;
}

constexpr std::size_t index(Convention x) { return static_cast<std::size_t>(x); }

inline std::string_view to_string(Convention x) {
  switch (x) {
    case Convention::FvF: return "FvF";
    case Convention::FvA: return "FvA";
    case Convention::AvF: return "AvF";
    case Convention::AvA: return "AvA";
  }
  return "?";
}

/// Case-insensitive: "fvf", "FvF", "FVF" all work.
inline Convention parse_convention(std::string_view text) {
  std::string lower(text);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "fvf") return Convention::FvF;
  if (lower == "fva") return Convention::FvA;
  if (lower == "avf") return Convention::AvF;
  if (lower == "ava") return Convention::AvA;
  throw std::invalid_argument("unknown convention: " + std::string(text));
}

/// Cumulative pockets of the player to move (o1) and the other player (o2).
struct OutcomePair {
  Utility o1 = 0;
  Utility o2 = 0;

  friend bool operator==(const OutcomePair&, const OutcomePair&) = default;
};

inline std::string to_string(const OutcomePair& p) {
  return "(" + std::to_string(p.o1) + "," + std::to_string(p.o2) + ")";
}

struct PositionSolution {
  Heap heap = 0;
  OutcomePair outcome;
  std::vector<Action> best_own;    // S*(h): feasible actions maximizing the mover's pocket
  std::vector<Action> pspe_moves;  // best_own after the opponent-utility tie-break

  bool terminal() const { return best_own.empty(); }
};

/// Componentwise and diff-of-diff discrepancy of `other` relative to `base`.
struct DiscrepancyRecord {
  Heap heap = 0;
  std::int64_t d1 = 0;
  std::int64_t d2 = 0;
  std::int64_t diff_of_diff = 0;

  friend bool operator==(const DiscrepancyRecord&, const DiscrepancyRecord&) = default;
};

inline DiscrepancyRecord make_discrepancy(Heap h, const OutcomePair& base, const OutcomePair& other) {
  const auto d1 = static_cast<std::int64_t>(other.o1) - static_cast<std::int64_t>(base.o1);
  const auto d2 = static_cast<std::int64_t>(other.o2) - static_cast<std::int64_t>(base.o2);
  return {h, d1, d2, d1 - d2};
}

}  // namespace cumsub
