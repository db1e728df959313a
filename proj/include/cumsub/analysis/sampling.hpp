#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cumsub/analysis/scan.hpp"
#include "cumsub/core.hpp"

namespace cumsub {

/// Identifies the sampling procedure in exported metadata. Bump it if the
/// draw sequence for a given seed ever changes.
inline constexpr std::string_view kSamplerId = "mt19937_64/rejection/floyd-v1";

namespace detail {

// Uniform in [0, n). std::uniform_int_distribution is not specified
// bit-for-bit across standard libraries, so the reduction is done here.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  while (true) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

// C(n, k), saturating at the uint64 maximum.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

// Floyd's algorithm: a uniform size-k subset of {1..m}.
inline std::vector<Action> floyd_subset(std::mt19937_64& rng, std::uint64_t m, std::uint64_t k) {
  std::set<Action> chosen;
  for (std::uint64_t j = m - k + 1; j <= m; ++j) {
    const Action t = 1 + uniform_below(rng, j);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace detail

/// `count` distinct size-`size` subsets of {1..max_val}, uniformly without
/// replacement, returned sorted. Same arguments give the same output.
inline std::vector<SubtractionSet> sample_random_sets(std::size_t size, Action max_val, std::size_t count,
                                                      std::uint64_t seed) {
  if (size == 0 || size > max_val) throw PreconditionError("need 1 <= size <= max_val");
  const std::uint64_t total = detail::binomial(max_val, size);
  if (count > total)
    throw PreconditionError("cannot draw " + std::to_string(count) + " distinct sets out of " + std::to_string(total));

  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(size), static_cast<std::uint32_t>(max_val)};
  std::mt19937_64 rng(seq);

  std::vector<SubtractionSet> out;
  if (total <= 4 * static_cast<std::uint64_t>(count)) {
    // Dense request: partial Fisher-Yates over the full enumeration.
    auto pool = all_sets(size, max_val);
    for (std::size_t i = 0; i < count; ++i) {
      const auto j = i + detail::uniform_below(rng, pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    out.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    std::set<SubtractionSet> seen;
    while (seen.size() < count) seen.insert(SubtractionSet(detail::floyd_subset(rng, max_val, size)));
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// "sizes=3..10,count=200,max=25": `count` sets for each size in range.
struct SampleSpec {
  std::size_t min_size = 3;
  std::size_t max_size = 10;
  std::size_t count = 200;
  Action max_val = 25;
};

inline SampleSpec parse_sample_spec(std::string_view text) {
  SampleSpec spec;
  auto to_num = [](std::string_view v) {
    if (v.empty()) throw std::invalid_argument("empty number in sample spec");
    std::uint64_t x = 0;
    for (char c : v) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad number in sample spec: " + std::string(v));
      x = x * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return x;
  };
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto item = text.substr(pos, end - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw std::invalid_argument("sample spec entry needs key=value: " + std::string(item));
    const auto key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "sizes" || key == "size") {
      const auto dots = val.find("..");
      spec.min_size = to_num(val.substr(0, dots));
      spec.max_size = dots == std::string_view::npos ? spec.min_size : to_num(val.substr(dots + 2));
    } else if (key == "count") {
      spec.count = to_num(val);
    } else if (key == "max") {
      spec.max_val = to_num(val);
    } else {
      throw std::invalid_argument("unknown sample spec key: " + std::string(key));
    }
    pos = end + 1;
  }
  if (spec.min_size == 0 || spec.min_size > spec.max_size) throw std::invalid_argument("bad size range in sample spec");
  return spec;
}

inline std::vector<SubtractionSet> sample_sets(const SampleSpec& spec, std::uint64_t seed) {
  std::vector<SubtractionSet> out;
  for (std::size_t k = spec.min_size; k <= spec.max_size; ++k) {
    auto part = sample_random_sets(k, spec.max_val, spec.count, seed);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cumsub
