#pragma once

// Exact (non-modular) cost of building an integer function on [1, n] from
// interval indicators, together with the superlevel-set decomposition that
// attains it.
//
// Functions are passed as spans of n values for positions 1..n and are
// implicitly extended by zero at positions 0 and n + 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "dialock/core.hpp"

namespace dialock {

using Value = std::int64_t;

/// Maximal interval [a, b] of positions, 1-based and inclusive.
struct Interval {
  std::size_t a = 1;
  std::size_t b = 1;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Maximal intervals of every superlevel set {f >= l}, l = 1..sup f.
struct LevelDecomposition {
  /// levels[l - 1] holds the intervals of {f >= l}, left to right.
  std::vector<std::vector<Interval>> levels;

  [[nodiscard]] std::vector<std::size_t> level_counts() const {
    std::vector<std::size_t> counts;
    counts.reserve(levels.size());
    for (const auto& lv : levels) counts.push_back(lv.size());
    return counts;
  }

  [[nodiscard]] std::size_t total_count() const {
    std::size_t total = 0;
    for (const auto& lv : levels) total += lv.size();
    return total;
  }
};

/// Forward differences f(i + 1) - f(i) for i = 0..n with f(0) = f(n+1) = 0.
[[nodiscard]] inline std::vector<Value> forward_difference(
    std::span<const Value> f) {
  std::vector<Value> delta(f.size() + 1);
  Value prev = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    delta[i] = f[i] - prev;
    prev = f[i];
  }
  delta[f.size()] = -prev;
  return delta;
}

/// Sum of the positive parts of the forward differences.
[[nodiscard]] inline Value upward_jump_total(std::span<const Value> f) {
  Value total = 0;
  Value prev = 0;
  for (const Value v : f) {
    if (v > prev) total += v - prev;
    prev = v;
  }
  if (prev < 0) total -= prev;
  return total;
}

/// Sum of the negative parts of the forward differences.
[[nodiscard]] inline Value downward_jump_total(std::span<const Value> f) {
  Value total = 0;
  Value prev = 0;
  for (const Value v : f) {
    if (v < prev) total += prev - v;
    prev = v;
  }
  if (prev > 0) total += prev;
  return total;
}

/// Minimal sum of |c_j| over exact representations f = sum c_j 1_[a_j, b_j].
/// Equals half the total absolute jump, and also the total upward jump.
[[nodiscard]] inline Value cost(std::span<const Value> f) {
  Value half_twice = 0;
  Value prev = 0;
  for (const Value v : f) {
    half_twice += v > prev ? v - prev : prev - v;
    prev = v;
  }
  half_twice += prev < 0 ? -prev : prev;
  return half_twice / 2;
}

[[nodiscard]] inline std::vector<Value> positive_part(std::span<const Value> f) {
  std::vector<Value> out(f.size());
  std::transform(f.begin(), f.end(), out.begin(),
                 [](Value v) { return v > 0 ? v : Value{0}; });
  return out;
}

[[nodiscard]] inline std::vector<Value> negative_part(std::span<const Value> f) {
  std::vector<Value> out(f.size());
  std::transform(f.begin(), f.end(), out.begin(),
                 [](Value v) { return v < 0 ? -v : Value{0}; });
  return out;
}

/// Level-by-level scan. Runs in O(n * sup f), so it is meant for small
/// functions and for cross-checking the sweep in minimal_representation.
[[nodiscard]] inline LevelDecomposition superlevel_decomposition(
    std::span<const Value> f) {
  Value top = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] < 0) {
      throw InputError("superlevel decomposition needs a nonnegative "
                       "function; position " +
                       std::to_string(i + 1) + " holds " +
                       std::to_string(f[i]));
    }
    top = std::max(top, f[i]);
  }
  const std::size_t n = f.size();
  auto value_at = [&](std::size_t i) -> Value {
    return (i == 0 || i > n) ? 0 : f[i - 1];
  };

  LevelDecomposition out;
  out.levels.resize(static_cast<std::size_t>(top));
  for (Value level = 1; level <= top; ++level) {
    auto& intervals = out.levels[static_cast<std::size_t>(level - 1)];
    std::size_t open = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (value_at(i - 1) < level && level <= value_at(i)) open = i;
      if (value_at(i + 1) < level && level <= value_at(i)) {
        intervals.push_back({open, i});
      }
    }
  }
  return out;
}

namespace detail {

/// Single left-to-right sweep over a nonnegative function. Levels opened at
/// the same position sit in one stack block; a drop closes levels from the
/// top of the stack. Every closed chunk is a distinct interval whose
/// multiplicity is the number of levels it spans.
inline void sweep_levels(std::span<const Value> h, std::int64_t sign,
                         std::vector<PlanEntry>& out) {
  struct Block {
    std::size_t start;
    Value count;
  };
  std::vector<Block> stack;
  const std::size_t n = h.size();
  Value prev = 0;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    const Value cur = i <= n ? h[i - 1] : 0;
    Value drop = prev - cur;
    while (drop > 0) {
      Block& blk = stack.back();
      const Value take = std::min(blk.count, drop);
      out.push_back({blk.start, i - 1, sign * take});
      blk.count -= take;
      drop -= take;
      if (blk.count == 0) stack.pop_back();
    }
    if (cur > prev) stack.push_back({i, cur - prev});
    prev = cur;
  }
}

}  // namespace detail

/// Optimal exact representation of f: the superlevel intervals of f_+ with
/// positive multiplicity and those of f_- with negative multiplicity, equal
/// intervals merged. Runs in O(n).
[[nodiscard]] inline RotationPlan minimal_representation(
    std::span<const Value> f) {
  std::vector<PlanEntry> entries;
  detail::sweep_levels(positive_part(f), +1, entries);
  detail::sweep_levels(negative_part(f), -1, entries);
  return RotationPlan(std::move(entries));
}

}  // namespace dialock
