#pragma once

// Brute-force solvers used to certify the closed-form solver on small
// instances: breadth-first search over the full state space of N^n
// combinations, and exhaustive enumeration of bounded jump shifts.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dialock/core.hpp"
#include "dialock/solver.hpp"

namespace dialock {

/// Raised when an oracle is asked for a search larger than its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  std::uint64_t max_states = 5'000'000;
  std::size_t max_n = 64;
  Digit max_modulus = 1'000'000;
};

namespace detail {

inline void check_guard_rails(std::size_t n, Digit modulus,
                              const SearchBudget& budget) {
  if (n > budget.max_n || modulus > budget.max_modulus) {
    throw BudgetExceeded("instance with n = " + std::to_string(n) +
                         ", N = " + std::to_string(modulus) +
                         " exceeds the oracle guard rails");
  }
}

/// Generic BFS from the zero combination. Stops early once `target` is
/// labelled unless target is max().
inline std::vector<std::int32_t> bfs_from_zero(std::size_t n, Digit modulus,
                                               std::uint64_t target,
                                               const SearchBudget& budget) {
  check_guard_rails(n, modulus, budget);
  const std::uint64_t states =
      capped_power(static_cast<std::uint64_t>(modulus), n, budget.max_states);
  if (states > budget.max_states) {
    throw BudgetExceeded("state space N^n = " + std::to_string(modulus) + "^" +
                         std::to_string(n) + " exceeds the budget of " +
                         std::to_string(budget.max_states) + " states");
  }
  std::vector<std::int32_t> dist(states, -1);
  std::vector<std::uint64_t> frontier{0};
  dist[0] = 0;
  std::vector<Value> digits(n);
  std::vector<Value> next(n);
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    if (target != std::numeric_limits<std::uint64_t>::max() &&
        dist[target] >= 0) {
      break;
    }
    std::vector<std::uint64_t> upcoming;
    ++depth;
    for (const std::uint64_t state : frontier) {
      decode(state, modulus, digits);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          for (const Value step : {Value{1}, Value{-1}}) {
            next = digits;
            for (std::size_t i = a; i <= b; ++i) {
              next[i] = wrap(next[i] + step, modulus);
            }
            const std::uint64_t idx = encode(next, modulus);
            if (dist[idx] < 0) {
              dist[idx] = depth;
              upcoming.push_back(idx);
            }
          }
        }
      }
    }
    frontier = std::move(upcoming);
  }
  return dist;
}

}  // namespace detail

/// Shortest distance from the zero combination to every combination, indexed
/// by the mixed-radix code (digit i has weight N^i).
[[nodiscard]] inline std::vector<std::int32_t> bfs_distance_table(
    std::size_t n, Digit modulus, const SearchBudget& budget = {}) {
  return detail::bfs_from_zero(n, modulus,
                               std::numeric_limits<std::uint64_t>::max(),
                               budget);
}

/// Mixed-radix code of a difference profile, matching bfs_distance_table.
[[nodiscard]] inline std::uint64_t state_index(const DiffProfile& profile) {
  return detail::encode(profile.values, profile.modulus);
}

/// Fewest single rotations turning the difference into zeros. The rotation
/// graph is symmetric, so the search runs outward from zero.
[[nodiscard]] inline Value bfs_min_rotations(const DiffProfile& profile,
                                             const SearchBudget& budget = {}) {
  const std::uint64_t target = state_index(profile);
  const auto dist =
      detail::bfs_from_zero(profile.size(), profile.modulus, target, budget);
  return dist[target];
}

/// Minimum of (1/2) sum |delta(i) + N k'(i)| over all shift vectors k' on
/// positions 0..n with entries in [-range_bound, range_bound] summing to zero.
[[nodiscard]] inline Value exhaustive_p3(const DiffProfile& profile,
                                         Value range_bound,
                                         const SearchBudget& budget = {}) {
  if (range_bound < 1) {
    throw InputError("shift range bound must be at least 1");
  }
  const std::size_t len = profile.delta.size();
  detail::check_guard_rails(profile.size(), profile.modulus, budget);
  const std::uint64_t vectors = detail::capped_power(
      static_cast<std::uint64_t>(2 * range_bound + 1), len, budget.max_states);
  if (vectors > budget.max_states) {
    throw BudgetExceeded("(2r+1)^(n+1) shift vectors exceed the budget of " +
                         std::to_string(budget.max_states));
  }

  const Digit modulus = profile.modulus;
  const auto& delta = profile.delta;
  Value best = std::numeric_limits<Value>::max();

  // Depth-first over positions; `twice` is the running sum of |delta + N k'|.
  auto search = [&](auto&& self, std::size_t pos, Value shift_sum,
                    Value twice) -> void {
    if (twice >= best) return;
    const Value remaining = static_cast<Value>(len - pos);
    if (shift_sum > range_bound * remaining ||
        -shift_sum > range_bound * remaining) {
      return;
    }
    if (pos == len) {
      best = twice;
      return;
    }
    for (Value s = -range_bound; s <= range_bound; ++s) {
      const Value term = delta[pos] + modulus * s;
      self(self, pos + 1, shift_sum + s, twice + (term < 0 ? -term : term));
    }
  };
  search(search, 0, 0, 0);
  return best / 2;
}

}  // namespace dialock
