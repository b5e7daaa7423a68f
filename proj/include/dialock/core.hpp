#pragma once

// Combinations, rotations and rotation plans, plus the simulator that applies
// them. Dial positions are 1-based throughout the public interface.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dialock {

using Digit = std::int64_t;

/// Thrown for malformed input: out-of-range digits or positions, size or
/// modulus mismatches, negative values where a nonnegative function is
/// required.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Reduces any integer into [0, modulus).
[[nodiscard]] constexpr Digit wrap(Digit value, Digit modulus) noexcept {
  const Digit r = value % modulus;
  return r < 0 ? r + modulus : r;
}

/// base^exp, or max() once the product passes cap.
[[nodiscard]] inline std::uint64_t capped_power(std::uint64_t base,
                                                std::size_t exp,
                                                std::uint64_t cap) {
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && result > cap / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

/// Mixed-radix index of a combination, digit i having weight N^i.
[[nodiscard]] inline std::uint64_t encode(std::span<const Digit> digits,
                                          Digit modulus) {
  std::uint64_t index = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    index = index * static_cast<std::uint64_t>(modulus) +
            static_cast<std::uint64_t>(digits[i]);
  }
  return index;
}

inline void decode(std::uint64_t index, Digit modulus,
                   std::vector<Digit>& digits) {
  for (auto& d : digits) {
    d = static_cast<Digit>(index % static_cast<std::uint64_t>(modulus));
    index /= static_cast<std::uint64_t>(modulus);
  }
}

}  // namespace detail

/// A state of n dials, each showing a digit in [0, modulus - 1].
class Combination {
 public:
  Combination(Digit modulus, std::vector<Digit> digits)
      : modulus_(modulus), digits_(std::move(digits)) {
    if (modulus_ < 1) {
      throw InputError("modulus must be at least 1");
    }
    if (digits_.empty()) {
      throw InputError("a combination needs at least one dial");
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i] < 0 || digits_[i] >= modulus_) {
        throw InputError("digit " + std::to_string(digits_[i]) +
                         " at position " + std::to_string(i + 1) +
                         " is outside [0, " + std::to_string(modulus_ - 1) +
                         "]");
      }
    }
  }

  /// All-zero combination of n dials.
  static Combination zeros(std::size_t n, Digit modulus) {
    return Combination(modulus, std::vector<Digit>(n, 0));
  }

  [[nodiscard]] Digit modulus() const noexcept { return modulus_; }
  [[nodiscard]] std::size_t size() const noexcept { return digits_.size(); }
  [[nodiscard]] std::span<const Digit> digits() const noexcept {
    return digits_;
  }

  /// Digit at 1-based position i.
  [[nodiscard]] Digit at(std::size_t i) const {
    if (i < 1 || i > digits_.size()) {
      throw InputError("position " + std::to_string(i) + " outside [1, " +
                       std::to_string(digits_.size()) + "]");
    }
    return digits_[i - 1];
  }

  friend bool operator==(const Combination&, const Combination&) = default;

 private:
  Digit modulus_;
  std::vector<Digit> digits_;
};

enum class Direction : int { up = 1, down = -1 };

/// One unit rotation of the dials in [a, b].
struct Rotation {
  std::size_t a = 1;
  std::size_t b = 1;
  Direction direction = Direction::up;
};

/// An interval [a, b] rotated c times; c > 0 means c rotations that raise
/// the digits, c < 0 means |c| rotations that lower them.
struct PlanEntry {
  std::size_t a = 1;
  std::size_t b = 1;
  std::int64_t c = 0;

  friend bool operator==(const PlanEntry&, const PlanEntry&) = default;
};

/// A multiset of rotations in canonical form: one entry per distinct
/// interval, no zero multiplicities, sorted by (a, b).
class RotationPlan {
 public:
  RotationPlan() = default;

  /// Merges repeated intervals, drops entries whose multiplicities cancel and
  /// sorts the rest.
  explicit RotationPlan(std::vector<PlanEntry> entries) {
    for (const auto& e : entries) {
      if (e.a < 1 || e.a > e.b) {
        throw InputError("plan interval [" + std::to_string(e.a) + ", " +
                         std::to_string(e.b) + "] is not a valid interval");
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const PlanEntry& x, const PlanEntry& y) {
                return std::pair(x.a, x.b) < std::pair(y.a, y.b);
              });
    for (const auto& e : entries) {
      if (!entries_.empty() && entries_.back().a == e.a &&
          entries_.back().b == e.b) {
        entries_.back().c += e.c;
      } else {
        entries_.push_back(e);
      }
    }
    std::erase_if(entries_, [](const PlanEntry& e) { return e.c == 0; });
  }

  [[nodiscard]] std::span<const PlanEntry> entries() const noexcept {
    return entries_;
  }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const RotationPlan&, const RotationPlan&) = default;

 private:
  std::vector<PlanEntry> entries_;
};

/// Total number of unit rotations, the sum of |c| over entries.
[[nodiscard]] inline std::int64_t plan_cost(std::span<const PlanEntry> entries) {
  std::int64_t total = 0;
  for (const auto& e : entries) total += e.c < 0 ? -e.c : e.c;
  return total;
}

[[nodiscard]] inline std::int64_t plan_cost(const RotationPlan& plan) {
  return plan_cost(plan.entries());
}

[[nodiscard]] inline Combination apply_rotation(const Combination& comb,
                                                const Rotation& rot) {
  const std::size_t n = comb.size();
  if (rot.a < 1 || rot.b > n || rot.a > rot.b) {
    throw InputError("rotation interval [" + std::to_string(rot.a) + ", " +
                     std::to_string(rot.b) + "] is not inside [1, " +
                     std::to_string(n) + "]");
  }
  std::vector<Digit> out(comb.digits().begin(), comb.digits().end());
  const Digit step = static_cast<Digit>(rot.direction);
  for (std::size_t i = rot.a; i <= rot.b; ++i) {
    out[i - 1] = detail::wrap(out[i - 1] + step, comb.modulus());
  }
  return Combination(comb.modulus(), std::move(out));
}

/// Applies every entry with a difference array, O(n + entries). The order of
/// entries does not matter and duplicate intervals are allowed here.
[[nodiscard]] inline Combination apply_plan(const Combination& comb,
                                            std::span<const PlanEntry> entries) {
  const std::size_t n = comb.size();
  const Digit modulus = comb.modulus();
  std::vector<Digit> delta(n + 1, 0);
  for (const auto& e : entries) {
    if (e.a < 1 || e.b > n || e.a > e.b) {
      throw InputError("plan interval [" + std::to_string(e.a) + ", " +
                       std::to_string(e.b) + "] is not inside [1, " +
                       std::to_string(n) + "]");
    }
    const Digit step = detail::wrap(e.c, modulus);
    delta[e.a - 1] = detail::wrap(delta[e.a - 1] + step, modulus);
    delta[e.b] = detail::wrap(delta[e.b] - step, modulus);
  }
  std::vector<Digit> out(n);
  Digit running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    running = detail::wrap(running + delta[i], modulus);
    out[i] = detail::wrap(comb.digits()[i] + running, modulus);
  }
  return Combination(modulus, std::move(out));
}

[[nodiscard]] inline Combination apply_plan(const Combination& comb,
                                            const RotationPlan& plan) {
  return apply_plan(comb, plan.entries());
}

}  // namespace dialock
