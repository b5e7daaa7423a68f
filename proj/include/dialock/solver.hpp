#pragma once

// Minimal number of rotations between two combinations, and an explicit
// optimal plan.
//
// The count depends only on the jumps of the difference d = unlocked - locked
// (mod N). Every jump may be shifted by a multiple of N as long as the shifts
// sum to zero; shifting one upward jump down by N and one downward jump up by
// N pays off when their magnitudes sum to at least N. The best such shifts
// pair the largest upward jumps with the largest downward jumps, and the
// shifted function g = d + N * k is then built from superlevel intervals.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "dialock/core.hpp"
#include "dialock/variation.hpp"

namespace dialock {

/// The pointwise difference (unlocked - locked) mod N and its forward
/// differences over positions 0..n.
struct DiffProfile {
  Digit modulus = 1;
  std::vector<Value> values;
  std::vector<Value> delta;

  /// Builds a profile from a difference combination given directly.
  static DiffProfile from_difference(std::vector<Value> values, Digit modulus) {
    Combination check(modulus, values);  // validates range and n >= 1
    DiffProfile p;
    p.modulus = modulus;
    p.delta = forward_difference(values);
    p.values = std::move(values);
    return p;
  }

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
  [[nodiscard]] bool is_zero() const noexcept {
    return std::all_of(values.begin(), values.end(),
                       [](Value v) { return v == 0; });
  }
};

[[nodiscard]] inline DiffProfile diff_profile(const Combination& locked,
                                              const Combination& unlocked) {
  if (locked.modulus() != unlocked.modulus()) {
    throw InputError("locked and unlocked combinations use different moduli");
  }
  if (locked.size() != unlocked.size()) {
    throw InputError("locked and unlocked combinations have different lengths");
  }
  std::vector<Value> values(locked.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = detail::wrap(unlocked.digits()[i] - locked.digits()[i],
                             locked.modulus());
  }
  return DiffProfile::from_difference(std::move(values), locked.modulus());
}

/// Positions 0..n split by the sign of the jump there. plus and minus are
/// ordered by nonincreasing magnitude, equal magnitudes by position.
struct JumpSets {
  std::vector<std::size_t> plus;
  std::vector<std::size_t> minus;
  std::vector<std::size_t> zero;
};

[[nodiscard]] inline JumpSets make_jumps(const DiffProfile& profile) {
  JumpSets jumps;
  const auto& delta = profile.delta;
  for (std::size_t i = 0; i < delta.size(); ++i) {
    if (delta[i] > 0) {
      jumps.plus.push_back(i);
    } else if (delta[i] < 0) {
      jumps.minus.push_back(i);
    } else {
      jumps.zero.push_back(i);
    }
  }
  auto by_magnitude = [&](std::size_t x, std::size_t y) {
    const Value mx = delta[x] < 0 ? -delta[x] : delta[x];
    const Value my = delta[y] < 0 ? -delta[y] : delta[y];
    return mx != my ? mx > my : x < y;
  };
  std::sort(jumps.plus.begin(), jumps.plus.end(), by_magnitude);
  std::sort(jumps.minus.begin(), jumps.minus.end(), by_magnitude);
  return jumps;
}

/// Change in twice the objective when the jump `up_jump` is lowered by N and
/// `down_jump` is raised by N. Arguments are signed jump values; for an
/// upward and a downward jump this is 2 (|up| + |down| - N), otherwise it is
/// at most -2.
[[nodiscard]] constexpr Value gain(Value up_jump, Value down_jump,
                                   Digit modulus) noexcept {
  auto abs = [](Value v) { return v < 0 ? -v : v; };
  return abs(up_jump) + abs(down_jump) -
         (abs(up_jump - modulus) + abs(down_jump + modulus));
}

/// The K matched (upward, downward) jump positions. gains[k] is
/// |jump(plus)| + |jump(minus)| - N for the k-th pair, always >= 0.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Value> gains;

  [[nodiscard]] std::size_t count() const noexcept { return pairs.size(); }
  [[nodiscard]] Value total_gain() const noexcept {
    return std::accumulate(gains.begin(), gains.end(), Value{0});
  }
};

/// Pairs the k-th largest upward jump with the k-th largest downward jump for
/// as long as their magnitudes sum to at least N. Zero-gain pairs are kept.
[[nodiscard]] inline Pairing make_pairing(const DiffProfile& profile,
                                          const JumpSets& jumps) {
  Pairing pairing;
  const std::size_t limit = std::min(jumps.plus.size(), jumps.minus.size());
  for (std::size_t k = 0; k < limit; ++k) {
    const std::size_t up = jumps.plus[k];
    const std::size_t down = jumps.minus[k];
    const Value g = profile.delta[up] - profile.delta[down] - profile.modulus;
    if (g < 0) break;
    pairing.pairs.emplace_back(up, down);
    pairing.gains.push_back(g);
  }
  return pairing;
}

/// Minimal number of unit rotations that turn the difference into zeros.
[[nodiscard]] inline Value optimal_value(const DiffProfile& profile) {
  const Pairing pairing = make_pairing(profile, make_jumps(profile));
  return cost(profile.values) - pairing.total_gain();
}

/// g = d + N * k, where k is the prefix sum of the jump shifts k' (-1 at
/// paired upward jumps, +1 at paired downward jumps).
struct LiftedFunction {
  std::vector<Value> k;
  std::vector<Value> g;
};

[[nodiscard]] inline LiftedFunction build_lift(const DiffProfile& profile,
                                               const Pairing& pairing) {
  const std::size_t n = profile.size();
  std::vector<Value> shift(n + 1, 0);
  for (const auto& [up, down] : pairing.pairs) {
    shift[up] -= 1;
    shift[down] += 1;
  }
  LiftedFunction lift;
  lift.k.resize(n);
  lift.g.resize(n);
  Value running = 0;
  for (std::size_t i = 0; i < n; ++i) {
    running += shift[i];
    lift.k[i] = running;
    lift.g[i] = profile.values[i] + profile.modulus * running;
  }
  return lift;
}

/// Canonical optimal plan whose entries add up to the difference mod N, so
/// applying it to the locked combination yields the unlocked one.
[[nodiscard]] inline RotationPlan solve(const DiffProfile& profile) {
  if (profile.is_zero()) return {};
  const Pairing pairing = make_pairing(profile, make_jumps(profile));
  const LiftedFunction lift = build_lift(profile, pairing);
  return minimal_representation(lift.g);
}

[[nodiscard]] inline RotationPlan solve(const Combination& locked,
                                        const Combination& unlocked) {
  return solve(diff_profile(locked, unlocked));
}

}  // namespace dialock
