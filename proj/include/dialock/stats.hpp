#pragma once

// Mean of the minimal rotation count over uniformly random difference
// combinations, compared against the approximation N (n + 1) / 8.
//
// Randomness: trial t draws its digits from std::mt19937_64 seeded with
// seed XOR t, reduced to [0, N) by rejection sampling, so results do not
// depend on how trials are spread over threads.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dialock/core.hpp"
#include "dialock/solver.hpp"

namespace dialock {

enum class StatsMode { sampled, exhaustive };

[[nodiscard]] inline std::string to_string(StatsMode mode) {
  return mode == StatsMode::sampled ? "sampled" : "exhaustive";
}

struct TrialReport {
  std::size_t n = 0;
  Digit modulus = 1;
  std::uint64_t trials = 0;
  double mean = 0.0;
  double std_error = 0.0;
  double predicted = 0.0;
  std::uint64_t seed = 0;
  StatsMode mode = StatsMode::sampled;
};

/// Combinations counted exactly instead of sampled when N^n is at most this.
inline constexpr std::uint64_t kExhaustiveLimit = 1'000'000;

[[nodiscard]] inline double predicted_mean(std::size_t n, Digit modulus) {
  return static_cast<double>(modulus) * static_cast<double>(n + 1) / 8.0;
}

namespace detail {

/// Uniform draw from [0, bound) without modulo bias.
[[nodiscard]] inline std::uint64_t uniform_below(std::mt19937_64& engine,
                                                 std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine();
    if (x >= threshold) return x % bound;
  }
}

struct Moments {
  std::int64_t sum = 0;
  std::int64_t sum_sq = 0;
};

}  // namespace detail

/// Uniform difference combination drawn from the given engine.
[[nodiscard]] inline DiffProfile random_diff(std::size_t n, Digit modulus,
                                             std::mt19937_64& engine) {
  if (n < 1 || modulus < 1) {
    throw InputError("random combinations need n >= 1 and N >= 1");
  }
  std::vector<Value> values(n);
  for (auto& v : values) {
    v = static_cast<Value>(
        detail::uniform_below(engine, static_cast<std::uint64_t>(modulus)));
  }
  return DiffProfile::from_difference(std::move(values), modulus);
}

/// The difference combination used by trial `trial` of a run seeded `seed`.
[[nodiscard]] inline DiffProfile trial_diff(std::size_t n, Digit modulus,
                                            std::uint64_t seed,
                                            std::uint64_t trial) {
  std::mt19937_64 engine(seed ^ trial);
  return random_diff(n, modulus, engine);
}

/// Exact mean over all N^n combinations when that count is at most
/// kExhaustiveLimit, otherwise the sample mean over `trials` draws.
/// Exhaustive reports carry std_error 0 and trials = N^n.
[[nodiscard]] inline TrialReport estimate_mean(std::size_t n, Digit modulus,
                                               std::uint64_t trials,
                                               std::uint64_t seed,
                                               unsigned threads = 0) {
  if (n < 1 || modulus < 1) {
    throw InputError("statistics need n >= 1 and N >= 1");
  }
  if (trials < 1) {
    throw InputError("statistics need at least one trial");
  }
  TrialReport report;
  report.n = n;
  report.modulus = modulus;
  report.seed = seed;
  report.predicted = predicted_mean(n, modulus);

  const std::uint64_t space = detail::capped_power(
      static_cast<std::uint64_t>(modulus), n, kExhaustiveLimit);
  if (space <= kExhaustiveLimit) {
    report.mode = StatsMode::exhaustive;
    report.trials = space;
    std::int64_t sum = 0;
    std::vector<Value> digits(n, 0);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
      detail::decode(idx, modulus, digits);
      sum += optimal_value(DiffProfile::from_difference(digits, modulus));
    }
    report.mean = static_cast<double>(sum) / static_cast<double>(space);
    return report;
  }

  report.mode = StatsMode::sampled;
  report.trials = trials;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, (trials + 255) / 256));

  std::vector<detail::Moments> partial(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        const std::uint64_t begin = trials * w / threads;
        const std::uint64_t end = trials * (w + 1) / threads;
        detail::Moments m;
        for (std::uint64_t t = begin; t < end; ++t) {
          const Value v = optimal_value(trial_diff(n, modulus, seed, t));
          m.sum += v;
          m.sum_sq += v * v;
        }
        partial[w] = m;
      });
    }
  }
  detail::Moments total;
  for (const auto& m : partial) {
    total.sum += m.sum;
    total.sum_sq += m.sum_sq;
  }
  const double count = static_cast<double>(trials);
  report.mean = static_cast<double>(total.sum) / count;
  if (trials > 1) {
    const double centered =
        static_cast<double>(total.sum_sq) -
        static_cast<double>(total.sum) * static_cast<double>(total.sum) / count;
    const double variance = std::max(0.0, centered / (count - 1.0));
    report.std_error = std::sqrt(variance / count);
  }
  return report;
}

}  // namespace dialock
