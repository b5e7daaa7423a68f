// dialock: minimal rotations between combination-lock states.
//
//   dialock solve      --input instance.json [--out plan.json]
//   dialock verify     --input instance.json --plan plan.json
//   dialock crosscheck --n 3 --modulus 4 --mode all
//   dialock stats      --n 15 --modulus 7 --trials 10000 --seed 42
//
// Exit codes: 0 success, 1 input or usage error, 2 verification failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dialock.hpp"
#include "dialock/io.hpp"

namespace {

using namespace dialock;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kVerifyFailed = 2;

struct InstanceOptions {
  std::string input;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> modulus;
  std::string locked;
  std::string unlocked;

  void attach(CLI::App& cmd) {
    cmd.add_option("--input", input, "Instance JSON file");
    cmd.add_option("--n", n, "Number of dials (inline instance)");
    cmd.add_option("--modulus", modulus, "Digits per dial (inline instance)");
    cmd.add_option("--locked", locked,
                   "Starting digits: [..], CSV, or a digit string when "
                   "modulus is 10");
    cmd.add_option("--unlocked", unlocked, "Target digits, same forms");
  }

  [[nodiscard]] io::InstanceFile load() const {
    if (!input.empty()) return io::parse_instance(io::read_file(input));
    if (!modulus || locked.empty() || unlocked.empty()) {
      throw InputError("give --input, or --modulus with --locked and "
                       "--unlocked");
    }
    if (*modulus < 1) throw InputError("--modulus must be positive");
    io::InstanceFile inst;
    inst.modulus = *modulus;
    auto lo = io::parse_digits(locked, inst.modulus);
    auto hi = io::parse_digits(unlocked, inst.modulus);
    if (lo.size() != hi.size()) {
      throw InputError("--locked and --unlocked have different lengths");
    }
    if (n && static_cast<std::size_t>(*n) != lo.size()) {
      throw InputError("--n does not match the number of digits given");
    }
    inst.n = lo.size();
    inst.locked = Combination(inst.modulus, std::move(lo));
    inst.unlocked = Combination(inst.modulus, std::move(hi));
    return inst;
  }
};

int run_solve(const InstanceOptions& opts, const std::string& out_path) {
  const io::InstanceFile inst = opts.load();
  const RotationPlan plan = solve(inst.locked, inst.unlocked);
  const std::string payload = io::format_plan(inst.n, inst.modulus, plan) + "\n";
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw InputError("cannot write " + out_path);
    out << payload;
  }
  std::cerr << "optimal: " << plan_cost(plan) << "\n";
  return kOk;
}

int run_verify(const InstanceOptions& opts, const std::string& plan_path) {
  if (plan_path.empty()) throw InputError("verify needs --plan");
  const io::InstanceFile inst = opts.load();
  const io::PlanFile plan = io::parse_plan(io::read_file(plan_path));
  const io::Verification v = io::verify_plan(inst, plan);
  std::cerr << "achieved cost " << v.achieved_cost << ", claimed cost "
            << v.claimed_cost << "\n";
  if (!v.transforms) {
    std::cerr << "plan does not turn locked into unlocked\n";
  }
  if (!v.cost_matches()) std::cerr << "cost mismatch\n";
  if (!v.ok()) return kVerifyFailed;
  std::cerr << "ok\n";
  return kOk;
}

struct CrosscheckOptions {
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  std::string mode = "all";
  std::int64_t count = 100;
  std::uint64_t seed = 0;
};

void print_profile(std::ostream& os, const DiffProfile& p) {
  os << "(";
  for (std::size_t i = 0; i < p.values.size(); ++i) {
    os << (i ? "," : "") << p.values[i];
  }
  os << ") mod " << p.modulus;
}

int run_crosscheck(const CrosscheckOptions& opts) {
  if (opts.n < 1 || opts.modulus < 1) {
    throw InputError("crosscheck needs --n >= 1 and --modulus >= 1");
  }
  if (opts.count < 1) throw InputError("--count must be positive");
  const auto n = static_cast<std::size_t>(opts.n);
  const Digit modulus = opts.modulus;
  const SearchBudget budget;

  const std::uint64_t space = detail::capped_power(
      static_cast<std::uint64_t>(modulus), n, budget.max_states);
  const bool bfs_fits = space <= budget.max_states;
  const bool p3_fits =
      detail::capped_power(3, n + 1, budget.max_states) <= budget.max_states;

  std::uint64_t total = 0;
  if (opts.mode == "all") {
    if (!bfs_fits) {
      throw BudgetExceeded("N^n exceeds the oracle budget of " +
                           std::to_string(budget.max_states) +
                           " states; try a smaller --n or --modulus");
    }
    total = space;
  } else if (opts.mode == "random") {
    if (!bfs_fits && !p3_fits) {
      throw BudgetExceeded("instance too large for either oracle; try a "
                           "smaller --n or --modulus");
    }
    total = static_cast<std::uint64_t>(opts.count);
  } else {
    throw InputError("--mode must be \"all\" or \"random\"");
  }

  std::vector<std::int32_t> table;
  if (bfs_fits) table = bfs_distance_table(n, modulus, budget);

  std::uint64_t agree = 0;
  std::vector<Value> digits(n);
  for (std::uint64_t t = 0; t < total; ++t) {
    DiffProfile profile;
    if (opts.mode == "all") {
      detail::decode(t, modulus, digits);
      profile = DiffProfile::from_difference(digits, modulus);
    } else {
      profile = trial_diff(n, modulus, opts.seed, t);
    }
    const Value solver = optimal_value(profile);
    const std::optional<Value> bfs =
        bfs_fits ? std::optional<Value>(table[state_index(profile)])
                 : std::nullopt;
    const std::optional<Value> p3 =
        p3_fits ? std::optional<Value>(exhaustive_p3(profile, 1, budget))
                : std::nullopt;
    if ((bfs && *bfs != solver) || (p3 && *p3 != solver)) {
      std::cout << agree << "/" << total << " agree before a mismatch\n";
      std::cout << "counterexample ";
      print_profile(std::cout, profile);
      std::cout << ": solver " << solver;
      if (bfs) std::cout << ", bfs " << *bfs;
      if (p3) std::cout << ", shift enumeration " << *p3;
      std::cout << "\n";
      return kVerifyFailed;
    }
    ++agree;
  }
  std::cout << agree << "/" << total << " agree\n";
  return kOk;
}

struct StatsOptions {
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  std::int64_t trials = 10000;
  std::uint64_t seed = 0;
};

int run_stats(const StatsOptions& opts) {
  if (opts.n < 1 || opts.modulus < 1) {
    throw InputError("stats needs --n >= 1 and --modulus >= 1");
  }
  if (opts.trials < 1) throw InputError("--trials must be positive");
  const TrialReport report =
      estimate_mean(static_cast<std::size_t>(opts.n), opts.modulus,
                    static_cast<std::uint64_t>(opts.trials), opts.seed);
  std::cout << io::format_report(report) << "\n";
  std::cerr << "mean " << report.mean << " vs predicted " << report.predicted
            << " (deviation " << report.mean - report.predicted << ")\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal rotations between combination-lock states"};
  app.require_subcommand(1);

  InstanceOptions solve_opts;
  std::string out_path;
  auto* solve_cmd = app.add_subcommand("solve", "Compute an optimal plan");
  solve_opts.attach(*solve_cmd);
  solve_cmd->add_option("--out", out_path, "Write the plan here, not stdout");

  InstanceOptions verify_opts;
  std::string plan_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a plan file");
  verify_opts.attach(*verify_cmd);
  verify_cmd->add_option("--plan", plan_path, "Plan JSON file");

  CrosscheckOptions cross;
  auto* cross_cmd =
      app.add_subcommand("crosscheck", "Compare the solver with brute force");
  cross_cmd->add_option("--n", cross.n, "Number of dials")->required();
  cross_cmd->add_option("--modulus", cross.modulus, "Digits per dial")
      ->required();
  cross_cmd->add_option("--mode", cross.mode, "all | random");
  cross_cmd->add_option("--count", cross.count, "Instances in random mode");
  cross_cmd->add_option("--seed", cross.seed, "Seed for random mode");

  StatsOptions stats;
  auto* stats_cmd =
      app.add_subcommand("stats", "Mean rotation count of random instances");
  stats_cmd->add_option("--n", stats.n, "Number of dials")->required();
  stats_cmd->add_option("--modulus", stats.modulus, "Digits per dial")
      ->required();
  stats_cmd->add_option("--trials", stats.trials, "Sampled instances");
  stats_cmd->add_option("--seed", stats.seed, "Base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(solve_opts, out_path);
    if (*verify_cmd) return run_verify(verify_opts, plan_path);
    if (*cross_cmd) return run_crosscheck(cross);
    if (*stats_cmd) return run_stats(stats);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
