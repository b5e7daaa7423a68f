#include <random>
#include <string>

#include <gtest/gtest.h>

#include "dialock/io.hpp"
#include "dialock/solver.hpp"

using namespace dialock;

TEST(InstanceFile, ParsesAndFormats) {
  const std::string text =
      R"({"n":4,"modulus":10,"locked":[9,1,6,7],"unlocked":[9,1,6,6]})";
  const auto inst = io::parse_instance(text);
  EXPECT_EQ(inst.n, 4u);
  EXPECT_EQ(inst.modulus, 10);
  EXPECT_EQ(inst.locked, Combination(10, {9, 1, 6, 7}));
  EXPECT_EQ(inst.unlocked, Combination(10, {9, 1, 6, 6}));
  EXPECT_EQ(io::format_instance(inst), text);
}

TEST(InstanceFile, RejectsBadInput) {
  EXPECT_THROW((void)io::parse_instance("{not json"), InputError);
  EXPECT_THROW((void)io::parse_instance(R"({"n":2,"modulus":10,"locked":[1,2]})"),
               InputError);
  EXPECT_THROW(
      (void)io::parse_instance(R"({"n":2,"modulus":10,"locked":[1,2],"unlocked":[1]})"),
      InputError);
  EXPECT_THROW(
      (void)io::parse_instance(R"({"n":1,"modulus":10,"locked":[10],"unlocked":[1]})"),
      InputError);
  EXPECT_THROW(
      (void)io::parse_instance(R"({"n":0,"modulus":10,"locked":[],"unlocked":[]})"),
      InputError);
  EXPECT_THROW(
      (void)io::parse_instance(R"({"n":1,"modulus":"ten","locked":[1],"unlocked":[1]})"),
      InputError);
}

TEST(PlanFile, CanonicalBytes) {
  const RotationPlan plan({{3, 3, -1}, {1, 1, -1}, {5, 5, -1}});
  EXPECT_EQ(io::format_plan(5, 10, plan),
            R"({"n":5,"modulus":10,"entries":[{"a":1,"b":1,"c":-1},{"a":3,"b":3,"c":-1},{"a":5,"b":5,"c":-1}],"cost":3})");
  EXPECT_EQ(io::format_plan(2, 4, RotationPlan{}),
            R"({"n":2,"modulus":4,"entries":[],"cost":0})");
}

TEST(PlanFile, RoundTripsSolverOutput) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 20;
    const Digit modulus = 1 + static_cast<Digit>(rng() % 15);
    std::vector<Digit> lo(n), hi(n);
    for (auto& x : lo) x = static_cast<Digit>(rng() % static_cast<std::uint64_t>(modulus));
    for (auto& x : hi) x = static_cast<Digit>(rng() % static_cast<std::uint64_t>(modulus));
    io::InstanceFile inst;
    inst.n = n;
    inst.modulus = modulus;
    inst.locked = Combination(modulus, lo);
    inst.unlocked = Combination(modulus, hi);
    const auto text = io::format_plan(n, modulus, solve(inst.locked, inst.unlocked));
    const auto parsed = io::parse_plan(text);
    EXPECT_TRUE(io::verify_plan(inst, parsed).ok());
    EXPECT_EQ(io::format_plan(n, modulus, RotationPlan(parsed.entries)), text);
  }
}

TEST(PlanFile, RejectsBadEntries) {
  EXPECT_THROW(
      (void)io::parse_plan(R"({"n":2,"modulus":4,"entries":[{"a":2,"b":1,"c":1}],"cost":1})"),
      InputError);
  EXPECT_THROW(
      (void)io::parse_plan(R"({"n":2,"modulus":4,"entries":[{"a":1,"b":3,"c":1}],"cost":1})"),
      InputError);
  EXPECT_THROW((void)io::parse_plan(R"({"n":2,"modulus":4,"entries":[{"a":1}],"cost":1})"),
               InputError);
  EXPECT_THROW((void)io::parse_plan(R"({"n":2,"modulus":4,"entries":{},"cost":1})"),
               InputError);
}

TEST(Verify, DetectsWrongPlansAndCosts) {
  const auto inst = io::parse_instance(
      R"({"n":5,"modulus":10,"locked":[0,0,0,0,0],"unlocked":[9,0,9,0,9]})");
  const auto good = io::parse_plan(
      R"({"n":5,"modulus":10,"entries":[{"a":1,"b":1,"c":-1},{"a":3,"b":3,"c":-1},{"a":5,"b":5,"c":-1}],"cost":3})");
  EXPECT_TRUE(io::verify_plan(inst, good).ok());

  const auto empty = io::parse_plan(R"({"n":5,"modulus":10,"entries":[],"cost":0})");
  const auto v = io::verify_plan(inst, empty);
  EXPECT_FALSE(v.transforms);
  EXPECT_TRUE(v.cost_matches());

  auto wrong_cost = good;
  wrong_cost.cost = 2;
  const auto w = io::verify_plan(inst, wrong_cost);
  EXPECT_TRUE(w.transforms);
  EXPECT_FALSE(w.cost_matches());

  auto other_shape = good;
  other_shape.n = 4;
  EXPECT_THROW((void)io::verify_plan(inst, other_shape), InputError);
}

TEST(ParseDigits, AcceptedForms) {
  using V = std::vector<Digit>;
  EXPECT_EQ(io::parse_digits("9167", 10), (V{9, 1, 6, 7}));
  EXPECT_EQ(io::parse_digits("9,1,6,7", 10), (V{9, 1, 6, 7}));
  EXPECT_EQ(io::parse_digits("[12,25,0]", 26), (V{12, 25, 0}));
  EXPECT_EQ(io::parse_digits("12,25,0", 26), (V{12, 25, 0}));
  EXPECT_EQ(io::parse_digits("13", 26), (V{13}));
  EXPECT_EQ(io::parse_digits("4", 7), (V{4}));
}

TEST(ParseDigits, RejectedForms) {
  EXPECT_THROW((void)io::parse_digits("", 10), InputError);
  EXPECT_THROW((void)io::parse_digits("1,,2", 10), InputError);
  EXPECT_THROW((void)io::parse_digits("9a67", 10), InputError);
  EXPECT_THROW((void)io::parse_digits("[1,\"x\"]", 10), InputError);
}

TEST(Report, FieldOrder) {
  TrialReport r;
  r.n = 1;
  r.modulus = 2;
  r.trials = 2;
  r.mean = 0.5;
  r.predicted = 0.5;
  r.seed = 42;
  r.mode = StatsMode::exhaustive;
  EXPECT_EQ(io::format_report(r),
            R"({"n":1,"modulus":2,"trials":2,"mean":0.5,"std_error":0.0,"predicted":0.5,"seed":42,"mode":"exhaustive"})");
}
