#pragma once

// JSON interchange formats used by the command-line tool.
//
//   instance: {"n":4,"modulus":10,"locked":[9,1,6,7],"unlocked":[9,1,6,6]}
//   plan:     {"n":4,"modulus":10,"entries":[{"a":4,"b":4,"c":-1}],"cost":1}
//
// Plan positions a and b are 1-based and inclusive. Keys are always written
// in the order shown, without whitespace, so equal plans serialize to equal
// bytes.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "dialock/core.hpp"
#include "dialock/stats.hpp"

namespace dialock::io {

using Json = nlohmann::ordered_json;

struct InstanceFile {
  std::size_t n = 0;
  Digit modulus = 1;
  Combination locked = Combination::zeros(1, 1);
  Combination unlocked = Combination::zeros(1, 1);
};

/// Entries are kept exactly as written; nothing is merged or reordered.
struct PlanFile {
  std::size_t n = 0;
  Digit modulus = 1;
  std::vector<PlanEntry> entries;
  std::int64_t cost = 0;
};

namespace detail {

template <typename T>
T require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw InputError(std::string("missing field \"") + key + "\"");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

inline std::size_t positive_size(const Json& doc, const char* key) {
  const auto v = require<std::int64_t>(doc, key);
  if (v < 1) throw InputError(std::string("\"") + key + "\" must be positive");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

[[nodiscard]] inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

[[nodiscard]] inline InstanceFile parse_instance(std::string_view text) {
  const Json doc = detail::parse_json(text);
  InstanceFile inst;
  inst.n = detail::positive_size(doc, "n");
  inst.modulus = static_cast<Digit>(detail::positive_size(doc, "modulus"));
  auto locked = detail::require<std::vector<Digit>>(doc, "locked");
  auto unlocked = detail::require<std::vector<Digit>>(doc, "unlocked");
  if (locked.size() != inst.n || unlocked.size() != inst.n) {
    throw InputError("locked and unlocked must both have n = " +
                     std::to_string(inst.n) + " digits");
  }
  inst.locked = Combination(inst.modulus, std::move(locked));
  inst.unlocked = Combination(inst.modulus, std::move(unlocked));
  return inst;
}

[[nodiscard]] inline std::string format_instance(const InstanceFile& inst) {
  Json doc;
  doc["n"] = inst.n;
  doc["modulus"] = inst.modulus;
  doc["locked"] = std::vector<Digit>(inst.locked.digits().begin(),
                                     inst.locked.digits().end());
  doc["unlocked"] = std::vector<Digit>(inst.unlocked.digits().begin(),
                                       inst.unlocked.digits().end());
  return doc.dump();
}

[[nodiscard]] inline PlanFile parse_plan(std::string_view text) {
  const Json doc = detail::parse_json(text);
  PlanFile plan;
  plan.n = detail::positive_size(doc, "n");
  plan.modulus = static_cast<Digit>(detail::positive_size(doc, "modulus"));
  plan.cost = detail::require<std::int64_t>(doc, "cost");
  const auto entries = detail::require<Json>(doc, "entries");
  if (!entries.is_array()) throw InputError("\"entries\" must be an array");
  for (const auto& item : entries) {
    const auto a = detail::require<std::int64_t>(item, "a");
    const auto b = detail::require<std::int64_t>(item, "b");
    const auto c = detail::require<std::int64_t>(item, "c");
    if (a < 1 || b < a || static_cast<std::size_t>(b) > plan.n) {
      throw InputError("plan entry [" + std::to_string(a) + ", " +
                       std::to_string(b) + "] is not an interval inside [1, " +
                       std::to_string(plan.n) + "]");
    }
    plan.entries.push_back(
        {static_cast<std::size_t>(a), static_cast<std::size_t>(b), c});
  }
  return plan;
}

[[nodiscard]] inline std::string format_plan(std::size_t n, Digit modulus,
                                             const RotationPlan& plan) {
  Json doc;
  doc["n"] = n;
  doc["modulus"] = modulus;
  doc["entries"] = Json::array();
  for (const auto& e : plan.entries()) {
    Json item;
    item["a"] = e.a;
    item["b"] = e.b;
    item["c"] = e.c;
    doc["entries"].push_back(std::move(item));
  }
  doc["cost"] = plan_cost(plan);
  return doc.dump();
}

[[nodiscard]] inline std::string format_report(const TrialReport& report) {
  Json doc;
  doc["n"] = report.n;
  doc["modulus"] = report.modulus;
  doc["trials"] = report.trials;
  doc["mean"] = report.mean;
  doc["std_error"] = report.std_error;
  doc["predicted"] = report.predicted;
  doc["seed"] = report.seed;
  doc["mode"] = to_string(report.mode);
  return doc.dump();
}

struct Verification {
  bool transforms = false;
  std::int64_t achieved_cost = 0;
  std::int64_t claimed_cost = 0;

  [[nodiscard]] bool cost_matches() const noexcept {
    return achieved_cost == claimed_cost;
  }
  [[nodiscard]] bool ok() const noexcept { return transforms && cost_matches(); }
};

[[nodiscard]] inline Verification verify_plan(const InstanceFile& inst,
                                              const PlanFile& plan) {
  if (plan.n != inst.n || plan.modulus != inst.modulus) {
    throw InputError("plan is for n = " + std::to_string(plan.n) +
                     ", modulus = " + std::to_string(plan.modulus) +
                     " but the instance has n = " + std::to_string(inst.n) +
                     ", modulus = " + std::to_string(inst.modulus));
  }
  Verification v;
  v.transforms = apply_plan(inst.locked, plan.entries) == inst.unlocked;
  v.achieved_cost = plan_cost(plan.entries);
  v.claimed_cost = plan.cost;
  return v;
}

/// Digits from the command line. Accepts a JSON array ("[9,1,6,7]"), a
/// comma-separated list ("9,1,6,7") or, for modulus 10 only, a string of
/// single digits ("9167"). Any other bare token is read as one number.
[[nodiscard]] inline std::vector<Digit> parse_digits(std::string_view text,
                                                     Digit modulus) {
  if (text.empty()) throw InputError("empty digit list");
  if (text.front() == '[') {
    const Json doc = detail::parse_json(text);
    try {
      return doc.get<std::vector<Digit>>();
    } catch (const nlohmann::json::exception&) {
      throw InputError("digit array must contain integers only");
    }
  }
  auto parse_number = [](std::string_view token) -> Digit {
    Digit value = 0;
    const auto [end, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        end != token.data() + token.size()) {
      throw InputError("invalid digit list entry \"" + std::string(token) +
                       "\"");
    }
    return value;
  };
  std::vector<Digit> out;
  if (text.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      out.push_back(parse_number(text.substr(start, end - start)));
      start = end + 1;
    }
    return out;
  }
  if (modulus != 10 || text.size() == 1) return {parse_number(text)};
  for (const char ch : text) out.push_back(parse_number(std::string_view(&ch, 1)));
  return out;
}

}  // namespace dialock::io
