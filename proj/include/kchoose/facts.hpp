#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kchoose {

enum class FactStatus { Pass, Fail, BudgetExceeded };
std::string to_string(FactStatus s);

struct FactOptions {
  int jobs = 1;
  std::uint64_t budget = 100'000'000;
  /// Largest order for the exhaustive graph sweeps (F4); 6 is the quick
  /// tier.
  int sweep_order = 7;
};

struct FactResult {
  FactStatus status = FactStatus::Pass;
  /// Deterministic one-line summary of what was checked.
  std::string detail;
};

struct Fact {
  std::string id;
  std::string description;
  /// Wall-clock allowance in seconds for the acceptance run.
  double time_limit;
  std::function<FactResult(const FactOptions&)> check;
};

/// The registry, ordered by id number.
const std::vector<Fact>& fact_registry();

/// Facts whose id matches `pattern` as a whole-string regular expression;
/// an empty pattern selects everything.
std::vector<const Fact*> select_facts(const std::string& pattern);

}  // namespace kchoose
