#pragma once

// Property suites: every identity is checked as exact equality of normal
// forms on seeded random instances over a fixture corpus.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lac/fixtures.hpp"
#include "lac/parallel.hpp"
#include "lac/tensor.hpp"

namespace lac {

enum class Status { Pass, Fail, Error };
std::string_view to_string(Status s);

struct Witness {
  std::string fixture;
  int trial = 0;
  std::uint64_t seed = 0;  // generator seed of this trial
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string check;
  std::string residual;
  std::string replay;
};

struct ItemResult {
  std::string id;
  std::string suite;
  Status status = Status::Pass;
  long checks = 0;
  int runs = 0;  // fixture × trial pairs
  double seconds = 0;
  std::string note;
  std::optional<Witness> witness;
};

struct SuiteOptions {
  std::uint64_t seed = 7;
  int trials = 50;
  int max_degree = 2;
  Exec exec = Exec::Parallel;
  std::string fixture;  // empty: all
  int trial = -1;       // -1: all
  std::string item;     // empty: all
  std::string replay_prefix = "lac";  // command line prepended to replay hints
  // Contraction order for every trial; unset keeps the calling thread's order.
  std::optional<ContractionOrder> order;
};

struct SuiteReport {
  std::string name;
  std::vector<ItemResult> items;  // sorted by id
  double seconds = 0;
  std::string contraction_order;

  bool passed() const;
  int count(Status s) const;
};

std::vector<std::string> suite_names();
bool has_suite(std::string_view name);
// `name` is a suite id or "all". Throws UnknownName.
SuiteReport run_suite(std::string_view name, const Corpus& corpus, const SuiteOptions& options = {});

nlohmann::json report_json(const SuiteReport& r);
std::string report_summary(const SuiteReport& r);

}  // namespace lac
