#pragma once

// Model files: charts, algebroids, Poisson structures and named tensors.
//
//   {"charts": {name: [coord, ...]},
//    "algebroids": {name: {"chart", "fibers", "anchor", "c": {"i,j": {"k": poly}}}},
//    "poisson": {name: {"chart", "bivector": {"i,j": poly}}},
//    "tensors": {name: {"owner", "kind", "degree", "terms": {"i,j" | "i,j|k": poly}}},
//    "suite": {"seed", "trials", "max_degree"}}
//
// Indices in key strings are 1-based. A tensor owner is an algebroid name or
// a chart name (its canonical algebroid).

#include <map>
#include <string>

#include <json.hpp>

#include "lac/lifts.hpp"

namespace lac {

struct SuiteConfig {
  std::uint64_t seed = 7;
  int trials = 50;
  int max_degree = 2;
};

struct NamedAlgebroid {
  std::string chart;
  AlgebroidPtr algebroid;
};

struct NamedPoisson {
  std::string chart;
  PoissonPtr poisson;
};

struct NamedTensor {
  std::string owner;
  Tensor tensor;
};

struct Model {
  std::map<std::string, Chart> charts;
  std::map<std::string, NamedAlgebroid> algebroids;
  std::map<std::string, NamedPoisson> poisson;
  std::map<std::string, NamedTensor> tensors;
  SuiteConfig suite;
  bool has_suite = false;

  // Algebroid by name; chart names give the canonical algebroid.
  AlgebroidPtr owner(const std::string& name) const;
  const Tensor& tensor(const std::string& name) const;
  PoissonPtr poisson_structure(const std::string& name) const;

 private:
  mutable std::map<std::string, AlgebroidPtr> canonical_cache_;
};

Kind parse_kind(std::string_view s);
std::string kind_name(Kind k);

// "1,3" or "1,3|2" (1-based) -> indices and fiber (0-based, -1 if absent).
std::pair<std::vector<int>, int> parse_key(std::string_view key);
std::string key_string(const Key& key);

Tensor make_tensor(const AlgebroidPtr& owner, Kind kind, int degree,
                   const std::map<std::string, std::string>& terms);

Model parse_model(const nlohmann::json& j);
Model parse_model_text(std::string_view text);
Model load_model(const std::string& path);
nlohmann::json dump_model(const Model& m);
nlohmann::json tensor_json(const Tensor& t);

}  // namespace lac
