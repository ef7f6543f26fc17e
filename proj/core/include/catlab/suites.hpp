#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catlab/asphericity.hpp"
#include "catlab/enumeration.hpp"

namespace catlab {

struct SuiteOptions {
  Bounds bounds{3, 6};       // corpus bounds for single-functor sweeps
  std::uint64_t seed = 0;
  int samples = 200;         // seeded random instances where a suite uses them
  int threads = 0;           // 0 = CATLAB_THREADS / auto
  std::uint64_t functor_budget = 100000;
  // Overrides the built-in structures for suites that take one (the As1/As2
  // demo); empty -> suite default.
  std::optional<AsphericityStructure> structure;
};

struct SuiteFailure {
  std::string instance_key;  // deterministic replay key
  std::string message;
  std::string witness_json;  // serialized documents reproducing the instance
};

struct SuiteReport {
  std::string suite;
  std::uint64_t instances = 0;
  std::vector<SuiteFailure> failures;
  std::vector<std::string> skips;  // functor-budget skips, one key per pair
  double wall_ms = 0.0;
  std::uint64_t seed = 0;
  bool ok() const { return failures.empty(); }
};

struct SuiteInfo {
  std::string name;
  std::string checks;  // one-line description of the law being verified
};

// Deterministically ordered registry of every named suite.
std::vector<SuiteInfo> suite_registry();
bool suite_exists(const std::string& name);

// Executes the named suite; throws Error(UnknownSuite) for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options);

// Re-checks a failure from its embedded witness; true when the failure
// reproduces (i.e. the law still fails on the witness instance).
bool replay_failure(const std::string& suite, const SuiteFailure& failure);

std::string report_to_json(const SuiteReport& report);

}  // namespace catlab
