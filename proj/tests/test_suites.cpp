#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "catlab/format.hpp"
#include "catlab/suites.hpp"

using namespace catlab;

namespace {

std::set<std::string> manifest_suites(bool invariant_only) {
  std::ifstream in(std::string(CATLAB_TEST_DATA_DIR) + "/suite_manifest.txt");
  REQUIRE(in);
  std::set<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string tag, module_or_name, name;
    ss >> tag >> module_or_name >> name;
    if (tag == "invariant")
      names.insert(name);
    else if (tag == "extra" && !invariant_only)
      names.insert(module_or_name);
  }
  return names;
}

SuiteOptions small_options() {
  SuiteOptions opt;
  opt.bounds = {2, 3};
  opt.samples = 5;
  return opt;
}

}  // namespace

TEST_CASE("the registry matches the manifest exactly") {
  std::set<std::string> manifest = manifest_suites(false);
  std::set<std::string> registry;
  for (const auto& info : suite_registry()) {
    CHECK(!info.checks.empty());
    registry.insert(info.name);
  }
  for (const auto& name : manifest) {
    INFO("manifest suite missing from registry: ", name);
    CHECK(registry.count(name) == 1);
  }
  for (const auto& name : registry) {
    INFO("registered suite missing from manifest: ", name);
    CHECK(manifest.count(name) == 1);
  }
  // every invariant row is bound to exactly one suite name
  CHECK(manifest_suites(true).size() == 23);
}

TEST_CASE("unknown suites are rejected") {
  CHECK_FALSE(suite_exists("no-such-suite"));
  CHECK_THROWS_AS(run_suite("no-such-suite", small_options()), Error);
}

TEST_CASE("the planted As1 demo fails exactly once, with the point as witness") {
  SuiteReport r = run_suite("as1-violation-demo", small_options());
  REQUIRE(r.failures.size() == 1);
  ParseResult witness = parse_document(r.failures[0].witness_json);
  REQUIRE(witness.ok());
  CHECK(witness.document->category()->n_objects() == 1);
  CHECK(witness.document->category()->n_morphisms() == 1);
  // failures reproduce deterministically from the embedded witness
  CHECK(replay_failure("as1-violation-demo", r.failures[0]));
}

TEST_CASE("sweep failures replay from their witnesses") {
  // plant a failure by running carfibr against a corrupted witness: take any
  // passing functor and check that replay returns false for it
  SuiteReport r = run_suite("carfibr-equivalence", small_options());
  CHECK(r.ok());
  // build a witness for a passing instance by hand: the identity on Δ1
  FinCatPtr d1 = share(ordinal(1));
  SuiteFailure fake;
  fake.witness_json = [] {
    nlohmann::json j;
    FinCat d1c = ordinal(1);
    j["A"] = nlohmann::json::parse(serialize_category(d1c));
    j["B"] = nlohmann::json::parse(serialize_category(d1c));
    nlohmann::json om, mm;
    for (const auto& o : d1c.objects) om[o] = o;
    for (const auto& m : d1c.morphisms) mm[m] = m;
    j["u"] = {{"object_map", om}, {"morphism_map", mm}};
    return j.dump();
  }();
  CHECK_FALSE(replay_failure("carfibr-equivalence", fake));
}

TEST_CASE("reports serialize to JSON") {
  SuiteReport r = run_suite("monoid-count", small_options());
  CHECK(r.ok());
  std::string json_text = report_to_json(r);
  auto j = nlohmann::json::parse(json_text);
  CHECK(j["suite"] == "monoid-count");
  CHECK(j["failures"].is_array());
  CHECK(j.contains("instances"));
  CHECK(j.contains("seed"));
}

TEST_CASE("functor-space budget produces recorded skips") {
  SuiteOptions opt = small_options();
  opt.functor_budget = 3;  // essentially everything is skipped
  SuiteReport r = run_suite("carfibr-equivalence", opt);
  CHECK(!r.skips.empty());
  CHECK(r.ok());
}

TEST_CASE("the prefibration witness is found and replays") {
  SuiteReport r = run_suite("prefibration-witness", small_options());
  REQUIRE(r.ok());
  REQUIRE(r.skips.size() == 1);
  const std::string& entry = r.skips[0];
  REQUIRE(entry.rfind("witness:", 0) == 0);
  auto j = nlohmann::json::parse(entry.substr(8));
  ParseResult a = parse_document(j["A"].dump());
  ParseResult b = parse_document(j["B"].dump());
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(a.document->category()->n_objects() <= 4);
}

TEST_CASE("every registered suite passes at desk-small bounds") {
  // excludes the demo suite, which is designed to fail
  for (const auto& info : suite_registry()) {
    if (info.name == "as1-violation-demo") continue;
    SuiteReport r = run_suite(info.name, small_options());
    INFO("suite: ", info.name);
    CHECK(r.ok());
    CHECK(r.instances > 0);
  }
}
