#include "catlab/suites.hpp"

#include <chrono>
#include <mutex>

#include <json.hpp>

#include "catlab/format.hpp"
#include "catlab/parallel.hpp"
#include "suites_internal.hpp"

namespace catlab {

namespace detail {

namespace {
std::map<std::string, SuiteDef>& mutable_table() {
  static std::map<std::string, SuiteDef> table;
  return table;
}
std::once_flag g_registered;
void ensure_registered() {
  std::call_once(g_registered, [] {
    register_sweep_suites();
    register_relational_suites();
    register_kan_suites();
    register_oracle_suites();
  });
}
}  // namespace

void register_suite(SuiteDef def) { mutable_table()[def.name] = std::move(def); }

const std::map<std::string, SuiteDef>& suite_table() {
  ensure_registered();
  return mutable_table();
}

const std::vector<FinCatPtr>& cached_corpus(int max_objects, int max_morphisms) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<FinCatPtr>> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{max_objects, max_morphisms};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<FinCatPtr> cats;
  for (auto& c : enumerate_categories(max_objects, max_morphisms))
    cats.push_back(share(std::move(c)));
  return cache.emplace(key, std::move(cats)).first->second;
}

std::string functor_witness_json(const FinCat& a, const FinCat& b, const FunctorData& u,
                                 const std::string& extra_note) {
  nlohmann::json j;
  j["A"] = nlohmann::json::parse(serialize_category(a));
  j["B"] = nlohmann::json::parse(serialize_category(b));
  nlohmann::json om = nlohmann::json::object(), mm = nlohmann::json::object();
  for (Idx o = 0; o < a.n_objects(); ++o) om[a.objects[o]] = b.objects[u.object_map[o]];
  for (Idx f = 0; f < a.n_morphisms(); ++f)
    mm[a.morphisms[f]] = b.morphisms[u.morphism_map[f]];
  j["u"] = {{"object_map", om}, {"morphism_map", mm}};
  if (!extra_note.empty()) j["note"] = extra_note;
  return j.dump();
}

bool decode_functor_witness(const std::string& witness, FinCat& a, FinCat& b, FunctorData& u) {
  auto j = nlohmann::json::parse(witness, nullptr, false);
  if (j.is_discarded()) return false;
  ParseResult pa = parse_document(j["A"].dump());
  ParseResult pb = parse_document(j["B"].dump());
  if (!pa.ok() || !pb.ok()) return false;
  a = *pa.document->category();
  b = *pb.document->category();
  u.object_map.assign(a.n_objects(), kNoIdx);
  u.morphism_map.assign(a.n_morphisms(), kNoIdx);
  for (const auto& [k, v] : j["u"]["object_map"].items()) {
    auto s = a.object_index(k);
    auto t = b.object_index(v.get<std::string>());
    if (!s || !t) return false;
    u.object_map[*s] = *t;
  }
  for (const auto& [k, v] : j["u"]["morphism_map"].items()) {
    auto s = a.morphism_index(k);
    auto t = b.morphism_index(v.get<std::string>());
    if (!s || !t) return false;
    u.morphism_map[*s] = *t;
  }
  for (Idx o : u.object_map)
    if (o == kNoIdx) return false;
  for (Idx f : u.morphism_map)
    if (f == kNoIdx) return false;
  return true;
}

std::string functor_key(std::size_t ai, std::size_t bi, const FunctorData& u) {
  std::string key = "A#" + std::to_string(ai) + "|B#" + std::to_string(bi) + "|u@";
  for (Idx o : u.object_map) key += std::to_string(o) + ".";
  key += "/";
  for (Idx f : u.morphism_map) key += std::to_string(f) + ".";
  return key;
}

}  // namespace detail

std::vector<SuiteInfo> suite_registry() {
  std::vector<SuiteInfo> out;
  for (const auto& [name, def] : detail::suite_table()) out.push_back({name, def.checks});
  return out;
}

bool suite_exists(const std::string& name) {
  return detail::suite_table().count(name) > 0;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
  const auto& table = detail::suite_table();
  auto it = table.find(name);
  if (it == table.end())
    throw Error(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport report = it->second.run(options);
  report.suite = name;
  report.seed = options.seed;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

bool replay_failure(const std::string& suite, const SuiteFailure& failure) {
  const auto& table = detail::suite_table();
  auto it = table.find(suite);
  if (it == table.end() || !it->second.replay)
    throw Error(ErrorCode::UnknownSuite, "no replay for suite '" + suite + "'");
  return it->second.replay(failure.witness_json);
}

std::string report_to_json(const SuiteReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["instances"] = report.instances;
  j["seed"] = report.seed;
  j["wall_ms"] = report.wall_ms;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures) {
    nlohmann::json fj;
    fj["instance"] = f.instance_key;
    fj["message"] = f.message;
    fj["witness"] = f.witness_json.empty()
                        ? nlohmann::json()
                        : nlohmann::json::parse(f.witness_json, nullptr, false);
    j["failures"].push_back(fj);
  }
  j["skips"] = report.skips;
  return j.dump(2) + "\n";
}

}  // namespace catlab
