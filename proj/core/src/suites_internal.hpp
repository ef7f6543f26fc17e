#pragma once

#include <functional>
#include <map>
#include <string>

#include "catlab/suites.hpp"

namespace catlab::detail {

struct SuiteDef {
  std::string name;
  std::string checks;
  std::function<SuiteReport(const SuiteOptions&)> run;
  std::function<bool(const std::string& witness_json)> replay;  // true = still fails
};

// Ordered registries assembled at static-init time.
const std::map<std::string, SuiteDef>& suite_table();
void register_suite(SuiteDef def);

// Shared caches (guarded internally).
const std::vector<FinCatPtr>& cached_corpus(int max_objects, int max_morphisms);

// Witness helpers.
std::string functor_witness_json(const FinCat& a, const FinCat& b, const FunctorData& u,
                                 const std::string& extra_note = "");
bool decode_functor_witness(const std::string& witness, FinCat& a, FinCat& b, FunctorData& u);

// Deterministic instance keys.
std::string functor_key(std::size_t ai, std::size_t bi, const FunctorData& u);

// Registration hooks implemented across translation units.
void register_sweep_suites();
void register_relational_suites();
void register_kan_suites();
void register_oracle_suites();

}  // namespace catlab::detail
