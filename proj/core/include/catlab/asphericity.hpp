#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catlab/functor.hpp"

namespace catlab {

// A named decidable class of categories, intended to satisfy
//   As1: every category with a final object belongs;
//   As2: if B belongs and every slice A/b belongs, then A belongs.
struct AsphericityStructure {
  std::string name;
  std::function<bool(const FinCat&)> member;
};

// Built-ins exposed by the CLI.
const AsphericityStructure& minimal_structure();   // has a final object
const AsphericityStructure& nonempty_structure();  // has at least one object
const AsphericityStructure& structure_by_name(const std::string& name);

bool is_aspheric(const AsphericityStructure& s, const FinCat& c);

// Every slice A/b belongs to the structure.
bool is_aspheric_functor(const AsphericityStructure& s, const FinFunctor& u);

// Every induced A/a -> B/u(a) is aspheric. Also evaluates the equivalent
// slice-by-target test (u/b aspheric for every b) and asserts agreement.
bool is_locally_aspheric(const AsphericityStructure& s, const FinFunctor& u);

// Every A/a -> B/u(a) invertible.
bool is_local_isomorphism(const FinFunctor& u);

struct AxiomReport {
  std::vector<std::string> as1_counterexamples;  // category keys
  std::vector<std::string> as2_counterexamples;  // functor keys
  bool ok() const { return as1_counterexamples.empty() && as2_counterexamples.empty(); }
};

struct FunctorInstance {
  FinFunctor functor;
  std::string key;
};

// Empirical As1/As2 check over the supplied categories and functors.
AxiomReport check_structure_axioms(const AsphericityStructure& s,
                                   const std::vector<FinCatPtr>& cats,
                                   const std::vector<FunctorInstance>& functors);

}  // namespace catlab
