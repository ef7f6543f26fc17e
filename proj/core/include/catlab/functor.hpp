#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catlab/fincat.hpp"

namespace catlab {

// Maps of a functor without the category handles; the form used by the
// enumeration kernels and suites.
struct FunctorData {
  std::vector<Idx> object_map;
  std::vector<Idx> morphism_map;
  bool operator==(const FunctorData& o) const = default;
  auto operator<=>(const FunctorData& o) const = default;
};

struct FinFunctor {
  FinCatPtr source;
  FinCatPtr target;
  std::vector<Idx> object_map;    // source object -> target object
  std::vector<Idx> morphism_map;  // source morphism -> target morphism

  Idx on_object(Idx a) const { return object_map[a]; }
  Idx on_morphism(Idx f) const { return morphism_map[f]; }
  FunctorData data() const { return {object_map, morphism_map}; }
};

bool functor_equal(const FinFunctor& f, const FinFunctor& g);

FinFunctor identity_functor(FinCatPtr c);

// Same maps between the opposite categories.
FinFunctor opposite_functor(const FinFunctor& u);

// Pointwise composite g∘f; requires f.target == g.source (contents).
FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f);

// Checks functor laws exhaustively on the given maps.
bool functor_laws_hold(const FinCat& a, const FinCat& b, const FunctorData& d);

// ---- validation ----------------------------------------------------------------

struct RawFunctor {
  std::map<std::string, std::string> object_map;
  std::map<std::string, std::string> morphism_map;  // identities may be omitted
};

struct FunctorValidation {
  std::optional<FinFunctor> functor;
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

FunctorValidation validate_functor(const RawFunctor& raw, FinCatPtr source, FinCatPtr target);

FinFunctor make_functor(FinCatPtr source, FinCatPtr target,
                        std::vector<Idx> object_map, std::vector<Idx> morphism_map);

// ---- exhaustive enumeration ------------------------------------------------------

// Upper bound on the candidate space scanned when enumerating functors A -> B
// (sum over object maps of the product of compatible-image counts).
std::uint64_t functor_candidate_count(const FinCat& a, const FinCat& b);

// Exhaustive, duplicate-free, deterministically (lexicographically) ordered.
// Throws Error(BudgetExceeded) when the candidate space exceeds `budget`.
std::vector<FinFunctor> enumerate_functors(FinCatPtr a, FinCatPtr b,
                                           std::uint64_t budget = 100000);

// Callback form used by the suites; `fn` returning false stops the scan.
// Returns false iff stopped early.
bool for_each_functor(const FinCat& a, const FinCat& b,
                      const std::function<bool(const FunctorData&)>& fn);

// ---- natural transformations -----------------------------------------------------

struct NatTrans {
  FinFunctor source;  // F
  FinFunctor target;  // G, parallel to F
  std::vector<Idx> components;  // per source-cat object: morphism of target cat
};

// component(y)∘F(k) = G(k)∘component(x) for every k: x -> y.
bool naturality_holds(const NatTrans& t);

NatTrans identity_nat_trans(const FinFunctor& f);

// All natural transformations F => G, lexicographic component order.
std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g);

bool nat_trans_equal(const NatTrans& a, const NatTrans& b);

// ---- diagrams of categories -------------------------------------------------------

// A strict functor index -> Cat: objects to categories, arrows to functors.
struct CatDiagram {
  FinCatPtr index;
  std::vector<FinCatPtr> at_object;   // per index object
  std::vector<FinFunctor> at_arrow;   // per index morphism

  const FinCat& value(Idx i) const { return *at_object[i]; }
};

// at_arrow(id) is an identity functor and at_arrow(k'∘k) = at_arrow(k')∘at_arrow(k).
std::vector<Violation> validate_diagram(const CatDiagram& d);

CatDiagram constant_diagram(FinCatPtr index, FinCatPtr value);

// Reindex along w: J -> I (value(j) = d.value(w(j))).
CatDiagram compose_diagram(const CatDiagram& d, const FinFunctor& w);

// A strict diagram morphism u: F -> G: components u_i with
// G(k)∘u_i = u_j∘F(k) for every k: i -> j.
struct DiagramMorphism {
  CatDiagram source;
  CatDiagram target;
  std::vector<FinFunctor> components;  // per index object
};

std::vector<Violation> validate_diagram_morphism(const DiagramMorphism& u);

}  // namespace catlab
