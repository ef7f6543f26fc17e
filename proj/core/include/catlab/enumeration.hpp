#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "catlab/fibration.hpp"
#include "catlab/functor.hpp"

namespace catlab {

// ---- exhaustive generation -----------------------------------------------------

// All categories with 1..max_objects objects (exactly {∅} when max_objects is
// 0) and at most max_morphisms morphisms, complete and deduplicated up to
// isomorphism, in canonical form, deterministically ordered by
// (objects, morphisms, canonical key). Throws Error(BudgetExceeded) if more
// than `budget` categories would be produced.
std::vector<FinCat> enumerate_categories(int max_objects, int max_morphisms,
                                         std::uint64_t budget = 1u << 22);

// ---- corpus ----------------------------------------------------------------------

struct Corpus {
  std::vector<FinCatPtr> exhaustive;  // enumerate_categories(bounds)
  std::vector<FinCatPtr> curated;     // e, ∅, Δ0..Δ3, discrete(n<=3), parallel pair,
                                      // commutative square, pairwise products
  std::vector<FinCatPtr> random;      // seeded samples beyond exhaustive bounds

  // exhaustive + curated + random, deduplicated by canonical key,
  // deterministic order.
  std::vector<FinCatPtr> all() const;
};

Corpus build_corpus(const Bounds& bounds, std::uint64_t seed = 0, int random_samples = 0,
                    const Bounds& random_bounds = {4, 10});

std::vector<FinCatPtr> curated_categories();

// Seeded random category within bounds (deterministic across platforms).
FinCat random_category(std::uint64_t seed, const Bounds& bounds);

// Seeded random functor A -> B among all functors (nullopt when none exist).
std::optional<FunctorData> random_functor(std::uint64_t seed, const FinCat& a, const FinCat& b);

// ---- base-change diagram streams ----------------------------------------------------

struct BaseChangeDiagram {
  FinCatPtr b2;    // B''
  FinCatPtr b1;    // B'
  FinFunctor w;    // B'' -> B'
  FinFunctor t;    // B' -> B
};

// All composable pairs B'' -> B' -> B with B'' within bounds2, B' within
// bounds1 and every functor enumerated. Deterministic order; `fn` returning
// false stops the stream.
void enumerate_base_change_diagrams(FinCatPtr b, const Bounds& bounds2, const Bounds& bounds1,
                                    const std::function<bool(const BaseChangeDiagram&)>& fn,
                                    std::uint64_t functor_budget = 100000);

// ---- diagram enumeration -------------------------------------------------------------

// All strict diagrams over `index` with values drawn from `values`
// (functoriality enforced). Deterministic order.
std::vector<CatDiagram> enumerate_diagrams(FinCatPtr index,
                                           const std::vector<FinCatPtr>& values,
                                           std::size_t cap = 0);

// All strict diagram morphisms F -> G.
std::vector<DiagramMorphism> enumerate_diagram_morphisms(const CatDiagram& f,
                                                         const CatDiagram& g);

}  // namespace catlab
