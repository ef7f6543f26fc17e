#pragma once

#include <optional>
#include <string>

#include "catlab/asphericity.hpp"
#include "catlab/constructions.hpp"

namespace catlab {

// ---- (hyper)(co)cartesian arrows ---------------------------------------------

// c: a -> a' is cocartesian for u iff every f: a -> a'' with u(f) = u(c)
// factors as f = g∘c through a unique vertical g.
bool is_cocartesian(const FinFunctor& u, Idx c);

// Quantifies over all f and all h with u(f) = h∘u(c); the unique g must
// satisfy u(g) = h and f = g∘c.
bool is_hypercocartesian(const FinFunctor& u, Idx c);

// Duals, via the opposite functor.
bool is_cartesian(const FinFunctor& u, Idx c);
bool is_hypercartesian(const FinFunctor& u, Idx c);

// ---- (pre)(co)fibrations -------------------------------------------------------

bool is_precofibration(const FinFunctor& u);
// Precofibration with cocartesians stable under composition; also evaluated
// through the hypercocartesian-lift form, agreement asserted.
bool is_cofibration(const FinFunctor& u);
bool is_prefibration(const FinFunctor& u);
bool is_fibration(const FinFunctor& u);

// (precofibration restricted at b, "A_b -> A/b has a left adjoint").
// The two booleans agree at every b (Lemma on precofibrations).
struct FiberAdjointAnswer {
  bool precofibration_at;
  bool fiber_inclusion_has_left_adjoint;
};
FiberAdjointAnswer fiber_adjoint_equivalence(const FinFunctor& u, Idx b);

// ---- smoothness -----------------------------------------------------------------

// The four equivalent characterizations of weak smoothness, evaluated
// independently:
//   (a) every fiber inclusion j_b: A_b -> b\A is aspheric;
//   (b) every induced A/a -> B/u(a) has aspheric fibers;
//   (c) pulling back along Δ0 -> Δ1 -> B yields an aspheric A'' -> A';
//   (d) every lift category A(a1,g) is aspheric.
struct WeaklySmoothBreakdown {
  bool a, b, c, d;
  bool agree() const { return a == b && b == c && c == d; }
};
WeaklySmoothBreakdown weakly_smooth_breakdown(const AsphericityStructure& s,
                                              const FinFunctor& u);

// Common value of the four conditions; throws Error(IllTyped) never, asserts
// agreement (a theorem) via std::logic_error on internal disagreement.
bool is_weakly_smooth(const AsphericityStructure& s, const FinFunctor& u);

// Exact decision for the minimal structure: for every composable pair
// (g0,g1) of the base, the functor A'' -> A' pulled back over Δ1 -> Δ2 has a
// right adjoint. Coincides with is_fibration.
bool is_smooth_minimal(const FinFunctor& u);

struct Bounds {
  int max_objects = 3;
  int max_morphisms = 6;
};

struct SmoothWitness {
  // Base-change diagram B'' -> B' -> B with w aspheric but the pulled-back
  // functor A'' -> A' not aspheric.
  FinCatPtr b2;          // B''
  FinCatPtr b1;          // B'
  FinFunctor w;          // B'' -> B'
  FinFunctor t;          // B' -> B
  FinFunctor induced;    // A'' -> A'
  std::string failing_slice_object;  // object of A' with non-member slice
};

struct SmoothVerdict {
  enum class Status { Proved, Refuted, Evidence } status;
  std::optional<SmoothWitness> witness;  // always set when Refuted
  Bounds checked_bound{};                // meaningful when Evidence
};

// Minimal structure: exact (Proved/Refuted). Other structures: Proved when u
// is a fibration, otherwise a counterexample search over base changes
// B'' -> add_final(B'') -> B with B'' drawn from the enumerated corpus within
// bounds (smallest instances first); Refuted with witness, or Evidence.
SmoothVerdict is_smooth(const AsphericityStructure& s, const FinFunctor& u,
                        const Bounds& bounds);

}  // namespace catlab
