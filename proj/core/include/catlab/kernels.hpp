#pragma once

#include "catlab/functor.hpp"

// Allocation-free evaluators for the predicates the exhaustive sweeps hammer.
// Each function transcribes its characterization's quantifier structure
// directly onto (A, B, u) index data; the construction-based operations in
// fibration.hpp remain the reference, and the kernel-vs-library suite asserts
// agreement over the full small-bounds corpus.

namespace catlab::kernel {

enum class Structure { Minimal, Nonempty };

// Slices A/b all have a final object (minimal) / are nonempty.
bool aspheric_functor(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u);

// has_right_adjoint == aspheric_functor(Minimal, ...), kept as its own entry
// point for readability at call sites.
inline bool has_right_adjoint(const FinCat& a, const FinCat& b, const FunctorData& u) {
  return aspheric_functor(Structure::Minimal, a, b, u);
}

bool prefibration(const FinCat& a, const FinCat& b, const FunctorData& u);
bool fibration(const FinCat& a, const FinCat& b, const FunctorData& u);
bool precofibration(const FinCat& a, const FinCat& b, const FunctorData& u);
bool cofibration(const FinCat& a, const FinCat& b, const FunctorData& u);

// The fiber of u over b, as a category, is a member of the structure.
bool fiber_is_member(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u,
                     Idx ob);

// The four weak-smoothness characterizations, as independent transcriptions.
bool weakly_smooth_a(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u);
bool weakly_smooth_b(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u);
bool weakly_smooth_c(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u);
bool weakly_smooth_d(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u);

// Fibration characterization (d): every Δ1 -> Δ2 base change of u yields a
// functor with a right adjoint.
bool carfibr_d(const FinCat& a, const FinCat& b, const FunctorData& u);

// Every induced A/x -> B/u(x) invertible.
bool local_isomorphism(const FinCat& a, const FinCat& b, const FunctorData& u);

// Fully faithful and essentially surjective.
bool equivalence(const FinCat& a, const FinCat& b, const FunctorData& u);

// Every induced A/x -> B/u(x) aspheric.
bool locally_aspheric(Structure s, const FinCat& a, const FinCat& b, const FunctorData& u);

}  // namespace catlab::kernel
