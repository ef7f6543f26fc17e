#pragma once

#include <optional>
#include <string>

#include "catlab/functor.hpp"

namespace catlab {

struct Adjunction {
  FinFunctor left;    // u: A -> B
  FinFunctor right;   // v: B -> A
  NatTrans unit;      // 1_A -> v∘u
  NatTrans counit;    // u∘v -> 1_B
};

// True iff slice(u,b) has a final object for every object b of the target.
bool has_right_adjoint(const FinFunctor& u);

// has_right_adjoint(opposite of u).
bool has_left_adjoint(const FinFunctor& u);

// When has_right_adjoint(u): v(b) = the final object of A/b with the
// lexicographically least identifier, unit/counit synthesized from the
// final-object witnesses. Otherwise nullopt.
std::optional<Adjunction> construct_right_adjoint(const FinFunctor& u);

struct AdjunctionCheck {
  bool ok;
  std::string first_violation;  // empty when ok
};

// Naturality of unit/counit plus both triangle identities, checked at every
// component.
AdjunctionCheck verify_adjunction(const Adjunction& adj);

// Fully faithful and essentially surjective, checked exhaustively.
bool is_equivalence(const FinFunctor& u);

bool is_fully_faithful(const FinFunctor& u);
bool is_essentially_surjective(const FinFunctor& u);

}  // namespace catlab
