#pragma once

#include <string>
#include <vector>

#include "catlab/adjunction.hpp"
#include "catlab/constructions.hpp"

namespace catlab {

// An object (A, A -> I) of Cat/I.
struct OverCategoryObject {
  FinCatPtr total;
  FinFunctor structure;  // total -> index
};

// Θ_I: (A, A -> I) -> (i -> A/i), arrows acting by postcomposition.
CatDiagram theta(FinCatPtr index, const OverCategoryObject& x);

// Θ'_I: F -> (∫F, ∫F -> I).
OverCategoryObject theta_prime(const CatDiagram& f);

// Counit component ε_{F,i}: (∫(F∘w))/i -> F(i),
// (j,a,p: w(j)->i) -> F(p)(a), morphisms (l,f) -> F(p')(f).
FinFunctor epsilon_component(const FinFunctor& w, const CatDiagram& f, Idx i);

// Unit component η_{(A,v)}: A -> ∫(j -> A/w(j)),
// a -> (v(a), a, 1_{wv(a)}).
struct EtaResult {
  CatDiagram target_diagram;       // j -> A/w(j)
  GrothendieckResult target_total; // its Grothendieck construction
  FinFunctor eta;                  // A -> ∫(target_diagram)
};
EtaResult eta_component(const FinFunctor& w, const OverCategoryObject& x);

// w_! F = Θ_I ∘ Cat/w ∘ Θ'_J applied to F: (w_!F)(i) = (∫F over J) sliced
// over i along w∘P_F.
CatDiagram shriek(const FinFunctor& w, const CatDiagram& f);

// Base change component κ at b': (∫(F∘top))/b' -> (∫F)/w(b') for a cartesian
// square (u: A->B right leg, w: B'->B bottom leg, top: apex->A) and F over A.
FinFunctor kappa(const CartesianSquare& square, const CatDiagram& f, Idx b_prime);

// ---- the key-lemma factorization ------------------------------------------------

struct LemmeclefData {
  CatDiagram h;                  // H over ∫G with H(i,b) = F(i)/b
  GrothendieckResult total_g;    // ∫G
  GrothendieckResult total_f;    // ∫F
  FinCatPtr total_h;             // ∫H, objects "i#b#a#p"
  FinFunctor p_h;                // ∫H -> ∫G
  FinFunctor s;                  // ∫F -> ∫H
  FinFunctor r;                  // ∫H -> ∫F
  NatTrans epsilon;              // SR -> 1
  FinFunctor integral_u;         // ∫u: ∫F -> ∫G
};

struct LemmeclefReport {
  bool ph_after_s_is_integral_u;   // P_H∘S = ∫u, bit-exact
  bool rs_is_identity;             // RS = 1_{∫F}, bit-exact
  bool r_right_adjoint_to_s;       // (S, R, 1, ε) passes verify_adjunction
  bool aspheric_conclusion;        // all u_i minimal-aspheric => ∫u minimal-aspheric
  bool ok() const {
    return ph_after_s_is_integral_u && rs_is_identity && r_right_adjoint_to_s &&
           aspheric_conclusion;
  }
};

LemmeclefData build_lemmeclef(const DiagramMorphism& u);
LemmeclefReport verify_lemmeclef(const DiagramMorphism& u);

// ∫(Fw) realizes the pullback of (P_F, w), bit-exact under the canonical
// identifier translation (j,a) -> (w(j),a).
bool verify_cartint(const FinFunctor& w, const CatDiagram& f);

}  // namespace catlab
