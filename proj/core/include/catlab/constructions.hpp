#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "catlab/functor.hpp"

namespace catlab {

// Derived-identifier grammar (deterministic, applied by every construction):
//   slice/coslice object (a,p)        ->  "a|p"
//   slice/coslice morphism f to (a,p) ->  "f|a|p"
//   product object (a,b)              ->  "a*b"       morphism (f,g) -> "f*g"
//   pullback apex object (b',a)       ->  "b'&a"      morphism (g',f) -> "g'&f"
//   Grothendieck object (i,a)         ->  "i#a"       morphism (k,f) from (i,a) -> "k#f|i#a"
//   comma object (b',a,g)             ->  "b'#a#g"    morphism (g',f) from o -> "g'#f|<o>"
//   added final object                ->  "⋆"         new arrow x -> ⋆ -> "!x"
//   lift-category object f            ->  "f"         morphism h to f' -> "h|f'"

// ---- slices and fibers ------------------------------------------------------

struct SliceResult {
  FinCatPtr cat;           // A/c (resp. c\A)
  FinFunctor projection;   // to A
  FinFunctor structural;   // A/c -> C/c induced by u (slice only)
  std::vector<std::pair<Idx, Idx>> object_pairs;    // (object of A, structure arrow)
  std::vector<std::pair<Idx, Idx>> morphism_pairs;  // (morphism of A, target slice object)
};

// Objects (a, p: u(a)->c); morphisms f: (a,p)->(a',p') with p = p'∘u(f).
SliceResult slice(const FinFunctor& u, Idx c);

// Dual: objects (a, p: c->u(a)); morphisms f with p' = u(f)∘p.
struct CosliceResult {
  FinCatPtr cat;
  FinFunctor projection;
  std::vector<std::pair<Idx, Idx>> object_pairs;    // (object of A, structure arrow)
  std::vector<std::pair<Idx, Idx>> morphism_pairs;  // (morphism of A, source coslice object)
};
CosliceResult coslice(const FinFunctor& u, Idx c);

// Subcategory of objects over b and morphisms over id_b, with its inclusion.
struct FiberResult {
  FinCatPtr cat;
  FinFunctor inclusion;
};
FiberResult fiber(const FinFunctor& u, Idx b);

// (a,p) -> (u(a),p), commuting with the projections to B/b.
FinFunctor induced_slice_functor(const FinFunctor& u, Idx b);

// Slice-to-slice functor A/a -> B/u(a) induced by u (objects (x, p: x->a)).
FinFunctor induced_local_functor(const FinFunctor& u, Idx a);

// ---- pullback and comma square ----------------------------------------------

struct CartesianSquare {
  FinFunctor u;        // A -> B
  FinFunctor w;        // B' -> B
  FinCatPtr apex;      // B' ×_B A
  FinFunctor u_prime;  // apex -> B'
  FinFunctor v;        // apex -> A
};

// Strict pullback: objects (b',a) with w(b') = u(a), morphisms (g',f) with
// w(g') = u(f).
CartesianSquare pullback(const FinFunctor& u, const FinFunctor& w);

struct TwoSquare {
  FinFunctor u;      // A -> B
  FinFunctor w;      // B' -> B
  FinCatPtr comma;   // objects (b', a, g: w(b') -> u(a))
  FinFunctor u0;     // comma -> B'
  FinFunctor v0;     // comma -> A
  NatTrans alpha;    // w∘u0 -> u∘v0, component at (b',a,g) equal to g
};

TwoSquare comma_square(const FinFunctor& u, const FinFunctor& w);

// Canonical comparison (b',a) -> (b',a,id); injective on objects.
FinFunctor pullback_to_comma(const CartesianSquare& sq, const TwoSquare& two);

// ---- Grothendieck construction ------------------------------------------------

struct GrothendieckResult {
  FinCatPtr total;        // ∫F
  FinFunctor projection;  // P_F: ∫F -> I, (i,a) -> i
};

// Objects (i,a); morphisms (k, f: F(k)(a) -> a');
// (k',f')∘(k,f) = (k'k, f'∘F(k')(f)).
GrothendieckResult grothendieck(const CatDiagram& f);

// ∫u: ∫F -> ∫G for a diagram morphism u, (i,a) -> (i, u_i(a)).
FinFunctor grothendieck_map(const DiagramMorphism& u,
                            const GrothendieckResult& total_f,
                            const GrothendieckResult& total_g);

// Construction-order indexing of ∫F: objects by (i, local object), morphisms
// by (k, local source object, arrow of F(tgt k)).
struct GrothendieckKeys {
  std::map<std::pair<Idx, Idx>, Idx> object_index;
  std::map<std::tuple<Idx, Idx, Idx>, Idx> morphism_index;
  std::vector<std::pair<Idx, Idx>> object_of;
  std::vector<std::tuple<Idx, Idx, Idx>> morphism_of;
};
GrothendieckKeys grothendieck_keys(const CatDiagram& f);

// ---- freely added final object --------------------------------------------------

struct AddFinalResult {
  FinCatPtr cat;          // C*
  FinFunctor inclusion;   // C -> C*
};

// One new object "⋆" with exactly one arrow x -> ⋆ per object x.
AddFinalResult add_final(const FinCat& c);

// ---- lift category A(a1, g) ------------------------------------------------------

// Objects: arrows f: a -> a1 with u(f) = g; morphisms: h with u(h) = id_{src(g)}
// and f = f'∘h.
FinCat lift_category(const FinFunctor& u, Idx g, Idx a1);

// ---- the C0/C1/C2 comparison ------------------------------------------------------

struct TripleIso {
  FinCatPtr c0;  // A'/(b'0, a1, g)
  FinCatPtr c1;  // (A'/a1)/(b'0, g)
  FinCatPtr c2;  // A''/a'1
  IsoWitness c0_to_c1;
  IsoWitness c1_to_c2;
};

// Builds the three categories attached to (u, w, b'0, a1, g: w(b'0) -> u(a1))
// and returns isomorphism witnesses for C0 ≅ C1 ≅ C2.
TripleIso c0_c1_c2(const FinFunctor& u, const FinFunctor& w, Idx b0_prime, Idx a1, Idx g);

}  // namespace catlab
