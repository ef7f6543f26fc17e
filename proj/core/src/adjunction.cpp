#include "catlab/adjunction.hpp"

#include <algorithm>

#include "catlab/constructions.hpp"

namespace catlab {

bool has_right_adjoint(const FinFunctor& u) {
  for (Idx b = 0; b < u.target->n_objects(); ++b)
    if (!has_final_object(*slice(u, b).cat)) return false;
  return true;
}

bool has_left_adjoint(const FinFunctor& u) { return has_right_adjoint(opposite_functor(u)); }

std::optional<Adjunction> construct_right_adjoint(const FinFunctor& u) {
  const FinCat& a = *u.source;
  const FinCat& b = *u.target;

  std::vector<Idx> vb(b.n_objects());         // v(b)
  std::vector<Idx> counit_at(b.n_objects());  // p0: u(v(b)) -> b
  for (Idx ob = 0; ob < b.n_objects(); ++ob) {
    SliceResult sl = slice(u, ob);
    const FinCat& sc = *sl.cat;
    // All final objects; pick the lexicographically least identifier.
    Idx chosen = kNoIdx;
    for (Idx t = 0; t < sc.n_objects(); ++t) {
      bool is_final = true;
      for (Idx x = 0; x < sc.n_objects() && is_final; ++x) {
        int count = 0;
        for (Idx f = 0; f < sc.n_morphisms(); ++f)
          if (sc.src[f] == x && sc.tgt[f] == t) ++count;
        is_final = (count == 1);
      }
      if (is_final && (chosen == kNoIdx || sc.objects[t] < sc.objects[chosen])) chosen = t;
    }
    if (chosen == kNoIdx) return std::nullopt;
    vb[ob] = sl.object_pairs[chosen].first;
    counit_at[ob] = sl.object_pairs[chosen].second;
  }

  // Unique arrow into the chosen final object with a prescribed structure map.
  auto unique_into = [&](Idx from_a, Idx structure, Idx tob) -> Idx {
    // arrows f: from_a -> vb[tob] with counit_at[tob] ∘ u(f) = structure
    Idx found = kNoIdx;
    for (Idx f = 0; f < a.n_morphisms(); ++f) {
      if (a.src[f] != from_a || a.tgt[f] != vb[tob]) continue;
      if (b.compose(counit_at[tob], u.morphism_map[f]) != structure) continue;
      if (found != kNoIdx)
        throw Error(ErrorCode::IllTyped, "construct_right_adjoint: final object not unique");
      found = f;
    }
    if (found == kNoIdx)
      throw Error(ErrorCode::IllTyped, "construct_right_adjoint: missing universal arrow");
    return found;
  };

  FinFunctor v;
  v.source = u.target;
  v.target = u.source;
  v.object_map = vb;
  v.morphism_map.resize(b.n_morphisms());
  for (Idx q = 0; q < b.n_morphisms(); ++q)
    v.morphism_map[q] = unique_into(vb[b.src[q]], b.compose(q, counit_at[b.src[q]]), b.tgt[q]);

  Adjunction adj;
  adj.left = u;
  adj.right = v;
  adj.unit.source = identity_functor(u.source);
  adj.unit.target = compose_functors(v, u);
  adj.unit.components.resize(a.n_objects());
  for (Idx x = 0; x < a.n_objects(); ++x)
    adj.unit.components[x] = unique_into(x, b.identity[u.object_map[x]], u.object_map[x]);
  adj.counit.source = compose_functors(u, v);
  adj.counit.target = identity_functor(u.target);
  adj.counit.components = counit_at;
  return adj;
}

AdjunctionCheck verify_adjunction(const Adjunction& adj) {
  const FinFunctor& u = adj.left;
  const FinFunctor& v = adj.right;
  if (!(*u.target == *v.source) || !(*u.source == *v.target))
    return {false, "left/right functors are not composable both ways"};
  const FinCat& a = *u.source;
  const FinCat& b = *u.target;

  if (!functor_equal(adj.unit.source, identity_functor(u.source)))
    return {false, "unit source is not the identity functor"};
  if (!functor_equal(adj.unit.target, compose_functors(v, u)))
    return {false, "unit target is not v∘u"};
  if (!functor_equal(adj.counit.source, compose_functors(u, v)))
    return {false, "counit source is not u∘v"};
  if (!functor_equal(adj.counit.target, identity_functor(u.target)))
    return {false, "counit target is not the identity functor"};
  if (!naturality_holds(adj.unit)) return {false, "unit is not natural"};
  if (!naturality_holds(adj.counit)) return {false, "counit is not natural"};

  for (Idx x = 0; x < a.n_objects(); ++x) {
    Idx lhs = b.compose(adj.counit.components[u.object_map[x]],
                        u.morphism_map[adj.unit.components[x]]);
    if (lhs != b.identity[u.object_map[x]])
      return {false, "triangle (εu)(uη) fails at object '" + a.objects[x] + "'"};
  }
  for (Idx y = 0; y < b.n_objects(); ++y) {
    Idx lhs = a.compose(v.morphism_map[adj.counit.components[y]],
                        adj.unit.components[v.object_map[y]]);
    if (lhs != a.identity[v.object_map[y]])
      return {false, "triangle (vε)(ηv) fails at object '" + b.objects[y] + "'"};
  }
  return {true, ""};
}

bool is_fully_faithful(const FinFunctor& u) {
  const FinCat& a = *u.source;
  const FinCat& b = *u.target;
  for (Idx x = 0; x < a.n_objects(); ++x)
    for (Idx y = 0; y < a.n_objects(); ++y) {
      std::vector<Idx> images;
      for (Idx f = 0; f < a.n_morphisms(); ++f)
        if (a.src[f] == x && a.tgt[f] == y) images.push_back(u.morphism_map[f]);
      std::sort(images.begin(), images.end());
      if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
      std::size_t hom_b = 0;
      for (Idx g = 0; g < b.n_morphisms(); ++g)
        if (b.src[g] == u.object_map[x] && b.tgt[g] == u.object_map[y]) ++hom_b;
      if (images.size() != hom_b) return false;
    }
  return true;
}

bool is_essentially_surjective(const FinFunctor& u) {
  const FinCat& b = *u.target;
  if (b.n_objects() == 0) return true;
  std::vector<bool> hit(b.n_objects(), false);
  for (Idx x = 0; x < u.source->n_objects(); ++x) hit[u.object_map[x]] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Idx f = 0; f < b.n_morphisms(); ++f) {
      if (!is_isomorphism_arrow(b, f)) continue;
      if (hit[b.src[f]] && !hit[b.tgt[f]]) { hit[b.tgt[f]] = true; changed = true; }
      if (hit[b.tgt[f]] && !hit[b.src[f]]) { hit[b.src[f]] = true; changed = true; }
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool is_equivalence(const FinFunctor& u) {
  return is_fully_faithful(u) && is_essentially_surjective(u);
}

}  // namespace catlab
