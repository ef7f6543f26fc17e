#include "catlab/asphericity.hpp"

#include <stdexcept>

#include "catlab/constructions.hpp"

namespace catlab {

const AsphericityStructure& minimal_structure() {
  static const AsphericityStructure s{
      "minimal", [](const FinCat& c) { return has_final_object(c); }};
  return s;
}

const AsphericityStructure& nonempty_structure() {
  static const AsphericityStructure s{
      "nonempty", [](const FinCat& c) { return c.n_objects() > 0; }};
  return s;
}

const AsphericityStructure& structure_by_name(const std::string& name) {
  if (name == "minimal") return minimal_structure();
  if (name == "nonempty") return nonempty_structure();
  throw Error(ErrorCode::IllTyped, "unknown asphericity structure '" + name + "'");
}

bool is_aspheric(const AsphericityStructure& s, const FinCat& c) { return s.member(c); }

bool is_aspheric_functor(const AsphericityStructure& s, const FinFunctor& u) {
  for (Idx b = 0; b < u.target->n_objects(); ++b)
    if (!s.member(*slice(u, b).cat)) return false;
  return true;
}

bool is_locally_aspheric(const AsphericityStructure& s, const FinFunctor& u) {
  bool by_source = true;
  for (Idx a = 0; a < u.source->n_objects() && by_source; ++a)
    by_source = is_aspheric_functor(s, induced_local_functor(u, a));
  // Equivalent slice-by-slice test: every u/b: A/b -> B/b is itself locally
  // aspheric ((A/b)/(x,s) ≅ A/x and (B/b)/(u(x),s) ≅ B/u(x)).
  bool by_target = true;
  for (Idx b = 0; b < u.target->n_objects() && by_target; ++b) {
    FinFunctor ub = induced_slice_functor(u, b);
    for (Idx x = 0; x < ub.source->n_objects() && by_target; ++x)
      by_target = is_aspheric_functor(s, induced_local_functor(ub, x));
  }
  if (by_source != by_target)
    throw std::logic_error("is_locally_aspheric: the two equivalent tests disagree");
  return by_source;
}

bool is_local_isomorphism(const FinFunctor& u) {
  for (Idx a = 0; a < u.source->n_objects(); ++a) {
    FinFunctor local = induced_local_functor(u, a);
    if (local.source->n_objects() != local.target->n_objects() ||
        local.source->n_morphisms() != local.target->n_morphisms())
      return false;
    std::vector<bool> obj_hit(local.target->n_objects(), false);
    for (Idx x : local.object_map) {
      if (obj_hit[x]) return false;
      obj_hit[x] = true;
    }
    std::vector<bool> mor_hit(local.target->n_morphisms(), false);
    for (Idx f : local.morphism_map) {
      if (mor_hit[f]) return false;
      mor_hit[f] = true;
    }
  }
  return true;
}

AxiomReport check_structure_axioms(const AsphericityStructure& s,
                                   const std::vector<FinCatPtr>& cats,
                                   const std::vector<FunctorInstance>& functors) {
  AxiomReport report;
  for (std::size_t i = 0; i < cats.size(); ++i) {
    if (has_final_object(*cats[i]) && !s.member(*cats[i]))
      report.as1_counterexamples.push_back("cat[" + std::to_string(i) + "]");
  }
  for (const auto& inst : functors) {
    const FinFunctor& u = inst.functor;
    if (!s.member(*u.target)) continue;
    bool all_slices = true;
    for (Idx b = 0; b < u.target->n_objects() && all_slices; ++b)
      all_slices = s.member(*slice(u, b).cat);
    if (all_slices && !s.member(*u.source)) report.as2_counterexamples.push_back(inst.key);
  }
  return report;
}

}  // namespace catlab
