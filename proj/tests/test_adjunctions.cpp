#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catlab/adjunction.hpp"
#include "catlab/constructions.hpp"
#include "catlab/enumeration.hpp"

using namespace catlab;

namespace {

FinFunctor endpoint(Idx eps) {
  FinCatPtr e = share(terminal_category());
  FinCatPtr d1 = share(ordinal(1));
  FinFunctor f{e, d1, {eps}, {d1->identity[eps]}};
  return f;
}

}  // namespace

TEST_CASE("right adjoint detection on the endpoints") {
  CHECK(has_right_adjoint(identity_functor(share(ordinal(2)))));
  CHECK(has_right_adjoint(endpoint(0)));
  CHECK_FALSE(has_right_adjoint(endpoint(1)));
  CHECK(has_left_adjoint(endpoint(1)));
  CHECK_FALSE(has_left_adjoint(endpoint(0)));
}

TEST_CASE("construct_right_adjoint on the identity") {
  FinCatPtr d1 = share(ordinal(1));
  auto adj = construct_right_adjoint(identity_functor(d1));
  REQUIRE(adj.has_value());
  CHECK(functor_equal(adj->right, identity_functor(d1)));
  CHECK(verify_adjunction(*adj).ok);
}

TEST_CASE("construct_right_adjoint of the initial endpoint") {
  auto adj = construct_right_adjoint(endpoint(0));
  REQUIRE(adj.has_value());
  // the right adjoint is the unique functor Δ1 -> e
  CHECK(adj->right.object_map == std::vector<Idx>{0, 0});
  CHECK(verify_adjunction(*adj).ok);
  CHECK_FALSE(construct_right_adjoint(endpoint(1)).has_value());
}

TEST_CASE("verify_adjunction flags a perturbed counit") {
  // identity adjunction on the 2-element idempotent monoid, counit replaced by
  // the non-identity endomorphism
  FinCatPtr m = share(monoid_category(2, {0, 1, 1, 1}));
  auto adj = construct_right_adjoint(identity_functor(m));
  REQUIRE(adj.has_value());
  REQUIRE(verify_adjunction(*adj).ok);
  Adjunction broken = *adj;
  broken.counit.components[0] = *m->morphism_index("m1");
  AdjunctionCheck check = verify_adjunction(broken);
  CHECK_FALSE(check.ok);
  CHECK_FALSE(check.first_violation.empty());
}

TEST_CASE("equivalences") {
  FinCatPtr d1 = share(ordinal(1));
  CHECK(is_equivalence(identity_functor(d1)));
  CHECK_FALSE(is_equivalence(endpoint(0)));

  // e into the two-object category with a unique isomorphism pair
  RawCategory raw;
  raw.objects = {"a", "b"};
  raw.morphisms = {{"f", "a", "b"}, {"g", "b", "a"}};
  raw.compose = {{"g", "f", "id_a"}, {"f", "g", "id_b"}};
  FinCatPtr iso_pair = share(make_category(raw));
  FinCatPtr e = share(terminal_category());
  FinFunctor incl{e, iso_pair, {0}, {iso_pair->identity[0]}};
  REQUIRE(functor_laws_hold(*e, *iso_pair, incl.data()));
  CHECK(is_equivalence(incl));
  CHECK(is_fully_faithful(incl));
  CHECK(is_essentially_surjective(incl));
  // equivalences admit adjoints on both sides
  CHECK(has_right_adjoint(incl));
  CHECK(has_left_adjoint(incl));
}

TEST_CASE("detection, construction and verification agree over the corpus") {
  auto cats = enumerate_categories(2, 3);
  std::vector<FinCatPtr> ps;
  for (auto& c : cats) ps.push_back(share(std::move(c)));
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const FinFunctor& u : enumerate_functors(a, b)) {
        bool detected = has_right_adjoint(u);
        auto adj = construct_right_adjoint(u);
        CHECK(detected == adj.has_value());
        if (adj) CHECK(verify_adjunction(*adj).ok);
      }
}

TEST_CASE("equivalence implies adjoints on both sides over the corpus") {
  auto cats = enumerate_categories(2, 4);
  std::vector<FinCatPtr> ps;
  for (auto& c : cats) ps.push_back(share(std::move(c)));
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const FinFunctor& u : enumerate_functors(a, b))
        if (is_equivalence(u)) {
          CHECK(has_right_adjoint(u));
          CHECK(has_left_adjoint(u));
        }
}
