#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catlab/adjunction.hpp"
#include "catlab/enumeration.hpp"
#include "catlab/fibration.hpp"
#include "catlab/kernels.hpp"

using namespace catlab;

namespace {

FinCatPtr d1_cat() { return share(ordinal(1)); }

FinFunctor endpoint(Idx eps) {
  FinCatPtr e = share(terminal_category());
  FinCatPtr d1 = d1_cat();
  return FinFunctor{e, d1, {eps}, {d1->identity[eps]}};
}

FinFunctor square_projection() {
  FinCatPtr d1 = d1_cat();
  FinCatPtr p = share(product(*d1, *d1));
  FinFunctor proj;
  proj.source = p;
  proj.target = d1;
  for (Idx o = 0; o < p->n_objects(); ++o) proj.object_map.push_back(o / 2);
  for (Idx m = 0; m < p->n_morphisms(); ++m) proj.morphism_map.push_back(m / 3);
  return proj;
}

FinFunctor to_terminal(FinCatPtr c) {
  FinCatPtr e = share(terminal_category());
  FinFunctor f;
  f.source = c;
  f.target = e;
  f.object_map.assign(c->n_objects(), 0);
  f.morphism_map.assign(c->n_morphisms(), 0);
  return f;
}

// The prefibration-that-is-not-a-fibration witness: {1,k,c,d} onto {1,z}.
FinFunctor monoid_witness() {
  FinCatPtr m4 = share(monoid_category(4, {0, 1, 2, 3, 1, 1, 2, 3, 2, 3, 3, 3, 3, 3, 3, 3}));
  FinCatPtr n2 = share(monoid_category(2, {0, 1, 1, 1}));
  return FinFunctor{m4, n2, {0}, {0, 0, 1, 1}};  // id->id, k->id, c->z, d->z
}

}  // namespace

TEST_CASE("identity arrows are cocartesian and hypercocartesian for the identity functor") {
  FinCatPtr d2 = share(ordinal(2));
  FinFunctor id = identity_functor(d2);
  for (Idx m = 0; m < d2->n_morphisms(); ++m) {
    CHECK(is_cocartesian(id, m));
    CHECK(is_hypercocartesian(id, m));
    CHECK(is_cartesian(id, m));
  }
}

TEST_CASE("cocartesian arrows in the square projection") {
  FinFunctor proj = square_projection();
  const FinCat& p = *proj.source;
  // (0→1, id_c) arrows are cocartesian; hypercocartesian too
  Idx arrow = *p.morphism_index("a01*id_0");
  CHECK(is_cocartesian(proj, arrow));
  CHECK(is_hypercocartesian(proj, arrow));
  CHECK(is_hypercocartesian(proj, *p.morphism_index("a01*id_1")));
}

TEST_CASE("the collapse Δ1 -> e has a non-cocartesian arrow") {
  FinCatPtr d1 = d1_cat();
  FinFunctor bang = to_terminal(d1);
  CHECK_FALSE(is_cocartesian(bang, *d1->morphism_index("a01")));
}

TEST_CASE("hypercocartesian implies cocartesian on every corpus arrow") {
  auto cats = enumerate_categories(2, 3);
  std::vector<FinCatPtr> ps;
  for (auto& c : cats) ps.push_back(share(std::move(c)));
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const FinFunctor& u : enumerate_functors(a, b))
        for (Idx m = 0; m < a->n_morphisms(); ++m)
          if (is_hypercocartesian(u, m)) CHECK(is_cocartesian(u, m));
}

TEST_CASE("(pre)(co)fibration recognition") {
  FinFunctor proj = square_projection();
  CHECK(is_fibration(proj));
  CHECK(is_cofibration(proj));
  CHECK(is_prefibration(proj));
  CHECK(is_precofibration(proj));
  CHECK_FALSE(is_prefibration(endpoint(1)));
  CHECK(is_fibration(identity_functor(d1_cat())));
}

TEST_CASE("fiber adjoint equivalence instances") {
  SUBCASE("identity: both true everywhere") {
    FinCatPtr d1 = d1_cat();
    for (Idx b = 0; b < 2; ++b) {
      auto ans = fiber_adjoint_equivalence(identity_functor(d1), b);
      CHECK(ans.precofibration_at);
      CHECK(ans.fiber_inclusion_has_left_adjoint);
      CHECK(ans.precofibration_at == ans.fiber_inclusion_has_left_adjoint);
    }
  }
  SUBCASE("square projection at 0: both true") {
    auto ans = fiber_adjoint_equivalence(square_projection(), 0);
    CHECK(ans.precofibration_at);
    CHECK(ans.fiber_inclusion_has_left_adjoint);
  }
  SUBCASE("the far endpoint: empty fiber against a nonempty slice, both false") {
    auto ans = fiber_adjoint_equivalence(endpoint(0), 1);
    CHECK_FALSE(ans.precofibration_at);
    CHECK_FALSE(ans.fiber_inclusion_has_left_adjoint);
  }
  SUBCASE("the near endpoint is vacuously a precofibration at 0") {
    auto ans = fiber_adjoint_equivalence(endpoint(1), 0);
    CHECK(ans.precofibration_at);
    CHECK(ans.fiber_inclusion_has_left_adjoint);
  }
  SUBCASE("the lemma holds at every object over the corpus") {
    auto cats = enumerate_categories(2, 3);
    std::vector<FinCatPtr> ps;
    for (auto& c : cats) ps.push_back(share(std::move(c)));
    for (const auto& a : ps)
      for (const auto& b : ps)
        for (const FinFunctor& u : enumerate_functors(a, b))
          for (Idx ob = 0; ob < b->n_objects(); ++ob) {
            auto ans = fiber_adjoint_equivalence(u, ob);
            CHECK(ans.precofibration_at == ans.fiber_inclusion_has_left_adjoint);
          }
  }
}

TEST_CASE("weak smoothness") {
  const auto& min = minimal_structure();
  SUBCASE("prefibrations are weakly smooth; the square projection instance") {
    CHECK(is_weakly_smooth(min, square_projection()));
    CHECK(is_weakly_smooth(nonempty_structure(), square_projection()));
  }
  SUBCASE("identity is weakly smooth") {
    CHECK(is_weakly_smooth(min, identity_functor(d1_cat())));
  }
  SUBCASE("the far endpoint is not weakly smooth for the minimal structure") {
    WeaklySmoothBreakdown br = weakly_smooth_breakdown(min, endpoint(1));
    CHECK(br.agree());
    CHECK_FALSE(br.a);
  }
}

TEST_CASE("minimal smoothness and the fibration characterization") {
  CHECK(is_smooth_minimal(square_projection()));
  CHECK_FALSE(is_smooth_minimal(endpoint(1)));
  // the slice projection is a local isomorphism, hence smooth
  SliceResult s = slice(identity_functor(d1_cat()), 1);
  CHECK(is_local_isomorphism(s.projection));
  CHECK(is_smooth_minimal(s.projection));
}

TEST_CASE("smooth verdicts") {
  SUBCASE("fibrations are proved smooth for any structure") {
    CHECK(is_smooth(minimal_structure(), square_projection(), {2, 4}).status ==
          SmoothVerdict::Status::Proved);
    CHECK(is_smooth(nonempty_structure(), square_projection(), {2, 4}).status ==
          SmoothVerdict::Status::Proved);
    CHECK(is_smooth(nonempty_structure(), identity_functor(d1_cat()), {2, 4}).status ==
          SmoothVerdict::Status::Proved);
  }
  SUBCASE("the far endpoint is refuted for the nonempty structure with a small witness") {
    SmoothVerdict v = is_smooth(nonempty_structure(), endpoint(1), {2, 4});
    REQUIRE(v.status == SmoothVerdict::Status::Refuted);
    REQUIRE(v.witness.has_value());
    // the witness reproduces through public operations
    const SmoothWitness& w = *v.witness;
    CHECK(is_aspheric_functor(nonempty_structure(), w.w));
    CartesianSquare outer = pullback(endpoint(1), w.t);
    CartesianSquare inner = pullback(outer.u_prime, w.w);
    CHECK_FALSE(is_aspheric_functor(nonempty_structure(), inner.v));
    // smallest-first search: the base is the one-object category
    CHECK(w.b2->n_objects() == 1);
  }
  SUBCASE("minimal verdicts are exact") {
    SmoothVerdict v = is_smooth(minimal_structure(), endpoint(1), {2, 4});
    CHECK(v.status == SmoothVerdict::Status::Refuted);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(has_right_adjoint(v.witness->induced));
  }
}

TEST_CASE("a prefibration that is not a fibration") {
  FinFunctor w = monoid_witness();
  REQUIRE(functor_laws_hold(*w.source, *w.target, w.data()));
  CHECK(is_prefibration(w));
  CHECK_FALSE(is_fibration(w));
  CHECK(is_weakly_smooth(minimal_structure(), w));
  CHECK_FALSE(is_smooth_minimal(w));
  // kernels agree
  CHECK(kernel::prefibration(*w.source, *w.target, w.data()));
  CHECK_FALSE(kernel::fibration(*w.source, *w.target, w.data()));
  CHECK_FALSE(kernel::carfibr_d(*w.source, *w.target, w.data()));
}

TEST_CASE("error paths") {
  FinFunctor id = identity_functor(d1_cat());
  CHECK_THROWS_AS(is_cocartesian(id, 99), Error);
  CHECK_THROWS_AS(fiber_adjoint_equivalence(id, 9), Error);
}
