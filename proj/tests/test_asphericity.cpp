#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catlab/adjunction.hpp"
#include "catlab/asphericity.hpp"
#include "catlab/enumeration.hpp"

using namespace catlab;

namespace {

FinFunctor endpoint(Idx eps) {
  FinCatPtr e = share(terminal_category());
  FinCatPtr d1 = share(ordinal(1));
  return FinFunctor{e, d1, {eps}, {d1->identity[eps]}};
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

}  // namespace

TEST_CASE("built-in structures on categories") {
  const auto& min = minimal_structure();
  const auto& ne = nonempty_structure();
  FinCat disc2 = discrete_category(2);
  CHECK(is_aspheric(min, terminal_category()));
  CHECK_FALSE(is_aspheric(min, disc2));
  CHECK(is_aspheric(ne, disc2));
  CHECK_FALSE(is_aspheric(ne, empty_category()));
  CHECK(structure_by_name("minimal").name == "minimal");
  CHECK_THROWS_AS(structure_by_name("bogus"), Error);
}

TEST_CASE("aspheric functors") {
  const auto& min = minimal_structure();
  FinCatPtr d2 = share(ordinal(2));
  CHECK(is_aspheric_functor(min, identity_functor(d2)));
  CHECK(is_aspheric_functor(min, endpoint(0)));
  CHECK_FALSE(is_aspheric_functor(min, endpoint(1)));
}

TEST_CASE("aspheric functor = right adjoint for the minimal structure") {
  auto cats = enumerate_categories(2, 4);
  std::vector<FinCatPtr> ps;
  for (auto& c : cats) ps.push_back(share(std::move(c)));
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const FinFunctor& u : enumerate_functors(a, b))
        CHECK(is_aspheric_functor(minimal_structure(), u) == has_right_adjoint(u));
}

TEST_CASE("locally aspheric examples") {
  const auto& min = minimal_structure();
  const auto& ne = nonempty_structure();
  SUBCASE("identities are locally aspheric") {
    FinCatPtr d2 = share(ordinal(2));
    CHECK(is_locally_aspheric(min, identity_functor(d2)));
  }
  SUBCASE("the functor to the terminal category is locally aspheric") {
    auto cats = enumerate_categories(2, 4);
    for (auto& craw : cats) {
      FinCatPtr c = share(std::move(craw));
      CHECK(is_locally_aspheric(min, to_terminal(c)));
      CHECK(is_locally_aspheric(ne, to_terminal(c)));
    }
  }
  SUBCASE("a fully faithful aspheric functor is locally aspheric") {
    CHECK(is_fully_faithful(endpoint(0)));
    CHECK(is_aspheric_functor(min, endpoint(0)));
    CHECK(is_locally_aspheric(min, endpoint(0)));
  }
  SUBCASE("the unit inclusion into a group is locally aspheric but not aspheric") {
    FinCatPtr z2 = share(monoid_category(2, {0, 1, 1, 0}));
    FinCatPtr e = share(terminal_category());
    FinFunctor unit{e, z2, {0}, {z2->identity[0]}};
    CHECK(is_locally_aspheric(min, unit));
    CHECK_FALSE(is_aspheric_functor(min, unit));
  }
}

TEST_CASE("local isomorphisms") {
  FinCatPtr d1 = share(ordinal(1));
  CHECK(is_local_isomorphism(identity_functor(d1)));
  // slice projection C/c -> C
  SliceResult s = slice(identity_functor(d1), 1);
  CHECK(is_local_isomorphism(s.projection));
  CHECK_FALSE(is_local_isomorphism(to_terminal(d1)));
}

TEST_CASE("structure axioms over the corpus") {
  auto cats = enumerate_categories(2, 3);
  std::vector<FinCatPtr> ps;
  for (auto& c : cats) ps.push_back(share(std::move(c)));
  std::vector<FunctorInstance> functors;
  for (std::size_t ai = 0; ai < ps.size(); ++ai)
    for (std::size_t bi = 0; bi < ps.size(); ++bi) {
      auto us = enumerate_functors(ps[ai], ps[bi]);
      for (std::size_t k = 0; k < us.size(); ++k)
        functors.push_back({us[k], "u[" + std::to_string(ai) + "," + std::to_string(bi) +
                                       "," + std::to_string(k) + "]"});
    }

  SUBCASE("the built-ins pass") {
    CHECK(check_structure_axioms(minimal_structure(), ps, functors).ok());
    CHECK(check_structure_axioms(nonempty_structure(), ps, functors).ok());
  }
  SUBCASE("a planted non-structure fails As1 exactly at the point") {
    AsphericityStructure planted{"at-least-2-objects",
                                 [](const FinCat& c) { return c.n_objects() >= 2; }};
    AxiomReport report = check_structure_axioms(planted, ps, functors);
    CHECK(report.as1_counterexamples.size() == 1);
  }
}
