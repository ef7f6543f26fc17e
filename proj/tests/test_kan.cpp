#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "catlab/adjunction.hpp"
#include "catlab/asphericity.hpp"
#include "catlab/enumeration.hpp"
#include "catlab/kan.hpp"

using namespace catlab;

namespace {

FinCatPtr e_cat() { return share(terminal_category()); }
FinCatPtr d1_cat() { return share(ordinal(1)); }

FinFunctor endpoint(Idx eps) {
  FinCatPtr e = e_cat();
  FinCatPtr d1 = d1_cat();
  return FinFunctor{e, d1, {eps}, {d1->identity[eps]}};
}

// I = Δ1, F(0) = e, F(1) = Δ1, F(0→1) = ∂0.
CatDiagram mixed_diagram() {
  FinCatPtr d1 = d1_cat();
  CatDiagram f;
  f.index = d1;
  f.at_object = {e_cat(), d1};
  f.at_arrow.resize(3);
  f.at_arrow[*d1->morphism_index("id_0")] = identity_functor(f.at_object[0]);
  f.at_arrow[*d1->morphism_index("id_1")] = identity_functor(f.at_object[1]);
  FinFunctor inc = endpoint(0);
  inc.source = f.at_object[0];
  inc.target = f.at_object[1];
  f.at_arrow[*d1->morphism_index("a01")] = inc;
  REQUIRE(validate_diagram(f).empty());
  return f;
}

}  // namespace

TEST_CASE("theta over the point recovers the total category") {
  FinCatPtr e = e_cat();
  FinCatPtr d1 = d1_cat();
  FinFunctor bang{d1, e, {0, 0}, {0, 0, 0}};
  CatDiagram th = theta(e, {d1, bang});
  REQUIRE(th.at_object.size() == 1);
  CHECK(are_isomorphic(*th.at_object[0], *d1));
}

TEST_CASE("theta of the identity over Δ1") {
  FinCatPtr d1 = d1_cat();
  CatDiagram th = theta(d1, {d1, identity_functor(d1)});
  CHECK(th.at_object[0]->n_objects() == 1);  // Δ1/0 is a point
  CHECK(are_isomorphic(*th.at_object[1], *d1));
  // the arrow embeds Δ1/0 into Δ1/1 as the object over the arrow
  const FinFunctor& step = th.at_arrow[*d1->morphism_index("a01")];
  REQUIRE(step.object_map.size() == 1);
  CHECK(step.target->objects[step.object_map[0]] == "0|a01");
  CHECK(validate_diagram(th).empty());
}

TEST_CASE("theta_prime is the Grothendieck construction") {
  CatDiagram f = mixed_diagram();
  OverCategoryObject x = theta_prime(f);
  CHECK(x.total->n_objects() == 3);
  CHECK(x.total->n_morphisms() == 6);
  CHECK(functor_laws_hold(*x.structure.source, *x.structure.target, x.structure.data()));
}

TEST_CASE("epsilon components") {
  FinCatPtr d1 = d1_cat();
  CatDiagram f = mixed_diagram();
  FinFunctor idw = identity_functor(d1);
  SUBCASE("constant-e diagram: the component is the unique functor to e") {
    CatDiagram c = constant_diagram(d1, e_cat());
    FinFunctor eps = epsilon_component(idw, c, 1);
    CHECK(eps.target->n_objects() == 1);
  }
  SUBCASE("components are left adjoints (verified) and minimal-aspheric") {
    for (Idx i = 0; i < 2; ++i) {
      FinFunctor eps = epsilon_component(idw, f, i);
      auto adj = construct_right_adjoint(eps);
      REQUIRE(adj.has_value());
      CHECK(verify_adjunction(*adj).ok);
      CHECK(is_aspheric_functor(minimal_structure(), eps));
      // the right adjoint is the inclusion a -> (i, a, 1_i)
      CHECK(functor_equal(adj->left, eps));
    }
  }
  SUBCASE("the inclusion is not a left adjoint of ε in the reverse orientation") {
    // ε ⊣ incl but incl ⊣ ε fails: incl has no right adjoint here
    FinFunctor eps = epsilon_component(idw, f, 1);
    auto adj = construct_right_adjoint(eps);
    REQUIRE(adj.has_value());
    CHECK_FALSE(has_right_adjoint(adj->right));
  }
}

TEST_CASE("eta components") {
  FinCatPtr d1 = d1_cat();
  SUBCASE("identity over the point is an isomorphism") {
    FinCatPtr e = e_cat();
    EtaResult eta = eta_component(identity_functor(e), {e, identity_functor(e)});
    CHECK(eta.eta.source->n_objects() == eta.eta.target->n_objects());
    CHECK(eta.eta.target->n_objects() == 1);
  }
  SUBCASE("η has a verified right adjoint and is minimal-aspheric") {
    EtaResult eta = eta_component(identity_functor(d1), {d1, identity_functor(d1)});
    auto adj = construct_right_adjoint(eta.eta);
    REQUIRE(adj.has_value());
    CHECK(verify_adjunction(*adj).ok);
    CHECK(is_aspheric_functor(minimal_structure(), eta.eta));
    // the right adjoint projects (i, a, p) back to a
    for (Idx o = 0; o < eta.eta.target->n_objects(); ++o) {
      Idx back = adj->right.object_map[o];
      CHECK(back < d1->n_objects());
    }
  }
}

TEST_CASE("shriek examples") {
  FinCatPtr d1 = d1_cat();
  FinCatPtr e = e_cat();
  SUBCASE("identity over the point is constant") {
    CatDiagram f = constant_diagram(e, e);
    CatDiagram out = shriek(identity_functor(e), f);
    CHECK(out.at_object.size() == 1);
    CHECK(are_isomorphic(*out.at_object[0], *e));
  }
  SUBCASE("pushing the point diagram forward along an endpoint") {
    CatDiagram f = constant_diagram(e, e);
    CatDiagram out = shriek(endpoint(0), f);
    REQUIRE(out.at_object.size() == 2);
    CHECK(out.at_object[0]->n_objects() == 1);
    CHECK(out.at_object[1]->n_objects() == 1);
  }
  SUBCASE("collapsing Δ1 to the point gives the total category over the point") {
    FinFunctor bang{d1, e, {0, 0}, {0, 0, 0}};
    CatDiagram f = constant_diagram(d1, e);
    CatDiagram out = shriek(bang, f);
    REQUIRE(out.at_object.size() == 1);
    CHECK(are_isomorphic(*out.at_object[0], *d1));
  }
}

TEST_CASE("kappa examples") {
  FinCatPtr d1 = d1_cat();
  SUBCASE("identity square: κ is bijective at every object") {
    FinFunctor u = identity_functor(d1);
    CartesianSquare sq = pullback(u, identity_functor(d1));
    CatDiagram f = constant_diagram(d1, e_cat());
    for (Idx b = 0; b < 2; ++b) {
      FinFunctor k = kappa(sq, f, b);
      CHECK(k.source->n_objects() == k.target->n_objects());
      CHECK(k.source->n_morphisms() == k.target->n_morphisms());
    }
  }
  SUBCASE("the endpoint square gives an isomorphism of points") {
    CartesianSquare sq = pullback(identity_functor(d1), endpoint(0));
    CatDiagram f = constant_diagram(d1, e_cat());
    FinFunctor k = kappa(sq, f, 0);
    CHECK(k.source->n_objects() == 1);
    CHECK(k.target->n_objects() == 1);
  }
}

TEST_CASE("lemmeclef verification") {
  FinCatPtr d1 = d1_cat();
  SUBCASE("identity morphism on the constant-e diagram") {
    CatDiagram f = constant_diagram(d1, e_cat());
    DiagramMorphism u{f, f, {identity_functor(f.at_object[0]), identity_functor(f.at_object[1])}};
    REQUIRE(validate_diagram_morphism(u).empty());
    LemmeclefReport r = verify_lemmeclef(u);
    CHECK(r.ph_after_s_is_integral_u);
    CHECK(r.rs_is_identity);
    CHECK(r.r_right_adjoint_to_s);
    CHECK(r.aspheric_conclusion);
  }
  SUBCASE("the inclusion family into the mixed diagram") {
    CatDiagram f = constant_diagram(d1, e_cat());
    CatDiagram g = mixed_diagram();
    auto ms = enumerate_diagram_morphisms(f, g);
    REQUIRE(!ms.empty());
    for (const auto& u : ms) CHECK(verify_lemmeclef(u).ok());
  }
  SUBCASE("the ∫H identifier grammar") {
    CatDiagram f = constant_diagram(d1, e_cat());
    DiagramMorphism u{f, f, {identity_functor(f.at_object[0]), identity_functor(f.at_object[1])}};
    LemmeclefData data = build_lemmeclef(u);
    for (const auto& name : data.total_h->objects) {
      // objects are i#b#a#p
      CHECK(std::count(name.begin(), name.end(), '#') == 3);
    }
  }
}

TEST_CASE("cartint verification") {
  FinCatPtr d1 = d1_cat();
  CatDiagram f = mixed_diagram();
  CHECK(verify_cartint(identity_functor(d1), f));
  CHECK(verify_cartint(endpoint(0), f));
  CHECK(verify_cartint(endpoint(1), f));
  // seeded random within bounds
  for (int s = 0; s < 25; ++s) {
    FinCat jc = random_category(1000 + s, {2, 4});
    FinCatPtr jp = share(std::move(jc));
    auto wd = random_functor(s, *jp, *d1);
    if (!wd) continue;
    FinFunctor w{jp, d1, wd->object_map, wd->morphism_map};
    CHECK(verify_cartint(w, f));
  }
}

TEST_CASE("theta adjunction instance for the identity") {
  // (Θ_I∘Cat/w, Θ'_J∘w*) at I = J = Δ1, w = id: check the triangles via the
  // public pieces on a concrete diagram
  FinCatPtr d1 = d1_cat();
  CatDiagram f = mixed_diagram();
  FinFunctor w = identity_functor(d1);
  GrothendieckResult gr = grothendieck(f);
  EtaResult eta = eta_component(w, {gr.total, gr.projection});
  DiagramMorphism r_eps;
  r_eps.source = eta.target_diagram;
  r_eps.target = f;
  for (Idx j = 0; j < 2; ++j) r_eps.components.push_back(epsilon_component(w, f, j));
  REQUIRE(validate_diagram_morphism(r_eps).empty());
  FinFunctor reps = grothendieck_map(r_eps, eta.target_total, gr);
  CHECK(functor_equal(compose_functors(reps, eta.eta), identity_functor(gr.total)));
}
