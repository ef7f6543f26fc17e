#include "catlab/kan.hpp"

#include <map>
#include <stdexcept>

namespace catlab {

namespace {

Idx slice_object_index(const SliceResult& sl, Idx a, Idx p) {
  for (Idx o = 0; o < sl.cat->n_objects(); ++o)
    if (sl.object_pairs[o] == std::pair<Idx, Idx>(a, p)) return o;
  throw std::logic_error("slice object not found");
}

Idx slice_morphism_index(const SliceResult& sl, Idx f, Idx target_obj) {
  for (Idx m = 0; m < sl.cat->n_morphisms(); ++m)
    if (sl.morphism_pairs[m] == std::pair<Idx, Idx>(f, target_obj)) return m;
  throw std::logic_error("slice morphism not found");
}

struct ThetaData {
  CatDiagram diagram;
  std::vector<SliceResult> slices;  // per index object
};

ThetaData theta_with_data(FinCatPtr index, const OverCategoryObject& x) {
  if (!(*x.structure.target == *index))
    throw Error(ErrorCode::IllTyped, "theta: structure functor does not land in the index");
  if (!(*x.structure.source == *x.total))
    throw Error(ErrorCode::IllTyped, "theta: structure functor source mismatch");
  const FinCat& idx = *index;
  ThetaData out;
  out.diagram.index = index;
  out.slices.reserve(idx.n_objects());
  for (Idx i = 0; i < idx.n_objects(); ++i) {
    out.slices.push_back(slice(x.structure, i));
    out.diagram.at_object.push_back(out.slices.back().cat);
  }
  for (Idx k = 0; k < idx.n_morphisms(); ++k) {
    const SliceResult& si = out.slices[idx.src[k]];
    const SliceResult& sj = out.slices[idx.tgt[k]];
    FinFunctor fk;
    fk.source = si.cat;
    fk.target = sj.cat;
    for (auto [a, p] : si.object_pairs)
      fk.object_map.push_back(slice_object_index(sj, a, idx.compose(k, p)));
    for (auto [f, t] : si.morphism_pairs) {
      auto [a1, p1] = si.object_pairs[t];
      fk.morphism_map.push_back(
          slice_morphism_index(sj, f, slice_object_index(sj, a1, idx.compose(k, p1))));
    }
    out.diagram.at_arrow.push_back(std::move(fk));
  }
  return out;
}

}  // namespace

CatDiagram theta(FinCatPtr index, const OverCategoryObject& x) {
  return theta_with_data(index, x).diagram;
}

OverCategoryObject theta_prime(const CatDiagram& f) {
  GrothendieckResult gr = grothendieck(f);
  return {gr.total, gr.projection};
}

FinFunctor epsilon_component(const FinFunctor& w, const CatDiagram& f, Idx i) {
  if (!(*w.target == *f.index))
    throw Error(ErrorCode::IllTyped, "epsilon_component: w does not land in the diagram index");
  if (i >= f.index->n_objects())
    throw Error(ErrorCode::IllTyped, "epsilon_component: object index out of range");
  CatDiagram fw = compose_diagram(f, w);
  GrothendieckResult gr = grothendieck(fw);
  GrothendieckKeys keys = grothendieck_keys(fw);
  SliceResult sl = slice(compose_functors(w, gr.projection), i);

  FinFunctor out;
  out.source = sl.cat;
  out.target = f.at_object[i];
  out.object_map.reserve(sl.object_pairs.size());
  for (auto [x, p] : sl.object_pairs) {
    auto [j, a] = keys.object_of[x];
    (void)j;
    out.object_map.push_back(f.at_arrow[p].object_map[a]);
  }
  out.morphism_map.reserve(sl.morphism_pairs.size());
  for (auto [m, t] : sl.morphism_pairs) {
    auto [x1, p1] = sl.object_pairs[t];
    (void)x1;
    auto [l, a, g] = keys.morphism_of[m];
    (void)l;
    (void)a;
    out.morphism_map.push_back(f.at_arrow[p1].morphism_map[g]);
  }
  if (!functor_laws_hold(*out.source, *out.target, out.data()))
    throw std::logic_error("epsilon_component: result is not a functor");
  return out;
}

EtaResult eta_component(const FinFunctor& w, const OverCategoryObject& x) {
  if (!(*x.structure.target == *w.source))
    throw Error(ErrorCode::IllTyped, "eta_component: object is not over the source of w");
  if (!(*x.structure.source == *x.total))
    throw Error(ErrorCode::IllTyped, "eta_component: malformed over-category object");
  const FinCat& a_cat = *x.total;
  const FinCat& j_cat = *w.source;
  const FinCat& i_cat = *w.target;

  FinFunctor wv = compose_functors(w, x.structure);
  ThetaData th = theta_with_data(w.target, {x.total, wv});  // i -> A/i
  CatDiagram d = compose_diagram(th.diagram, w);            // j -> A/w(j)
  GrothendieckResult gr = grothendieck(d);
  GrothendieckKeys keys = grothendieck_keys(d);

  FinFunctor eta;
  eta.source = x.total;
  eta.target = gr.total;
  eta.object_map.reserve(a_cat.n_objects());
  for (Idx a = 0; a < a_cat.n_objects(); ++a) {
    Idx j = x.structure.object_map[a];
    const SliceResult& sl = th.slices[w.object_map[j]];
    Idx local = slice_object_index(sl, a, i_cat.identity[wv.object_map[a]]);
    eta.object_map.push_back(keys.object_index.at({j, local}));
  }
  eta.morphism_map.reserve(a_cat.n_morphisms());
  for (Idx f = 0; f < a_cat.n_morphisms(); ++f) {
    Idx l = x.structure.morphism_map[f];  // v(f): j0 -> j1
    Idx j0 = j_cat.src[l], j1 = j_cat.tgt[l];
    Idx a0 = a_cat.src[f], a1 = a_cat.tgt[f];
    const SliceResult& sl0 = th.slices[w.object_map[j0]];
    const SliceResult& sl1 = th.slices[w.object_map[j1]];
    Idx src_local = slice_object_index(sl0, a0, i_cat.identity[wv.object_map[a0]]);
    Idx tgt_local = slice_object_index(sl1, a1, i_cat.identity[wv.object_map[a1]]);
    Idx g = slice_morphism_index(sl1, f, tgt_local);
    eta.morphism_map.push_back(keys.morphism_index.at({l, src_local, g}));
  }
  if (!functor_laws_hold(*eta.source, *eta.target, eta.data()))
    throw std::logic_error("eta_component: result is not a functor");
  return {std::move(d), std::move(gr), std::move(eta)};
}

CatDiagram shriek(const FinFunctor& w, const CatDiagram& f) {
  if (!(*f.index == *w.source))
    throw Error(ErrorCode::IllTyped, "shriek: diagram index differs from the source of w");
  GrothendieckResult gr = grothendieck(f);
  return theta(w.target, {gr.total, compose_functors(w, gr.projection)});
}

FinFunctor kappa(const CartesianSquare& sq, const CatDiagram& f, Idx b_prime) {
  if (!(*f.index == *sq.u.source))
    throw Error(ErrorCode::IllTyped, "kappa: diagram is not over the right-leg source");
  if (b_prime >= sq.w.source->n_objects())
    throw Error(ErrorCode::IllTyped, "kappa: object index out of range");

  CatDiagram ftop = compose_diagram(f, sq.v);
  GrothendieckResult grt = grothendieck(ftop);
  GrothendieckKeys kt = grothendieck_keys(ftop);
  GrothendieckResult grf = grothendieck(f);
  GrothendieckKeys kf = grothendieck_keys(f);

  SliceResult sl_src = slice(compose_functors(sq.u_prime, grt.projection), b_prime);
  SliceResult sl_tgt =
      slice(compose_functors(sq.u, grf.projection), sq.w.object_map[b_prime]);
  std::map<std::pair<Idx, Idx>, Idx> tgt_obj, tgt_mor;
  for (Idx o = 0; o < sl_tgt.cat->n_objects(); ++o) tgt_obj[sl_tgt.object_pairs[o]] = o;
  for (Idx m = 0; m < sl_tgt.cat->n_morphisms(); ++m) tgt_mor[sl_tgt.morphism_pairs[m]] = m;

  auto image_object = [&](Idx total_obj, Idx p) {
    auto [xa, aloc] = kt.object_of[total_obj];
    Idx img_total = kf.object_index.at({sq.v.object_map[xa], aloc});
    return tgt_obj.at({img_total, sq.w.morphism_map[p]});
  };

  FinFunctor out;
  out.source = sl_src.cat;
  out.target = sl_tgt.cat;
  for (auto [xt, p] : sl_src.object_pairs) out.object_map.push_back(image_object(xt, p));
  for (auto [mt, t] : sl_src.morphism_pairs) {
    auto [l, aloc, g] = kt.morphism_of[mt];
    Idx img_mor = kf.morphism_index.at({sq.v.morphism_map[l], aloc, g});
    auto [xt1, p1] = sl_src.object_pairs[t];
    out.morphism_map.push_back(tgt_mor.at({img_mor, image_object(xt1, p1)}));
  }
  if (!functor_laws_hold(*out.source, *out.target, out.data()))
    throw std::logic_error("kappa: result is not a functor");
  return out;
}

// ---- lemmeclef -----------------------------------------------------------------

LemmeclefData build_lemmeclef(const DiagramMorphism& u) {
  {
    auto viol = validate_diagram_morphism(u);
    if (!viol.empty())
      throw Error(ErrorCode::IllTyped, "build_lemmeclef: " + viol.front().message);
  }
  const FinCat& idx = *u.source.index;
  LemmeclefData d;
  d.total_g = grothendieck(u.target);
  d.total_f = grothendieck(u.source);
  GrothendieckKeys kg = grothendieck_keys(u.target);
  GrothendieckKeys kf = grothendieck_keys(u.source);

  // H(i,b) = F(i)/b, the slice of u_i over b.
  d.h.index = d.total_g.total;
  std::vector<SliceResult> hobj;
  hobj.reserve(kg.object_of.size());
  for (auto [i, b] : kg.object_of) hobj.push_back(slice(u.components[i], b));
  for (const auto& s : hobj) d.h.at_object.push_back(s.cat);

  const FinCat& tg = *d.total_g.total;
  for (Idx km = 0; km < tg.n_morphisms(); ++km) {
    auto [k, bloc, g] = kg.morphism_of[km];
    (void)bloc;
    Idx i1 = idx.tgt[k];
    const SliceResult& ss = hobj[tg.src[km]];
    const SliceResult& st = hobj[tg.tgt[km]];
    const FinFunctor& fk = u.source.at_arrow[k];
    const FinFunctor& gk = u.target.at_arrow[k];
    const FinCat& gi1 = u.target.value(i1);
    FinFunctor hk;
    hk.source = ss.cat;
    hk.target = st.cat;
    auto image_obj = [&](Idx a, Idx p) {
      return slice_object_index(st, fk.object_map[a], gi1.compose(g, gk.morphism_map[p]));
    };
    for (auto [a, p] : ss.object_pairs) hk.object_map.push_back(image_obj(a, p));
    for (auto [f, t] : ss.morphism_pairs) {
      auto [a1, p1] = ss.object_pairs[t];
      hk.morphism_map.push_back(
          slice_morphism_index(st, fk.morphism_map[f], image_obj(a1, p1)));
    }
    d.h.at_arrow.push_back(std::move(hk));
  }
  {
    auto viol = validate_diagram(d.h);
    if (!viol.empty()) throw std::logic_error("build_lemmeclef: H is not a strict diagram");
  }

  GrothendieckResult grh = grothendieck(d.h);
  GrothendieckKeys kh = grothendieck_keys(d.h);

  // Rename ∫H identifiers to the documented grammar: objects "i#b#a#p",
  // morphisms "k#g#f|<source object>".
  FinCat th_cat = *grh.total;
  for (Idx o = 0; o < th_cat.n_objects(); ++o) {
    auto [gobj, sloc] = kh.object_of[o];
    auto [i, bloc] = kg.object_of[gobj];
    auto [a, p] = hobj[gobj].object_pairs[sloc];
    th_cat.objects[o] = idx.objects[i] + "#" + u.target.value(i).objects[bloc] + "#" +
                        u.source.value(i).objects[a] + "#" + u.target.value(i).morphisms[p];
  }
  for (Idx m = 0; m < th_cat.n_morphisms(); ++m) {
    auto [gm, xloc, phi] = kh.morphism_of[m];
    (void)xloc;
    auto [k, bloc, g] = kg.morphism_of[gm];
    (void)bloc;
    Idx i1 = idx.tgt[k];
    Idx f_core = hobj[tg.tgt[gm]].morphism_pairs[phi].first;
    th_cat.morphisms[m] = idx.morphisms[k] + "#" + u.target.value(i1).morphisms[g] + "#" +
                          u.source.value(i1).morphisms[f_core] + "|" +
                          th_cat.objects[th_cat.src[m]];
  }
  d.total_h = share(std::move(th_cat));
  d.p_h = FinFunctor{d.total_h, d.total_g.total, grh.projection.object_map,
                     grh.projection.morphism_map};

  // S: (i,a) -> (i, u_i(a), a, 1).
  FinFunctor s;
  s.source = d.total_f.total;
  s.target = d.total_h;
  auto s_object = [&](Idx i, Idx a) {
    Idx b = u.components[i].object_map[a];
    Idx gobj = kg.object_index.at({i, b});
    Idx sloc = slice_object_index(hobj[gobj], a, u.target.value(i).identity[b]);
    return kh.object_index.at({gobj, sloc});
  };
  for (auto [i, a] : kf.object_of) s.object_map.push_back(s_object(i, a));
  for (auto [k, a, f] : kf.morphism_of) {
    Idx i = idx.src[k], i1 = idx.tgt[k];
    Idx uf = u.components[i1].morphism_map[f];
    Idx gm = kg.morphism_index.at({k, u.components[i].object_map[a], uf});
    Idx xloc = slice_object_index(hobj[kg.object_index.at({i, u.components[i].object_map[a]})],
                                  a, u.target.value(i).identity[u.components[i].object_map[a]]);
    Idx a1 = u.source.value(i1).tgt[f];
    Idx gobj1 = kg.object_index.at({i1, u.components[i1].object_map[a1]});
    Idx t1 = slice_object_index(hobj[gobj1], a1,
                                u.target.value(i1).identity[u.components[i1].object_map[a1]]);
    Idx phi = slice_morphism_index(hobj[gobj1], f, t1);
    s.morphism_map.push_back(kh.morphism_index.at({gm, xloc, phi}));
  }
  if (!functor_laws_hold(*s.source, *s.target, s.data()))
    throw std::logic_error("build_lemmeclef: S is not a functor");
  d.s = std::move(s);

  // R: (i,b,a,p) -> (i,a).
  FinFunctor r;
  r.source = d.total_h;
  r.target = d.total_f.total;
  for (auto [gobj, sloc] : kh.object_of) {
    auto [i, bloc] = kg.object_of[gobj];
    (void)bloc;
    r.object_map.push_back(kf.object_index.at({i, hobj[gobj].object_pairs[sloc].first}));
  }
  const FinCat& th = *d.total_h;
  for (Idx m = 0; m < th.n_morphisms(); ++m) {
    auto [gm, xloc, phi] = kh.morphism_of[m];
    auto [k, bloc, g] = kg.morphism_of[gm];
    (void)bloc;
    (void)g;
    Idx src_gobj = kh.object_of[th.src[m]].first;
    Idx a_src = hobj[src_gobj].object_pairs[xloc].first;
    Idx f_core = hobj[tg.tgt[gm]].morphism_pairs[phi].first;
    r.morphism_map.push_back(kf.morphism_index.at({k, a_src, f_core}));
  }
  if (!functor_laws_hold(*r.source, *r.target, r.data()))
    throw std::logic_error("build_lemmeclef: R is not a functor");
  d.r = std::move(r);

  // ε: SR -> 1 with ε_(i,b,a,p) = (1_i, p, 1_a).
  NatTrans eps;
  eps.source = compose_functors(d.s, d.r);
  eps.target = identity_functor(d.total_h);
  for (auto [gobj, sloc] : kh.object_of) {
    auto [i, bloc] = kg.object_of[gobj];
    auto [a, p] = hobj[gobj].object_pairs[sloc];
    Idx b_ua = u.components[i].object_map[a];
    Idx gm = kg.morphism_index.at({idx.identity[i], b_ua, p});
    Idx src_gobj = kg.object_index.at({i, b_ua});
    Idx xloc =
        slice_object_index(hobj[src_gobj], a, u.target.value(i).identity[b_ua]);
    Idx phi = slice_morphism_index(
        hobj[gobj], u.source.value(i).identity[a],
        slice_object_index(hobj[gobj], a, p));
    (void)bloc;
    eps.components.push_back(kh.morphism_index.at({gm, xloc, phi}));
  }
  d.epsilon = std::move(eps);

  d.integral_u = grothendieck_map(u, d.total_f, d.total_g);
  return d;
}

LemmeclefReport verify_lemmeclef(const DiagramMorphism& u) {
  LemmeclefData d = build_lemmeclef(u);
  LemmeclefReport report{};
  report.ph_after_s_is_integral_u =
      functor_equal(compose_functors(d.p_h, d.s), d.integral_u);
  report.rs_is_identity =
      functor_equal(compose_functors(d.r, d.s), identity_functor(d.total_f.total));

  Adjunction adj;
  adj.left = d.s;
  adj.right = d.r;
  adj.unit.source = identity_functor(d.total_f.total);
  adj.unit.target = compose_functors(d.r, d.s);
  for (Idx o = 0; o < d.total_f.total->n_objects(); ++o)
    adj.unit.components.push_back(d.total_f.total->identity[o]);
  adj.counit = d.epsilon;
  report.r_right_adjoint_to_s = verify_adjunction(adj).ok;

  bool all_components_radj = true;
  for (Idx i = 0; i < u.source.index->n_objects() && all_components_radj; ++i)
    all_components_radj = has_right_adjoint(u.components[i]);
  report.aspheric_conclusion = !all_components_radj || has_right_adjoint(d.integral_u);
  return report;
}

bool verify_cartint(const FinFunctor& w, const CatDiagram& f) {
  if (!(*w.target == *f.index))
    throw Error(ErrorCode::IllTyped, "verify_cartint: w does not land in the diagram index");
  CatDiagram fw = compose_diagram(f, w);
  GrothendieckResult total_fw = grothendieck(fw);
  GrothendieckKeys keys_fw = grothendieck_keys(fw);
  GrothendieckResult total_f = grothendieck(f);
  GrothendieckKeys keys_f = grothendieck_keys(f);
  CartesianSquare sq = pullback(total_f.projection, w);

  const FinCat& lhs = *total_fw.total;
  const FinCat& apex = *sq.apex;
  if (lhs.n_objects() != apex.n_objects() || lhs.n_morphisms() != apex.n_morphisms())
    return false;
  if (lhs.src != apex.src || lhs.tgt != apex.tgt || lhs.identity != apex.identity ||
      lhs.comp != apex.comp)
    return false;

  const FinCat& j_cat = *w.source;
  for (Idx o = 0; o < lhs.n_objects(); ++o) {
    auto [j, a] = keys_fw.object_of[o];
    Idx img = keys_f.object_index.at({w.object_map[j], a});
    if (apex.objects[o] != j_cat.objects[j] + "&" + total_f.total->objects[img]) return false;
  }
  for (Idx m = 0; m < lhs.n_morphisms(); ++m) {
    auto [l, a, g] = keys_fw.morphism_of[m];
    Idx img = keys_f.morphism_index.at({w.morphism_map[l], a, g});
    if (apex.morphisms[m] != j_cat.morphisms[l] + "&" + total_f.total->morphisms[img])
      return false;
  }
  return true;
}

}  // namespace catlab
