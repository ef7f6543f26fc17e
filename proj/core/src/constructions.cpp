#include "catlab/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <numeric>
#include <tuple>

namespace catlab {

namespace {

std::string join2(const std::string& a, const std::string& b, char sep) {
  std::string out;
  out.reserve(a.size() + b.size() + 1);
  out += a;
  out += sep;
  out += b;
  return out;
}

// Shared slice-category assembly. Objects (a, p: u(a)->c); morphisms are
// pairs (f, target) with p_src = p_tgt ∘ u(f).
struct SliceCat {
  FinCat cat;
  std::vector<std::pair<Idx, Idx>> obj_pairs;          // (a, p)
  std::vector<std::pair<Idx, Idx>> mor_pairs;          // (f, target slice object)
  std::vector<Idx> obj_lookup;                          // a * mC + p -> slice object
  std::vector<Idx> mor_lookup;                          // f * n_slice_obj + tgt -> slice morphism

  Idx object_of(Idx a, Idx p) const { return obj_lookup[a * stride + p]; }
  Idx morphism_of(Idx f, Idx tgt_obj) const {
    return mor_lookup[std::size_t(f) * obj_pairs.size() + tgt_obj];
  }
  std::size_t stride = 0;
};

SliceCat build_slice(const FinCat& a, const FinCat& c, const FunctorData& u, Idx obj) {
  SliceCat s;
  const Idx mc = c.n_morphisms();
  s.stride = mc;
  s.obj_lookup.assign(std::size_t(a.n_objects()) * std::max<std::size_t>(mc, 1), kNoIdx);
  for (Idx x = 0; x < a.n_objects(); ++x)
    for (Idx p = 0; p < mc; ++p)
      if (c.src[p] == u.object_map[x] && c.tgt[p] == obj) {
        s.obj_lookup[x * s.stride + p] = static_cast<Idx>(s.obj_pairs.size());
        s.obj_pairs.push_back({x, p});
        s.cat.objects.push_back(join2(a.objects[x], c.morphisms[p], '|'));
      }

  const std::size_t n_obj = s.obj_pairs.size();
  s.cat.identity.assign(n_obj, kNoIdx);
  s.mor_lookup.assign(std::size_t(a.n_morphisms()) * std::max<std::size_t>(n_obj, 1), kNoIdx);
  for (Idx f = 0; f < a.n_morphisms(); ++f) {
    Idx uf = u.morphism_map[f];
    for (Idx t = 0; t < n_obj; ++t) {
      auto [a1, p1] = s.obj_pairs[t];
      if (a1 != a.tgt[f]) continue;
      Idx p0 = c.compose(p1, uf);  // structure arrow of the source
      Idx sobj = s.object_of(a.src[f], p0);
      // source object always exists: p0: u(src f) -> obj
      Idx mid = static_cast<Idx>(s.mor_pairs.size());
      s.mor_lookup[std::size_t(f) * n_obj + t] = mid;
      s.mor_pairs.push_back({f, t});
      s.cat.morphisms.push_back(join2(a.morphisms[f], s.cat.objects[t], '|'));
      s.cat.src.push_back(sobj);
      s.cat.tgt.push_back(t);
      if (f == a.identity[a1]) s.cat.identity[t] = mid;
    }
  }
  const std::size_t m = s.mor_pairs.size();
  s.cat.comp.assign(m * m, kNoIdx);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (s.cat.tgt[f] != s.cat.src[g]) continue;
      Idx comp_f = a.compose(s.mor_pairs[g].first, s.mor_pairs[f].first);
      s.cat.comp[g * m + f] = s.morphism_of(comp_f, s.mor_pairs[g].second);
    }
  return s;
}

// Dual assembly: objects (a, p: c -> u(a)); morphisms keyed by (f, source).
struct CosliceCat {
  FinCat cat;
  std::vector<std::pair<Idx, Idx>> obj_pairs;  // (a, p)
  std::vector<std::pair<Idx, Idx>> mor_pairs;  // (f, source coslice object)
  std::vector<Idx> obj_lookup;
  std::vector<Idx> mor_lookup;
  std::size_t stride = 0;

  Idx object_of(Idx a, Idx p) const { return obj_lookup[a * stride + p]; }
  Idx morphism_of(Idx f, Idx src_obj) const {
    return mor_lookup[std::size_t(f) * obj_pairs.size() + src_obj];
  }
};

CosliceCat build_coslice(const FinCat& a, const FinCat& c, const FunctorData& u, Idx obj) {
  CosliceCat s;
  const Idx mc = c.n_morphisms();
  s.stride = mc;
  s.obj_lookup.assign(std::size_t(a.n_objects()) * std::max<std::size_t>(mc, 1), kNoIdx);
  for (Idx x = 0; x < a.n_objects(); ++x)
    for (Idx p = 0; p < mc; ++p)
      if (c.src[p] == obj && c.tgt[p] == u.object_map[x]) {
        s.obj_lookup[x * s.stride + p] = static_cast<Idx>(s.obj_pairs.size());
        s.obj_pairs.push_back({x, p});
        s.cat.objects.push_back(join2(a.objects[x], c.morphisms[p], '|'));
      }
  const std::size_t n_obj = s.obj_pairs.size();
  s.cat.identity.assign(n_obj, kNoIdx);
  s.mor_lookup.assign(std::size_t(a.n_morphisms()) * std::max<std::size_t>(n_obj, 1), kNoIdx);
  for (Idx f = 0; f < a.n_morphisms(); ++f) {
    Idx uf = u.morphism_map[f];
    for (Idx src_obj = 0; src_obj < n_obj; ++src_obj) {
      auto [a0, p0] = s.obj_pairs[src_obj];
      if (a0 != a.src[f]) continue;
      Idx p1 = c.compose(uf, p0);  // structure arrow of the target
      Idx tobj = s.object_of(a.tgt[f], p1);
      Idx mid = static_cast<Idx>(s.mor_pairs.size());
      s.mor_lookup[std::size_t(f) * n_obj + src_obj] = mid;
      s.mor_pairs.push_back({f, static_cast<Idx>(src_obj)});
      s.cat.morphisms.push_back(join2(a.morphisms[f], s.cat.objects[tobj], '|'));
      s.cat.src.push_back(static_cast<Idx>(src_obj));
      s.cat.tgt.push_back(tobj);
      if (f == a.identity[a0]) s.cat.identity[src_obj] = mid;
    }
  }
  const std::size_t m = s.mor_pairs.size();
  s.cat.comp.assign(m * m, kNoIdx);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (s.cat.tgt[f] != s.cat.src[g]) continue;
      Idx comp_f = a.compose(s.mor_pairs[g].first, s.mor_pairs[f].first);
      s.cat.comp[g * m + f] = s.morphism_of(comp_f, s.mor_pairs[f].second);
    }
  return s;
}

}  // namespace

SliceResult slice(const FinFunctor& u, Idx c) {
  if (c >= u.target->n_objects())
    throw Error(ErrorCode::UnknownObject, "slice: object index out of range");
  const FinCat& a = *u.source;
  const FinCat& t = *u.target;
  SliceCat sc = build_slice(a, t, u.data(), c);
  SliceResult out;
  out.cat = share(std::move(sc.cat));

  FinFunctor proj;
  proj.source = out.cat;
  proj.target = u.source;
  for (auto [x, p] : sc.obj_pairs) proj.object_map.push_back(x);
  for (auto [f, tgt] : sc.mor_pairs) proj.morphism_map.push_back(f);
  out.projection = std::move(proj);

  SliceCat base = build_slice(t, t, identity_functor(u.target).data(), c);
  FinFunctor structural;
  structural.source = out.cat;
  structural.target = share(std::move(base.cat));
  for (auto [x, p] : sc.obj_pairs)
    structural.object_map.push_back(base.object_of(u.object_map[x], p));
  for (auto [f, tg] : sc.mor_pairs) {
    auto [a1, p1] = sc.obj_pairs[tg];
    structural.morphism_map.push_back(
        base.morphism_of(u.morphism_map[f], base.object_of(u.object_map[a1], p1)));
  }
  out.structural = std::move(structural);
  out.object_pairs = std::move(sc.obj_pairs);
  out.morphism_pairs = std::move(sc.mor_pairs);
  return out;
}

CosliceResult coslice(const FinFunctor& u, Idx c) {
  if (c >= u.target->n_objects())
    throw Error(ErrorCode::UnknownObject, "coslice: object index out of range");
  CosliceCat sc = build_coslice(*u.source, *u.target, u.data(), c);
  CosliceResult out;
  out.cat = share(std::move(sc.cat));
  FinFunctor proj;
  proj.source = out.cat;
  proj.target = u.source;
  for (auto [x, p] : sc.obj_pairs) proj.object_map.push_back(x);
  for (auto [f, so] : sc.mor_pairs) proj.morphism_map.push_back(f);
  out.projection = std::move(proj);
  out.object_pairs = std::move(sc.obj_pairs);
  out.morphism_pairs = std::move(sc.mor_pairs);
  return out;
}

FiberResult fiber(const FinFunctor& u, Idx b) {
  if (b >= u.target->n_objects())
    throw Error(ErrorCode::UnknownObject, "fiber: object index out of range");
  const FinCat& a = *u.source;
  const Idx idb = u.target->identity[b];
  FinCat f;
  std::vector<Idx> objs, mors;
  std::vector<Idx> obj_back(a.n_objects(), kNoIdx);
  for (Idx x = 0; x < a.n_objects(); ++x)
    if (u.object_map[x] == b) {
      obj_back[x] = static_cast<Idx>(objs.size());
      objs.push_back(x);
      f.objects.push_back(a.objects[x]);
    }
  std::vector<Idx> mor_back(a.n_morphisms(), kNoIdx);
  for (Idx m = 0; m < a.n_morphisms(); ++m)
    if (u.morphism_map[m] == idb) {
      mor_back[m] = static_cast<Idx>(mors.size());
      mors.push_back(m);
      f.morphisms.push_back(a.morphisms[m]);
      f.src.push_back(obj_back[a.src[m]]);
      f.tgt.push_back(obj_back[a.tgt[m]]);
    }
  f.identity.resize(objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) f.identity[i] = mor_back[a.identity[objs[i]]];
  const std::size_t m = mors.size();
  f.comp.assign(m * m, kNoIdx);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      if (f.tgt[h] == f.src[g]) f.comp[g * m + h] = mor_back[a.compose(mors[g], mors[h])];

  FiberResult out;
  out.cat = share(std::move(f));
  FinFunctor inc;
  inc.source = out.cat;
  inc.target = u.source;
  inc.object_map = objs;
  inc.morphism_map = mors;
  out.inclusion = std::move(inc);
  return out;
}

FinFunctor induced_slice_functor(const FinFunctor& u, Idx b) {
  if (b >= u.target->n_objects())
    throw Error(ErrorCode::UnknownObject, "induced_slice_functor: object index out of range");
  const FinCat& a = *u.source;
  const FinCat& t = *u.target;
  SliceCat sa = build_slice(a, t, u.data(), b);
  SliceCat sb = build_slice(t, t, identity_functor(u.target).data(), b);
  FinFunctor out;
  out.source = share(std::move(sa.cat));
  out.target = share(std::move(sb.cat));
  for (auto [x, p] : sa.obj_pairs) out.object_map.push_back(sb.object_of(u.object_map[x], p));
  for (auto [f, tg] : sa.mor_pairs) {
    auto [a1, p1] = sa.obj_pairs[tg];
    out.morphism_map.push_back(
        sb.morphism_of(u.morphism_map[f], sb.object_of(u.object_map[a1], p1)));
  }
  return out;
}

FinFunctor induced_local_functor(const FinFunctor& u, Idx a_obj) {
  const FinCat& a = *u.source;
  const FinCat& b = *u.target;
  if (a_obj >= a.n_objects())
    throw Error(ErrorCode::UnknownObject, "induced_local_functor: object index out of range");
  SliceCat sa = build_slice(a, a, identity_functor(u.source).data(), a_obj);
  SliceCat sb = build_slice(b, b, identity_functor(u.target).data(), u.object_map[a_obj]);
  FinFunctor out;
  out.source = share(std::move(sa.cat));
  out.target = share(std::move(sb.cat));
  for (auto [x, p] : sa.obj_pairs)
    out.object_map.push_back(sb.object_of(u.object_map[x], u.morphism_map[p]));
  for (auto [f, tg] : sa.mor_pairs) {
    auto [x1, p1] = sa.obj_pairs[tg];
    out.morphism_map.push_back(sb.morphism_of(
        u.morphism_map[f], sb.object_of(u.object_map[x1], u.morphism_map[p1])));
  }
  return out;
}

// ---- pullback -----------------------------------------------------------------

CartesianSquare pullback(const FinFunctor& u, const FinFunctor& w) {
  if (!(*u.target == *w.target))
    throw Error(ErrorCode::TargetMismatch, "pullback: functors do not share a target");
  const FinCat& a = *u.source;
  const FinCat& bp = *w.source;

  FinCat apex;
  std::vector<std::pair<Idx, Idx>> obj_pairs, mor_pairs;
  std::vector<Idx> obj_lookup(std::size_t(bp.n_objects()) * std::max<Idx>(a.n_objects(), 1),
                              kNoIdx);
  for (Idx b = 0; b < bp.n_objects(); ++b)
    for (Idx x = 0; x < a.n_objects(); ++x)
      if (w.object_map[b] == u.object_map[x]) {
        obj_lookup[std::size_t(b) * a.n_objects() + x] = static_cast<Idx>(obj_pairs.size());
        obj_pairs.push_back({b, x});
        apex.objects.push_back(join2(bp.objects[b], a.objects[x], '&'));
      }
  std::vector<Idx> mor_lookup(std::size_t(bp.n_morphisms()) * std::max<Idx>(a.n_morphisms(), 1),
                              kNoIdx);
  apex.identity.assign(obj_pairs.size(), kNoIdx);
  for (Idx g = 0; g < bp.n_morphisms(); ++g)
    for (Idx f = 0; f < a.n_morphisms(); ++f)
      if (w.morphism_map[g] == u.morphism_map[f]) {
        Idx mid = static_cast<Idx>(mor_pairs.size());
        mor_lookup[std::size_t(g) * a.n_morphisms() + f] = mid;
        mor_pairs.push_back({g, f});
        apex.morphisms.push_back(join2(bp.morphisms[g], a.morphisms[f], '&'));
        Idx so = obj_lookup[std::size_t(bp.src[g]) * a.n_objects() + a.src[f]];
        Idx to = obj_lookup[std::size_t(bp.tgt[g]) * a.n_objects() + a.tgt[f]];
        apex.src.push_back(so);
        apex.tgt.push_back(to);
        if (g == bp.identity[bp.src[g]] && f == a.identity[a.src[f]]) apex.identity[so] = mid;
      }
  const std::size_t m = mor_pairs.size();
  apex.comp.assign(m * m, kNoIdx);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t f = 0; f < m; ++f) {
      if (apex.tgt[f] != apex.src[g]) continue;
      Idx cg = bp.compose(mor_pairs[g].first, mor_pairs[f].first);
      Idx cf = a.compose(mor_pairs[g].second, mor_pairs[f].second);
      apex.comp[g * m + f] = mor_lookup[std::size_t(cg) * a.n_morphisms() + cf];
    }

  CartesianSquare sq;
  sq.u = u;
  sq.w = w;
  sq.apex = share(std::move(apex));
  FinFunctor up, v;
  up.source = sq.apex;
  up.target = w.source;
  v.source = sq.apex;
  v.target = u.source;
  for (auto [b, x] : obj_pairs) {
    up.object_map.push_back(b);
    v.object_map.push_back(x);
  }
  for (auto [g, f] : mor_pairs) {
    up.morphism_map.push_back(g);
    v.morphism_map.push_back(f);
  }
  sq.u_prime = std::move(up);
  sq.v = std::move(v);
  return sq;
}

// ---- comma square ----------------------------------------------------------------

TwoSquare comma_square(const FinFunctor& u, const FinFunctor& w) {
  if (!(*u.target == *w.target))
    throw Error(ErrorCode::TargetMismatch, "comma_square: functors do not share a target");
  const FinCat& a = *u.source;
  const FinCat& bp = *w.source;
  const FinCat& b = *u.target;

  FinCat comma;
  // object key: (b', x, g)
  std::map<std::tuple<Idx, Idx, Idx>, Idx> obj_lookup;
  std::vector<std::tuple<Idx, Idx, Idx>> obj_triples;
  for (Idx bo = 0; bo < bp.n_objects(); ++bo)
    for (Idx x = 0; x < a.n_objects(); ++x)
      for (Idx g = 0; g < b.n_morphisms(); ++g)
        if (b.src[g] == w.object_map[bo] && b.tgt[g] == u.object_map[x]) {
          obj_lookup[{bo, x, g}] = static_cast<Idx>(obj_triples.size());
          obj_triples.push_back({bo, x, g});
          comma.objects.push_back(join2(join2(bp.objects[bo], a.objects[x], '#'),
                                        b.morphisms[g], '#'));
        }

  std::map<std::tuple<Idx, Idx, Idx, Idx>, Idx> mor_lookup;  // (g', f, g_src, g_tgt)
  std::vector<std::tuple<Idx, Idx, Idx, Idx>> mor_quads;
  comma.identity.assign(obj_triples.size(), kNoIdx);
  for (Idx gp = 0; gp < bp.n_morphisms(); ++gp)
    for (Idx f = 0; f < a.n_morphisms(); ++f)
      for (Idx g0 = 0; g0 < b.n_morphisms(); ++g0) {
        if (b.src[g0] != w.object_map[bp.src[gp]] || b.tgt[g0] != u.object_map[a.src[f]])
          continue;
        for (Idx g1 = 0; g1 < b.n_morphisms(); ++g1) {
          if (b.src[g1] != w.object_map[bp.tgt[gp]] || b.tgt[g1] != u.object_map[a.tgt[f]])
            continue;
          if (b.compose(g1, w.morphism_map[gp]) != b.compose(u.morphism_map[f], g0)) continue;
          Idx so = obj_lookup.at({bp.src[gp], a.src[f], g0});
          Idx to = obj_lookup.at({bp.tgt[gp], a.tgt[f], g1});
          Idx mid = static_cast<Idx>(mor_quads.size());
          mor_lookup[{gp, f, g0, g1}] = mid;
          mor_quads.push_back({gp, f, g0, g1});
          comma.morphisms.push_back(join2(join2(bp.morphisms[gp], a.morphisms[f], '#'),
                                          join2(b.morphisms[g0], b.morphisms[g1], '|'), '|'));
          comma.src.push_back(so);
          comma.tgt.push_back(to);
          if (gp == bp.identity[bp.src[gp]] && f == a.identity[a.src[f]] && g0 == g1)
            comma.identity[so] = mid;
        }
      }
  const std::size_t m = mor_quads.size();
  comma.comp.assign(m * m, kNoIdx);
  for (std::size_t g2 = 0; g2 < m; ++g2)
    for (std::size_t g1i = 0; g1i < m; ++g1i) {
      if (comma.tgt[g1i] != comma.src[g2]) continue;
      auto [gpa, fa, ga0, ga1] = mor_quads[g1i];
      auto [gpb, fb, gb0, gb1] = mor_quads[g2];
      comma.comp[g2 * m + g1i] =
          mor_lookup.at({bp.compose(gpb, gpa), a.compose(fb, fa), ga0, gb1});
    }

  TwoSquare out;
  out.u = u;
  out.w = w;
  out.comma = share(std::move(comma));
  FinFunctor u0, v0;
  u0.source = out.comma;
  u0.target = w.source;
  v0.source = out.comma;
  v0.target = u.source;
  for (auto [bo, x, g] : obj_triples) {
    u0.object_map.push_back(bo);
    v0.object_map.push_back(x);
  }
  for (auto [gp, f, g0, g1] : mor_quads) {
    u0.morphism_map.push_back(gp);
    v0.morphism_map.push_back(f);
  }
  out.u0 = std::move(u0);
  out.v0 = std::move(v0);

  NatTrans alpha;
  alpha.source = compose_functors(w, out.u0);
  alpha.target = compose_functors(u, out.v0);
  for (auto [bo, x, g] : obj_triples) alpha.components.push_back(g);
  out.alpha = std::move(alpha);
  return out;
}

FinFunctor pullback_to_comma(const CartesianSquare& sq, const TwoSquare& two) {
  const FinCat& apex = *sq.apex;
  const FinCat& comma = *two.comma;
  const FinCat& b = *sq.u.target;
  FinFunctor out;
  out.source = sq.apex;
  out.target = two.comma;
  for (Idx o = 0; o < apex.n_objects(); ++o) {
    Idx bo = sq.u_prime.object_map[o];
    Idx x = sq.v.object_map[o];
    Idx g = b.identity[sq.u.object_map[x]];
    std::string name = join2(join2(two.w.source->objects[bo], sq.u.source->objects[x], '#'),
                             b.morphisms[g], '#');
    auto idx = comma.object_index(name);
    if (!idx) throw std::logic_error("pullback_to_comma: comparison object not found");
    out.object_map.push_back(*idx);
  }
  const FinCat& a_cat = *sq.u.source;
  for (Idx m = 0; m < apex.n_morphisms(); ++m) {
    Idx gp = sq.u_prime.morphism_map[m];
    Idx f = sq.v.morphism_map[m];
    Idx g0 = b.identity[sq.u.object_map[a_cat.src[f]]];
    Idx g1 = b.identity[sq.u.object_map[a_cat.tgt[f]]];
    std::string name = join2(join2(two.w.source->morphisms[gp], a_cat.morphisms[f], '#'),
                             join2(b.morphisms[g0], b.morphisms[g1], '|'), '|');
    auto idx = comma.morphism_index(name);
    if (!idx) throw std::logic_error("pullback_to_comma: comparison morphism not found");
    out.morphism_map.push_back(*idx);
  }
  return out;
}

// ---- Grothendieck construction -------------------------------------------------------

GrothendieckResult grothendieck(const CatDiagram& f) {
  const FinCat& idx = *f.index;
  FinCat total;
  // objects (i, a), i-major
  std::vector<std::pair<Idx, Idx>> objs;
  std::vector<std::size_t> obj_base(idx.n_objects() + 1, 0);
  for (Idx i = 0; i < idx.n_objects(); ++i) {
    obj_base[i] = objs.size();
    const FinCat& fi = f.value(i);
    for (Idx a = 0; a < fi.n_objects(); ++a) {
      objs.push_back({i, a});
      total.objects.push_back(join2(idx.objects[i], fi.objects[a], '#'));
    }
  }
  obj_base[idx.n_objects()] = objs.size();
  auto obj_of = [&](Idx i, Idx a) { return static_cast<Idx>(obj_base[i] + a); };

  // morphisms (k, src a, g: F(k)(a) -> a'), ordered (k, a, g)
  struct Mor { Idx k, a, g; };
  std::vector<Mor> mors;
  std::map<std::tuple<Idx, Idx, Idx>, Idx> mor_lookup;
  total.identity.assign(objs.size(), kNoIdx);
  for (Idx k = 0; k < idx.n_morphisms(); ++k) {
    Idx i = idx.src[k], j = idx.tgt[k];
    const FinCat& fi = f.value(i);
    const FinCat& fj = f.value(j);
    const FinFunctor& fk = f.at_arrow[k];
    for (Idx a = 0; a < fi.n_objects(); ++a) {
      Idx fka = fk.object_map[a];
      for (Idx g = 0; g < fj.n_morphisms(); ++g) {
        if (fj.src[g] != fka) continue;
        Idx mid = static_cast<Idx>(mors.size());
        mor_lookup[{k, a, g}] = mid;
        mors.push_back({k, a, g});
        total.morphisms.push_back(
            join2(join2(idx.morphisms[k], fj.morphisms[g], '#'), total.objects[obj_of(i, a)], '|'));
        total.src.push_back(obj_of(i, a));
        total.tgt.push_back(obj_of(j, fj.tgt[g]));
        if (k == idx.identity[i] && g == fj.identity[fka])
          total.identity[obj_of(i, a)] = mid;
      }
    }
  }
  const std::size_t m = mors.size();
  total.comp.assign(m * m, kNoIdx);
  for (std::size_t n2 = 0; n2 < m; ++n2)
    for (std::size_t n1 = 0; n1 < m; ++n1) {
      if (total.tgt[n1] != total.src[n2]) continue;
      const Mor& m1 = mors[n1];  // (k, a, g)
      const Mor& m2 = mors[n2];  // (k', a', g'), a' = tgt of g
      Idx k2k1 = idx.compose(m2.k, m1.k);
      const FinCat& fj2 = f.value(idx.tgt[m2.k]);
      Idx gcomp = fj2.compose(m2.g, f.at_arrow[m2.k].morphism_map[m1.g]);
      total.comp[n2 * m + n1] = mor_lookup.at({k2k1, m1.a, gcomp});
    }

  GrothendieckResult out;
  out.total = share(std::move(total));
  FinFunctor proj;
  proj.source = out.total;
  proj.target = f.index;
  for (auto [i, a] : objs) proj.object_map.push_back(i);
  for (const Mor& mm : mors) proj.morphism_map.push_back(mm.k);
  out.projection = std::move(proj);
  return out;
}

GrothendieckKeys grothendieck_keys(const CatDiagram& d) {
  GrothendieckKeys keys;
  const FinCat& idx = *d.index;
  for (Idx i = 0; i < idx.n_objects(); ++i)
    for (Idx a = 0; a < d.value(i).n_objects(); ++a) {
      keys.object_index[{i, a}] = static_cast<Idx>(keys.object_of.size());
      keys.object_of.push_back({i, a});
    }
  for (Idx k = 0; k < idx.n_morphisms(); ++k) {
    Idx i = idx.src[k], j = idx.tgt[k];
    const FinCat& fj = d.value(j);
    for (Idx a = 0; a < d.value(i).n_objects(); ++a) {
      Idx fka = d.at_arrow[k].object_map[a];
      for (Idx g = 0; g < fj.n_morphisms(); ++g)
        if (fj.src[g] == fka) {
          keys.morphism_index[{k, a, g}] = static_cast<Idx>(keys.morphism_of.size());
          keys.morphism_of.push_back({k, a, g});
        }
    }
  }
  return keys;
}

FinFunctor grothendieck_map(const DiagramMorphism& u, const GrothendieckResult& total_f,
                            const GrothendieckResult& total_g) {
  const FinCat& idx = *u.source.index;
  GrothendieckKeys kf = grothendieck_keys(u.source);
  GrothendieckKeys kg = grothendieck_keys(u.target);
  FinFunctor out;
  out.source = total_f.total;
  out.target = total_g.total;
  out.object_map.reserve(kf.object_of.size());
  for (auto [i, a] : kf.object_of)
    out.object_map.push_back(kg.object_index.at({i, u.components[i].object_map[a]}));
  out.morphism_map.reserve(kf.morphism_of.size());
  for (auto [k, a, g] : kf.morphism_of) {
    Idx i = idx.src[k], j = idx.tgt[k];
    out.morphism_map.push_back(kg.morphism_index.at(
        {k, u.components[i].object_map[a], u.components[j].morphism_map[g]}));
  }
  return out;
}

// ---- added final object ---------------------------------------------------------------

AddFinalResult add_final(const FinCat& c) {
  FinCat out;
  out.objects = c.objects;
  out.objects.push_back("⋆");
  const Idx star = static_cast<Idx>(out.objects.size() - 1);
  out.morphisms = c.morphisms;
  out.src = c.src;
  out.tgt = c.tgt;
  for (Idx x = 0; x < c.n_objects(); ++x) {
    out.morphisms.push_back("!" + c.objects[x]);
    out.src.push_back(x);
    out.tgt.push_back(star);
  }
  out.morphisms.push_back("id_⋆");
  out.src.push_back(star);
  out.tgt.push_back(star);
  const Idx m_old = c.n_morphisms();
  const Idx id_star = static_cast<Idx>(out.morphisms.size() - 1);
  auto bang = [&](Idx x) { return static_cast<Idx>(m_old + x); };
  out.identity = c.identity;
  out.identity.push_back(id_star);

  const std::size_t m = out.morphisms.size();
  out.comp.assign(m * m, kNoIdx);
  for (Idx g = 0; g < m_old; ++g)
    for (Idx f = 0; f < m_old; ++f)
      if (c.tgt[f] == c.src[g]) out.comp[g * m + f] = c.compose(g, f);
  for (Idx f = 0; f < m_old; ++f) out.comp[bang(c.tgt[f]) * m + f] = bang(c.src[f]);
  for (Idx x = 0; x < c.n_objects(); ++x) out.comp[id_star * m + bang(x)] = bang(x);
  out.comp[id_star * m + id_star] = id_star;

  AddFinalResult res;
  res.cat = share(std::move(out));
  FinFunctor inc;
  inc.source = share(FinCat(c));
  inc.target = res.cat;
  inc.object_map.resize(c.n_objects());
  inc.morphism_map.resize(c.n_morphisms());
  std::iota(inc.object_map.begin(), inc.object_map.end(), 0);
  std::iota(inc.morphism_map.begin(), inc.morphism_map.end(), 0);
  res.inclusion = std::move(inc);
  return res;
}

// ---- lift category ---------------------------------------------------------------------

FinCat lift_category(const FinFunctor& u, Idx g, Idx a1) {
  const FinCat& a = *u.source;
  const FinCat& b = *u.target;
  if (g >= b.n_morphisms()) throw Error(ErrorCode::UnknownMorphism, "lift_category: bad arrow");
  if (a1 >= a.n_objects()) throw Error(ErrorCode::UnknownObject, "lift_category: bad object");
  if (u.object_map[a1] != b.tgt[g])
    throw Error(ErrorCode::FiberMismatch, "lift_category: object is not over the arrow target");
  const Idx id_b0 = b.identity[b.src[g]];

  FinCat out;
  std::vector<Idx> objs;  // arrows f: x -> a1 with u(f) = g
  std::vector<Idx> obj_back(a.n_morphisms(), kNoIdx);
  for (Idx f = 0; f < a.n_morphisms(); ++f)
    if (a.tgt[f] == a1 && u.morphism_map[f] == g) {
      obj_back[f] = static_cast<Idx>(objs.size());
      objs.push_back(f);
      out.objects.push_back(a.morphisms[f]);
    }
  // morphisms (h, f'): h vertical over id_b0 with src f = f'∘h
  struct LMor { Idx h, fp; };
  std::vector<LMor> mors;
  std::vector<Idx> mor_lookup(std::size_t(a.n_morphisms()) * std::max<std::size_t>(objs.size(), 1),
                              kNoIdx);
  out.identity.assign(objs.size(), kNoIdx);
  for (Idx h = 0; h < a.n_morphisms(); ++h) {
    if (u.morphism_map[h] != id_b0) continue;
    for (std::size_t t = 0; t < objs.size(); ++t) {
      Idx fp = objs[t];
      if (a.src[fp] != a.tgt[h]) continue;
      Idx f_src = a.compose(fp, h);
      // f_src is over g automatically; it is an object of the lift category
      Idx so = obj_back[f_src];
      Idx mid = static_cast<Idx>(mors.size());
      mor_lookup[std::size_t(h) * objs.size() + t] = mid;
      mors.push_back({h, static_cast<Idx>(t)});
      out.morphisms.push_back(join2(a.morphisms[h], a.morphisms[fp], '|'));
      out.src.push_back(so);
      out.tgt.push_back(static_cast<Idx>(t));
      if (h == a.identity[a.src[fp]]) out.identity[t] = mid;
    }
  }
  const std::size_t m = mors.size();
  out.comp.assign(m * m, kNoIdx);
  for (std::size_t m2 = 0; m2 < m; ++m2)
    for (std::size_t m1 = 0; m1 < m; ++m1) {
      if (out.tgt[m1] != out.src[m2]) continue;
      Idx h = a.compose(mors[m2].h, mors[m1].h);
      out.comp[m2 * m + m1] = mor_lookup[std::size_t(h) * objs.size() + mors[m2].fp];
    }
  return out;
}

// ---- C0 / C1 / C2 ------------------------------------------------------------------------

TripleIso c0_c1_c2(const FinFunctor& u, const FinFunctor& w, Idx b0_prime, Idx a1, Idx g) {
  if (!(*u.target == *w.target))
    throw Error(ErrorCode::IllTyped, "c0_c1_c2: functors do not share a target");
  const FinCat& b = *u.target;
  if (b0_prime >= w.source->n_objects() || a1 >= u.source->n_objects() || g >= b.n_morphisms())
    throw Error(ErrorCode::IllTyped, "c0_c1_c2: index out of range");
  if (b.src[g] != w.object_map[b0_prime] || b.tgt[g] != u.object_map[a1])
    throw Error(ErrorCode::IllTyped, "c0_c1_c2: arrow does not match the chosen objects");

  TripleIso out;

  // C0 = A'/(b'0, a1, g) via the canonical functor A' -> A'_0.
  CartesianSquare sq = pullback(u, w);
  TwoSquare two = comma_square(u, w);
  FinFunctor canonical = pullback_to_comma(sq, two);
  std::string target_name =
      join2(join2(w.source->objects[b0_prime], u.source->objects[a1], '#'), b.morphisms[g], '#');
  Idx comma_obj = *two.comma->object_index(target_name);
  out.c0 = slice(canonical, comma_obj).cat;

  // C1 = (A'/a1)/(b'0, g) via the left leg A'/a1 -> B'/b1,
  // ((b',x), f) -> (b', u(f)).
  FinFunctor id_w_src = identity_functor(w.source);
  {
    SliceCat sa = build_slice(*sq.apex, *u.source, sq.v.data(), a1);
    SliceCat sb = build_slice(*w.source, b, w.data(), b.tgt[g]);
    FinFunctor leg;
    leg.source = share(std::move(sa.cat));
    leg.target = share(std::move(sb.cat));
    for (auto [apex_obj, f] : sa.obj_pairs) {
      Idx bprime_obj = sq.u_prime.object_map[apex_obj];
      leg.object_map.push_back(sb.object_of(bprime_obj, u.morphism_map[f]));
    }
    for (auto [apex_mor, tg] : sa.mor_pairs) {
      auto [apex_obj1, f1] = sa.obj_pairs[tg];
      Idx gp = sq.u_prime.morphism_map[apex_mor];
      leg.morphism_map.push_back(
          sb.morphism_of(gp, sb.object_of(sq.u_prime.object_map[apex_obj1], u.morphism_map[f1])));
    }
    Idx target_obj = sb.object_of(b0_prime, g);
    out.c1 = slice(leg, target_obj).cat;
  }

  // C2 = A''/a'1 from the (B'/b'0)* picture.
  {
    SliceCat bp_over = build_slice(*w.source, *w.source, id_w_src.data(), b0_prime);
    FinCat bp_cat = bp_over.cat;  // B'/b'0
    AddFinalResult starred = add_final(bp_cat);
    // t: (B'/b'0)* -> B
    FinFunctor t;
    t.source = starred.cat;
    t.target = u.target;
    const Idx n_plain = static_cast<Idx>(bp_cat.n_objects());
    for (Idx o = 0; o < n_plain; ++o) {
      auto [bo, q] = bp_over.obj_pairs[o];
      t.object_map.push_back(w.object_map[bo]);
      (void)q;
    }
    t.object_map.push_back(b.tgt[g]);  // ⋆ -> b1
    const Idx m_plain = bp_cat.n_morphisms();
    for (Idx mo = 0; mo < m_plain; ++mo) {
      auto [hp, tg] = bp_over.mor_pairs[mo];
      t.morphism_map.push_back(w.morphism_map[hp]);
      (void)tg;
    }
    for (Idx o = 0; o < n_plain; ++o) {
      auto [bo, q] = bp_over.obj_pairs[o];
      // !o: (b', q) -> ⋆ maps to g ∘ w(q): w(b') -> b1
      t.morphism_map.push_back(b.compose(g, w.morphism_map[q]));
      (void)bo;
    }
    t.morphism_map.push_back(b.identity[b.tgt[g]]);  // id_⋆ -> id_b1

    CartesianSquare outer = pullback(u, t);  // Ā' over (B'/b'0)*
    // inclusion B'/b'0 -> (B'/b'0)*
    CartesianSquare inner = pullback(outer.u_prime, starred.inclusion);
    // a'1 = object of Ā' over (⋆, a1)
    Idx star_obj = static_cast<Idx>(starred.cat->n_objects() - 1);
    Idx a1_bar = kNoIdx;
    for (Idx o = 0; o < outer.apex->n_objects(); ++o)
      if (outer.u_prime.object_map[o] == star_obj && outer.v.object_map[o] == a1) {
        a1_bar = o;
        break;
      }
    if (a1_bar == kNoIdx) throw Error(ErrorCode::IllTyped, "c0_c1_c2: a'1 not found");
    out.c2 = slice(inner.v, a1_bar).cat;
  }

  auto i01 = find_isomorphism(*out.c0, *out.c1);
  auto i12 = find_isomorphism(*out.c1, *out.c2);
  if (!i01 || !i12)
    throw Error(ErrorCode::IllTyped, "c0_c1_c2: expected isomorphisms not found");
  out.c0_to_c1 = *i01;
  out.c1_to_c2 = *i12;
  return out;
}

}  // namespace catlab
