#include "catlab/functor.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace catlab {

bool functor_equal(const FinFunctor& f, const FinFunctor& g) {
  return *f.source == *g.source && *f.target == *g.target &&
         f.object_map == g.object_map && f.morphism_map == g.morphism_map;
}

FinFunctor identity_functor(FinCatPtr c) {
  FinFunctor f;
  f.source = c;
  f.target = c;
  f.object_map.resize(c->n_objects());
  f.morphism_map.resize(c->n_morphisms());
  std::iota(f.object_map.begin(), f.object_map.end(), 0);
  std::iota(f.morphism_map.begin(), f.morphism_map.end(), 0);
  return f;
}

FinFunctor opposite_functor(const FinFunctor& u) {
  FinFunctor o;
  o.source = share(opposite(*u.source));
  o.target = share(opposite(*u.target));
  o.object_map = u.object_map;
  o.morphism_map = u.morphism_map;
  return o;
}

FinFunctor compose_functors(const FinFunctor& g, const FinFunctor& f) {
  if (!(*f.target == *g.source))
    throw Error(ErrorCode::SourceTargetMismatch,
                "compose_functors: target of inner functor differs from source of outer");
  FinFunctor h;
  h.source = f.source;
  h.target = g.target;
  h.object_map.reserve(f.object_map.size());
  for (Idx a : f.object_map) h.object_map.push_back(g.object_map[a]);
  h.morphism_map.reserve(f.morphism_map.size());
  for (Idx m : f.morphism_map) h.morphism_map.push_back(g.morphism_map[m]);
  return h;
}

bool functor_laws_hold(const FinCat& a, const FinCat& b, const FunctorData& d) {
  const Idx ma = a.n_morphisms();
  for (Idx f = 0; f < ma; ++f) {
    Idx img = d.morphism_map[f];
    if (b.src[img] != d.object_map[a.src[f]] || b.tgt[img] != d.object_map[a.tgt[f]])
      return false;
  }
  for (Idx o = 0; o < a.n_objects(); ++o)
    if (d.morphism_map[a.identity[o]] != b.identity[d.object_map[o]]) return false;
  for (Idx g = 0; g < ma; ++g)
    for (Idx f = 0; f < ma; ++f)
      if (a.composable(g, f) &&
          d.morphism_map[a.compose(g, f)] !=
              b.compose(d.morphism_map[g], d.morphism_map[f]))
        return false;
  return true;
}

FunctorValidation validate_functor(const RawFunctor& raw, FinCatPtr source, FinCatPtr target) {
  FunctorValidation result;
  auto fail = [&](ErrorCode code, std::string msg) {
    result.violations.push_back({code, std::move(msg)});
  };
  const FinCat& a = *source;
  const FinCat& b = *target;

  std::vector<Idx> omap(a.n_objects(), kNoIdx);
  for (const auto& [from, to] : raw.object_map) {
    auto s = a.object_index(from);
    auto t = b.object_index(to);
    if (!s) { fail(ErrorCode::DanglingReference, "unknown source object '" + from + "'"); continue; }
    if (!t) { fail(ErrorCode::DanglingReference, "unknown target object '" + to + "'"); continue; }
    omap[*s] = *t;
  }
  for (Idx o = 0; o < a.n_objects(); ++o)
    if (omap[o] == kNoIdx)
      fail(ErrorCode::NotAFunctor, "object '" + a.objects[o] + "' has no image");
  if (!result.violations.empty()) return result;

  std::vector<Idx> mmap(a.n_morphisms(), kNoIdx);
  for (const auto& [from, to] : raw.morphism_map) {
    auto s = a.morphism_index(from);
    auto t = b.morphism_index(to);
    if (!s) { fail(ErrorCode::DanglingReference, "unknown source morphism '" + from + "'"); continue; }
    if (!t) { fail(ErrorCode::DanglingReference, "unknown target morphism '" + to + "'"); continue; }
    mmap[*s] = *t;
  }
  if (!result.violations.empty()) return result;

  // Identities may be left implicit.
  for (Idx o = 0; o < a.n_objects(); ++o) {
    Idx id = a.identity[o];
    if (mmap[id] == kNoIdx) mmap[id] = b.identity[omap[o]];
  }
  for (Idx f = 0; f < a.n_morphisms(); ++f)
    if (mmap[f] == kNoIdx)
      fail(ErrorCode::NotAFunctor, "morphism '" + a.morphisms[f] + "' has no image");
  if (!result.violations.empty()) return result;

  for (Idx f = 0; f < a.n_morphisms(); ++f) {
    if (b.src[mmap[f]] != omap[a.src[f]] || b.tgt[mmap[f]] != omap[a.tgt[f]]) {
      fail(ErrorCode::NotAFunctor,
           "image of '" + a.morphisms[f] + "' does not preserve src/tgt");
      return result;
    }
  }
  for (Idx o = 0; o < a.n_objects(); ++o) {
    if (mmap[a.identity[o]] != b.identity[omap[o]]) {
      fail(ErrorCode::NotAFunctor,
           "identity of '" + a.objects[o] + "' not sent to an identity");
      return result;
    }
  }
  for (Idx g = 0; g < a.n_morphisms(); ++g)
    for (Idx f = 0; f < a.n_morphisms(); ++f)
      if (a.composable(g, f) &&
          mmap[a.compose(g, f)] != b.compose(mmap[g], mmap[f])) {
        fail(ErrorCode::NotAFunctor,
             "composition not preserved on (" + a.morphisms[g] + " ∘ " + a.morphisms[f] + ")");
        return result;
      }

  result.functor = FinFunctor{source, target, std::move(omap), std::move(mmap)};
  return result;
}

FinFunctor make_functor(FinCatPtr source, FinCatPtr target,
                        std::vector<Idx> object_map, std::vector<Idx> morphism_map) {
  FinFunctor f{source, target, std::move(object_map), std::move(morphism_map)};
  if (!functor_laws_hold(*source, *target, f.data()))
    throw Error(ErrorCode::NotAFunctor, "make_functor: functor laws violated");
  return f;
}

// ---- exhaustive enumeration --------------------------------------------------------

namespace {

// Non-identity morphisms in scan order; identity images are forced.
struct FunctorScan {
  const FinCat& a;
  const FinCat& b;
  std::vector<Idx> nonids;
  // per pair of non-identity positions, the composite checks to run
  FunctorScan(const FinCat& a_, const FinCat& b_) : a(a_), b(b_) {
    for (Idx f = 0; f < a.n_morphisms(); ++f)
      if (a.identity[a.src[f]] != f) nonids.push_back(f);
  }
};

}  // namespace

std::uint64_t functor_candidate_count(const FinCat& a, const FinCat& b) {
  if (a.n_objects() == 0) return 1;
  if (b.n_objects() == 0) return 0;
  FunctorScan scan(a, b);
  // hom-size table
  std::vector<std::uint32_t> hom_count(std::size_t(b.n_objects()) * b.n_objects(), 0);
  for (Idx f = 0; f < b.n_morphisms(); ++f)
    ++hom_count[std::size_t(b.src[f]) * b.n_objects() + b.tgt[f]];

  std::uint64_t total = 0;
  std::vector<Idx> omap(a.n_objects(), 0);
  std::function<void(Idx)> rec = [&](Idx pos) {
    if (total > (1ull << 62)) return;
    if (pos == a.n_objects()) {
      std::uint64_t prod = 1;
      for (Idx f : scan.nonids) {
        prod *= hom_count[std::size_t(omap[a.src[f]]) * b.n_objects() + omap[a.tgt[f]]];
        if (prod == 0) break;
        if (prod > (1ull << 62)) break;
      }
      total += prod;
      return;
    }
    for (Idx y = 0; y < b.n_objects(); ++y) {
      omap[pos] = y;
      rec(pos + 1);
    }
  };
  rec(0);
  return total;
}

bool for_each_functor(const FinCat& a, const FinCat& b,
                      const std::function<bool(const FunctorData&)>& fn) {
  const Idx na = a.n_objects(), nb = b.n_objects();
  const Idx ma = a.n_morphisms();
  if (na == 0) {
    return fn(FunctorData{{}, {}});
  }
  if (nb == 0) return true;

  FunctorScan scan(a, b);
  FunctorData d;
  d.object_map.assign(na, 0);
  d.morphism_map.assign(ma, kNoIdx);

  // For each non-identity position, the pairs to check once it is assigned:
  // (g, f, gf) with all three images known.
  struct Check { Idx g, f, gf; };
  std::vector<std::vector<Check>> checks(scan.nonids.size());
  {
    std::vector<int> rank(ma, -1);  // position in scan.nonids, -1 for identities
    for (std::size_t i = 0; i < scan.nonids.size(); ++i) rank[scan.nonids[i]] = int(i);
    for (Idx g = 0; g < ma; ++g)
      for (Idx f = 0; f < ma; ++f) {
        if (!a.composable(g, f)) continue;
        if (rank[g] < 0 && rank[f] < 0) continue;  // identity pair, automatic
        Idx gf = a.compose(g, f);
        int latest = std::max({rank[g], rank[f], rank[gf]});
        checks[latest].push_back({g, f, gf});
      }
  }

  bool keep_going = true;
  std::function<void(std::size_t)> mor_rec = [&](std::size_t pos) {
    if (!keep_going) return;
    if (pos == scan.nonids.size()) {
      keep_going = fn(d);
      return;
    }
    Idx f = scan.nonids[pos];
    Idx want_src = d.object_map[a.src[f]], want_tgt = d.object_map[a.tgt[f]];
    for (Idx img = 0; img < b.n_morphisms() && keep_going; ++img) {
      if (b.src[img] != want_src || b.tgt[img] != want_tgt) continue;
      d.morphism_map[f] = img;
      bool ok = true;
      for (const Check& ch : checks[pos]) {
        if (b.compose(d.morphism_map[ch.g], d.morphism_map[ch.f]) != d.morphism_map[ch.gf]) {
          ok = false;
          break;
        }
      }
      if (ok) mor_rec(pos + 1);
    }
    d.morphism_map[f] = kNoIdx;
  };

  std::function<void(Idx)> obj_rec = [&](Idx pos) {
    if (!keep_going) return;
    if (pos == na) {
      for (Idx o = 0; o < na; ++o)
        d.morphism_map[a.identity[o]] = b.identity[d.object_map[o]];
      mor_rec(0);
      return;
    }
    for (Idx y = 0; y < nb && keep_going; ++y) {
      d.object_map[pos] = y;
      obj_rec(pos + 1);
    }
  };
  obj_rec(0);
  return keep_going;
}

std::vector<FinFunctor> enumerate_functors(FinCatPtr a, FinCatPtr b, std::uint64_t budget) {
  if (functor_candidate_count(*a, *b) > budget)
    throw Error(ErrorCode::BudgetExceeded, "enumerate_functors: candidate space exceeds budget");
  std::vector<FinFunctor> out;
  for_each_functor(*a, *b, [&](const FunctorData& d) {
    out.push_back(FinFunctor{a, b, d.object_map, d.morphism_map});
    return true;
  });
  return out;
}

// ---- natural transformations --------------------------------------------------------

bool naturality_holds(const NatTrans& t) {
  const FinCat& a = *t.source.source;
  const FinCat& b = *t.source.target;
  for (Idx o = 0; o < a.n_objects(); ++o) {
    Idx c = t.components[o];
    if (b.src[c] != t.source.object_map[o] || b.tgt[c] != t.target.object_map[o])
      return false;
  }
  for (Idx k = 0; k < a.n_morphisms(); ++k) {
    Idx x = a.src[k], y = a.tgt[k];
    if (b.compose(t.components[y], t.source.morphism_map[k]) !=
        b.compose(t.target.morphism_map[k], t.components[x]))
      return false;
  }
  return true;
}

NatTrans identity_nat_trans(const FinFunctor& f) {
  NatTrans t{f, f, {}};
  t.components.reserve(f.object_map.size());
  for (Idx o = 0; o < f.source->n_objects(); ++o)
    t.components.push_back(f.target->identity[f.object_map[o]]);
  return t;
}

std::vector<NatTrans> enumerate_nat_trans(const FinFunctor& f, const FinFunctor& g) {
  const FinCat& a = *f.source;
  const FinCat& b = *f.target;
  std::vector<NatTrans> out;
  std::vector<Idx> comp(a.n_objects(), kNoIdx);

  std::function<void(Idx)> rec = [&](Idx o) {
    if (o == a.n_objects()) {
      NatTrans t{f, g, comp};
      out.push_back(std::move(t));
      return;
    }
    for (Idx c = 0; c < b.n_morphisms(); ++c) {
      if (b.src[c] != f.object_map[o] || b.tgt[c] != g.object_map[o]) continue;
      comp[o] = c;
      // check arrows whose endpoints are both assigned
      bool ok = true;
      for (Idx k = 0; k < a.n_morphisms() && ok; ++k) {
        Idx x = a.src[k], y = a.tgt[k];
        if (comp[x] == kNoIdx || comp[y] == kNoIdx) continue;
        if (b.compose(comp[y], f.morphism_map[k]) != b.compose(g.morphism_map[k], comp[x]))
          ok = false;
      }
      if (ok) rec(o + 1);
    }
    comp[o] = kNoIdx;
  };
  rec(0);
  return out;
}

bool nat_trans_equal(const NatTrans& a, const NatTrans& b) {
  return functor_equal(a.source, b.source) && functor_equal(a.target, b.target) &&
         a.components == b.components;
}

// ---- diagrams -------------------------------------------------------------------------

std::vector<Violation> validate_diagram(const CatDiagram& d) {
  std::vector<Violation> out;
  const FinCat& idx = *d.index;
  if (d.at_object.size() != idx.n_objects() || d.at_arrow.size() != idx.n_morphisms()) {
    out.push_back({ErrorCode::NotADiagram, "diagram arity mismatch with index category"});
    return out;
  }
  for (Idx k = 0; k < idx.n_morphisms(); ++k) {
    const FinFunctor& fk = d.at_arrow[k];
    if (!(*fk.source == *d.at_object[idx.src[k]]) || !(*fk.target == *d.at_object[idx.tgt[k]])) {
      out.push_back({ErrorCode::NotADiagram,
                     "arrow '" + idx.morphisms[k] + "' has mismatched endpoints"});
      return out;
    }
    if (!functor_laws_hold(*fk.source, *fk.target, fk.data())) {
      out.push_back({ErrorCode::NotAFunctor,
                     "arrow '" + idx.morphisms[k] + "' is not a functor"});
      return out;
    }
  }
  for (Idx o = 0; o < idx.n_objects(); ++o) {
    const FinFunctor& f = d.at_arrow[idx.identity[o]];
    if (!functor_equal(f, identity_functor(d.at_object[o]))) {
      out.push_back({ErrorCode::NotADiagram,
                     "identity of '" + idx.objects[o] + "' not sent to the identity functor"});
      return out;
    }
  }
  for (Idx g = 0; g < idx.n_morphisms(); ++g)
    for (Idx f = 0; f < idx.n_morphisms(); ++f)
      if (idx.composable(g, f)) {
        FinFunctor lhs = d.at_arrow[idx.compose(g, f)];
        FinFunctor rhs = compose_functors(d.at_arrow[g], d.at_arrow[f]);
        if (!functor_equal(lhs, rhs)) {
          out.push_back({ErrorCode::NotADiagram,
                         "strict functoriality fails on (" + idx.morphisms[g] + " ∘ " +
                             idx.morphisms[f] + ")"});
          return out;
        }
      }
  return out;
}

CatDiagram constant_diagram(FinCatPtr index, FinCatPtr value) {
  CatDiagram d;
  d.index = index;
  d.at_object.assign(index->n_objects(), value);
  d.at_arrow.assign(index->n_morphisms(), identity_functor(value));
  return d;
}

CatDiagram compose_diagram(const CatDiagram& d, const FinFunctor& w) {
  if (!(*w.target == *d.index))
    throw Error(ErrorCode::IllTyped, "compose_diagram: w does not land in the diagram index");
  CatDiagram out;
  out.index = w.source;
  out.at_object.reserve(w.source->n_objects());
  for (Idx j = 0; j < w.source->n_objects(); ++j)
    out.at_object.push_back(d.at_object[w.object_map[j]]);
  out.at_arrow.reserve(w.source->n_morphisms());
  for (Idx l = 0; l < w.source->n_morphisms(); ++l)
    out.at_arrow.push_back(d.at_arrow[w.morphism_map[l]]);
  return out;
}

std::vector<Violation> validate_diagram_morphism(const DiagramMorphism& u) {
  std::vector<Violation> out;
  const FinCat& idx = *u.source.index;
  if (!(*u.source.index == *u.target.index)) {
    out.push_back({ErrorCode::IllTyped, "diagram morphism indices differ"});
    return out;
  }
  if (u.components.size() != idx.n_objects()) {
    out.push_back({ErrorCode::IllTyped, "component count mismatch"});
    return out;
  }
  for (Idx i = 0; i < idx.n_objects(); ++i) {
    const FinFunctor& c = u.components[i];
    if (!(*c.source == *u.source.at_object[i]) || !(*c.target == *u.target.at_object[i])) {
      out.push_back({ErrorCode::IllTyped,
                     "component at '" + idx.objects[i] + "' has wrong endpoints"});
      return out;
    }
  }
  for (Idx k = 0; k < idx.n_morphisms(); ++k) {
    Idx i = idx.src[k], j = idx.tgt[k];
    FinFunctor lhs = compose_functors(u.components[j], u.source.at_arrow[k]);
    FinFunctor rhs = compose_functors(u.target.at_arrow[k], u.components[i]);
    if (!functor_equal(lhs, rhs)) {
      out.push_back({ErrorCode::NotNatural,
                     "naturality fails at '" + idx.morphisms[k] + "'"});
      return out;
    }
  }
  return out;
}

}  // namespace catlab
