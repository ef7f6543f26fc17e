#include "catlab/enumeration.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace catlab {

namespace {

// A labeled category skeleton under construction: identities at indices
// 0..n-1, non-identity arrows with fixed endpoints, composition table being
// filled.
struct Skeleton {
  Idx n, m;
  std::vector<Idx> src, tgt;  // per morphism
  std::vector<Idx> comp;      // m*m, kNoIdx = unset or non-composable

  bool composable(Idx g, Idx f) const { return tgt[f] == src[g]; }
  Idx& at(Idx g, Idx f) { return comp[g * m + f]; }
  Idx get(Idx g, Idx f) const { return comp[g * m + f]; }
};

FinCat to_fincat(const Skeleton& sk) {
  FinCat c;
  c.objects.resize(sk.n);
  c.morphisms.resize(sk.m);
  c.src = sk.src;
  c.tgt = sk.tgt;
  c.identity.resize(sk.n);
  for (Idx o = 0; o < sk.n; ++o) c.identity[o] = o;
  c.comp = sk.comp;
  return c;
}

// Enumerates every total, unital, associative completion of the skeleton;
// calls sink per solution. Free slots are the composable non-identity pairs;
// associativity consequences are propagated to a fixpoint with trail-based
// undo, so the branching factor collapses quickly.
template <typename Sink>
void fill_tables(Skeleton& sk, Sink&& sink, std::mt19937_64* shuffle_rng = nullptr,
                 bool first_only = false) {
  struct Slot {
    Idx g, f;
    std::vector<Idx> candidates;
  };
  std::vector<Slot> slots;
  for (Idx g = sk.n; g < sk.m; ++g)
    for (Idx f = sk.n; f < sk.m; ++f) {
      if (!sk.composable(g, f)) continue;
      Slot s{g, f, {}};
      for (Idx h = 0; h < sk.m; ++h)
        if (sk.src[h] == sk.src[f] && sk.tgt[h] == sk.tgt[g]) s.candidates.push_back(h);
      if (s.candidates.empty()) return;  // no valid completion exists
      if (shuffle_rng)
        for (std::size_t i = s.candidates.size(); i > 1; --i)
          std::swap(s.candidates[i - 1], s.candidates[(*shuffle_rng)() % i]);
      slots.push_back(std::move(s));
    }

  struct Triple {
    Idx h, g, f;
  };
  std::vector<Triple> triples;
  for (Idx h = sk.n; h < sk.m; ++h)
    for (Idx g = sk.n; g < sk.m; ++g) {
      if (sk.tgt[g] != sk.src[h]) continue;
      for (Idx f = sk.n; f < sk.m; ++f)
        if (sk.tgt[f] == sk.src[g]) triples.push_back({h, g, f});
    }

  std::vector<std::pair<Idx, Idx>> trail;
  auto set_entry = [&](Idx g, Idx f, Idx v) {
    sk.at(g, f) = v;
    trail.push_back({g, f});
  };
  auto undo_to = [&](std::size_t mark) {
    while (trail.size() > mark) {
      auto [g, f] = trail.back();
      trail.pop_back();
      sk.at(g, f) = kNoIdx;
    }
  };
  // h∘(g∘f) = (h∘g)∘f: when three of the four entries are known the fourth is
  // forced; a conflict kills the branch.
  auto propagate = [&]() -> bool {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Triple& t : triples) {
        Idx c1 = sk.get(t.g, t.f);
        if (c1 == kNoIdx) continue;
        Idx c2 = sk.get(t.h, t.g);
        if (c2 == kNoIdx) continue;
        Idx lhs = sk.get(t.h, c1);
        Idx rhs = sk.get(c2, t.f);
        if (lhs != kNoIdx && rhs != kNoIdx) {
          if (lhs != rhs) return false;
        } else if (lhs != kNoIdx) {
          set_entry(c2, t.f, lhs);
          changed = true;
        } else if (rhs != kNoIdx) {
          set_entry(t.h, c1, rhs);
          changed = true;
        }
      }
    }
    return true;
  };

  bool stop = false;
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (stop) return;
    while (pos < slots.size() && sk.get(slots[pos].g, slots[pos].f) != kNoIdx) ++pos;
    if (pos == slots.size()) {
      sink(const_cast<const Skeleton&>(sk));
      if (first_only) stop = true;
      return;
    }
    const Slot& s = slots[pos];
    for (Idx h : s.candidates) {
      std::size_t mark = trail.size();
      set_entry(s.g, s.f, h);
      if (propagate()) self(self, pos + 1);
      undo_to(mark);
      if (stop) return;
    }
  };
  rec(rec, 0);
}

// Enumerates the skeletons for exactly n objects and m morphisms: identity
// entries forced, non-identity endpoints a weakly increasing sequence.
template <typename Sink>
void for_each_skeleton(Idx n, Idx m, Sink&& sink) {
  const Idx k = m - n;
  std::vector<Idx> shape(k);
  auto emit = [&]() {
    Skeleton sk;
    sk.n = n;
    sk.m = m;
    sk.src.resize(m);
    sk.tgt.resize(m);
    for (Idx o = 0; o < n; ++o) sk.src[o] = sk.tgt[o] = o;
    for (Idx i = 0; i < k; ++i) {
      sk.src[n + i] = static_cast<Idx>(shape[i] / n);
      sk.tgt[n + i] = static_cast<Idx>(shape[i] % n);
    }
    sk.comp.assign(std::size_t(m) * m, kNoIdx);
    for (Idx f = 0; f < m; ++f) {
      sk.at(sk.tgt[f], f) = f;  // id∘f (identity of tgt(f) has index tgt(f))
      sk.at(f, sk.src[f]) = f;  // f∘id
    }
    sink(sk);
  };
  auto rec = [&](auto&& self, Idx pos, Idx least) -> void {
    if (pos == k) {
      emit();
      return;
    }
    for (Idx s = least; s < n * n; ++s) {
      shape[pos] = s;
      self(self, pos + 1, s);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

std::vector<FinCat> enumerate_categories(int max_objects, int max_morphisms,
                                         std::uint64_t budget) {
  std::vector<FinCat> out;
  if (max_objects <= 0) {
    if (max_morphisms >= 0) out.push_back(empty_category());
    return out;
  }
  std::set<std::vector<std::uint16_t>> seen;
  for (Idx n = 1; n <= static_cast<Idx>(max_objects); ++n)
    for (Idx m = n; m <= static_cast<Idx>(max_morphisms); ++m)
      for_each_skeleton(n, m, [&](Skeleton& sk) {
        fill_tables(sk, [&](const Skeleton& done) {
          FinCat c = to_fincat(done);
          auto key = canonical_key(c);
          if (seen.insert(std::move(key)).second && seen.size() > budget)
            throw Error(ErrorCode::BudgetExceeded, "enumerate_categories: budget exceeded");
        });
      });
  out.reserve(seen.size());
  for (const auto& key : seen) out.push_back(category_from_canonical_key(key));
  // std::set iterates keys in lexicographic order: (objects, morphisms, shape, table)
  return out;
}

// ---- curated corpus -------------------------------------------------------------

std::vector<FinCatPtr> curated_categories() {
  std::vector<FinCat> base;
  base.push_back(terminal_category());       // e = Δ0
  base.push_back(empty_category());
  base.push_back(ordinal(1));
  base.push_back(ordinal(2));
  base.push_back(ordinal(3));
  base.push_back(discrete_category(2));
  base.push_back(discrete_category(3));
  base.push_back(parallel_pair_category());
  base.push_back(product(ordinal(1), ordinal(1)));  // commutative square

  std::vector<FinCat> factors = {ordinal(1), ordinal(2), discrete_category(2),
                                 parallel_pair_category()};
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      FinCat p = product(factors[i], factors[j]);
      if (p.n_morphisms() <= 20) base.push_back(std::move(p));
    }

  std::vector<FinCatPtr> out;
  std::set<std::vector<std::uint16_t>> seen;
  for (auto& c : base)
    if (seen.insert(canonical_key(c)).second) out.push_back(share(std::move(c)));
  return out;
}

FinCat random_category(std::uint64_t seed, const Bounds& bounds) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Idx n = static_cast<Idx>(1 + rng() % std::max(1, bounds.max_objects));
    Idx max_k = static_cast<Idx>(std::max(0, bounds.max_morphisms - int(n)));
    Idx k = max_k == 0 ? 0 : static_cast<Idx>(rng() % (max_k + 1));
    Skeleton sk;
    sk.n = n;
    sk.m = static_cast<Idx>(n + k);
    sk.src.resize(sk.m);
    sk.tgt.resize(sk.m);
    for (Idx o = 0; o < n; ++o) sk.src[o] = sk.tgt[o] = o;
    for (Idx i = 0; i < k; ++i) {
      sk.src[n + i] = static_cast<Idx>(rng() % n);
      sk.tgt[n + i] = static_cast<Idx>(rng() % n);
    }
    sk.comp.assign(std::size_t(sk.m) * sk.m, kNoIdx);
    for (Idx f = 0; f < sk.m; ++f) {
      sk.at(sk.tgt[f], f) = f;
      sk.at(f, sk.src[f]) = f;
    }
    std::optional<FinCat> found;
    fill_tables(sk, [&](const Skeleton& done) { found = to_fincat(done); }, &rng,
                /*first_only=*/true);
    if (found) {
      // name the pieces for reproducible serialization
      for (Idx o = 0; o < found->n_objects(); ++o) found->objects[o] = std::to_string(o);
      for (Idx f = 0; f < found->n_morphisms(); ++f)
        found->morphisms[f] = f < found->n_objects() ? "id_" + std::to_string(f)
                                                     : "m" + std::to_string(f - found->n_objects());
      return *found;
    }
  }
  return terminal_category();  // unreachable in practice
}

std::optional<FunctorData> random_functor(std::uint64_t seed, const FinCat& a,
                                          const FinCat& b) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 7);
  // Collect up to 4096 functors in scan order, then pick one; falls back to
  // the first functor when the space is larger.
  std::vector<FunctorData> pool;
  for_each_functor(a, b, [&](const FunctorData& d) {
    pool.push_back(d);
    return pool.size() < 4096;
  });
  if (pool.empty()) return std::nullopt;
  return pool[rng() % pool.size()];
}

Corpus build_corpus(const Bounds& bounds, std::uint64_t seed, int random_samples,
                    const Bounds& random_bounds) {
  Corpus corpus;
  for (auto& c : enumerate_categories(bounds.max_objects, bounds.max_morphisms))
    corpus.exhaustive.push_back(share(std::move(c)));
  corpus.curated = curated_categories();
  for (int i = 0; i < random_samples; ++i)
    corpus.random.push_back(share(random_category(seed + i, random_bounds)));
  return corpus;
}

std::vector<FinCatPtr> Corpus::all() const {
  std::vector<FinCatPtr> out;
  std::set<std::vector<std::uint16_t>> seen;
  for (const auto* part : {&exhaustive, &curated, &random})
    for (const auto& c : *part)
      if (seen.insert(canonical_key(*c)).second) out.push_back(c);
  return out;
}

void enumerate_base_change_diagrams(FinCatPtr b, const Bounds& bounds2, const Bounds& bounds1,
                                    const std::function<bool(const BaseChangeDiagram&)>& fn,
                                    std::uint64_t functor_budget) {
  auto cats2 = enumerate_categories(bounds2.max_objects, bounds2.max_morphisms);
  auto cats1 = enumerate_categories(bounds1.max_objects, bounds1.max_morphisms);
  for (const FinCat& c2 : cats2) {
    FinCatPtr b2 = share(FinCat(c2));
    for (const FinCat& c1 : cats1) {
      FinCatPtr b1 = share(FinCat(c1));
      if (functor_candidate_count(*b2, *b1) > functor_budget ||
          functor_candidate_count(*b1, *b) > functor_budget)
        continue;
      auto ws = enumerate_functors(b2, b1, functor_budget);
      if (ws.empty()) continue;
      auto ts = enumerate_functors(b1, b, functor_budget);
      for (const auto& w : ws)
        for (const auto& t : ts)
          if (!fn(BaseChangeDiagram{b2, b1, w, t})) return;
    }
  }
}

// ---- diagram enumeration -----------------------------------------------------------

std::vector<CatDiagram> enumerate_diagrams(FinCatPtr index,
                                           const std::vector<FinCatPtr>& values,
                                           std::size_t cap) {
  const FinCat& idx = *index;
  std::vector<CatDiagram> out;
  if (values.empty()) return out;

  // memoized functor lists between value pairs
  std::map<std::pair<std::size_t, std::size_t>, std::vector<FunctorData>> homs;
  auto hom = [&](std::size_t i, std::size_t j) -> const std::vector<FunctorData>& {
    auto it = homs.find({i, j});
    if (it != homs.end()) return it->second;
    std::vector<FunctorData> fs;
    for_each_functor(*values[i], *values[j], [&](const FunctorData& d) {
      fs.push_back(d);
      return true;
    });
    return homs.emplace(std::pair<std::size_t, std::size_t>{i, j}, std::move(fs))
        .first->second;
  };

  std::vector<std::size_t> at_obj(idx.n_objects());
  std::vector<Idx> at_arrow(idx.n_morphisms(), kNoIdx);  // index into hom list
  std::vector<Idx> nonids;
  for (Idx k = 0; k < idx.n_morphisms(); ++k)
    if (idx.identity[idx.src[k]] != k) nonids.push_back(k);

  auto compose_data = [](const FinCat& /*mid*/, const FinCat& tgt_cat, const FunctorData& g,
                         const FunctorData& f) {
    FunctorData h;
    h.object_map.reserve(f.object_map.size());
    for (Idx o : f.object_map) h.object_map.push_back(g.object_map[o]);
    h.morphism_map.reserve(f.morphism_map.size());
    for (Idx m : f.morphism_map) h.morphism_map.push_back(g.morphism_map[m]);
    (void)tgt_cat;
    return h;
  };

  auto arrow_data = [&](Idx k) -> FunctorData {
    if (idx.identity[idx.src[k]] == k) {
      FunctorData d;
      const FinCat& v = *values[at_obj[idx.src[k]]];
      d.object_map.resize(v.n_objects());
      d.morphism_map.resize(v.n_morphisms());
      for (Idx o = 0; o < v.n_objects(); ++o) d.object_map[o] = o;
      for (Idx m = 0; m < v.n_morphisms(); ++m) d.morphism_map[m] = m;
      return d;
    }
    return hom(at_obj[idx.src[k]], at_obj[idx.tgt[k]])[at_arrow[k]];
  };

  std::function<void(std::size_t)> assign_arrows = [&](std::size_t pos) {
    if (cap && out.size() >= cap) return;
    if (pos == nonids.size()) {
      CatDiagram d;
      d.index = index;
      for (Idx o = 0; o < idx.n_objects(); ++o) d.at_object.push_back(values[at_obj[o]]);
      for (Idx k = 0; k < idx.n_morphisms(); ++k) {
        FunctorData fd = arrow_data(k);
        d.at_arrow.push_back(FinFunctor{values[at_obj[idx.src[k]]],
                                        values[at_obj[idx.tgt[k]]], fd.object_map,
                                        fd.morphism_map});
      }
      out.push_back(std::move(d));
      return;
    }
    Idx k = nonids[pos];
    const auto& candidates = hom(at_obj[idx.src[k]], at_obj[idx.tgt[k]]);
    for (Idx ci = 0; ci < candidates.size(); ++ci) {
      at_arrow[k] = ci;
      // check all composition constraints whose participants are assigned
      bool ok = true;
      for (Idx g = 0; g < idx.n_morphisms() && ok; ++g)
        for (Idx f = 0; f < idx.n_morphisms() && ok; ++f) {
          if (!idx.composable(g, f)) continue;
          Idx gf = idx.compose(g, f);
          auto ready = [&](Idx mm) {
            return idx.identity[idx.src[mm]] == mm || at_arrow[mm] != kNoIdx;
          };
          if (!ready(g) || !ready(f) || !ready(gf)) continue;
          FunctorData composite = compose_data(*values[at_obj[idx.tgt[f]]],
                                               *values[at_obj[idx.tgt[g]]], arrow_data(g),
                                               arrow_data(f));
          if (!(composite == arrow_data(gf))) ok = false;
        }
      if (ok) assign_arrows(pos + 1);
    }
    at_arrow[k] = kNoIdx;
  };

  std::function<void(Idx)> assign_objects = [&](Idx o) {
    if (cap && out.size() >= cap) return;
    if (o == idx.n_objects()) {
      assign_arrows(0);
      return;
    }
    for (std::size_t v = 0; v < values.size(); ++v) {
      at_obj[o] = v;
      assign_objects(static_cast<Idx>(o + 1));
    }
  };
  assign_objects(0);
  return out;
}

std::vector<DiagramMorphism> enumerate_diagram_morphisms(const CatDiagram& f,
                                                         const CatDiagram& g) {
  std::vector<DiagramMorphism> out;
  if (!(*f.index == *g.index)) return out;
  const FinCat& idx = *f.index;

  std::vector<std::vector<FunctorData>> homs(idx.n_objects());
  for (Idx i = 0; i < idx.n_objects(); ++i)
    for_each_functor(*f.at_object[i], *g.at_object[i], [&](const FunctorData& d) {
      homs[i].push_back(d);
      return true;
    });

  std::vector<Idx> choice(idx.n_objects(), kNoIdx);
  auto component_ok = [&](Idx k) {
    // naturality at arrow k: u_j ∘ F(k) == G(k) ∘ u_i
    Idx i = idx.src[k], j = idx.tgt[k];
    const FunctorData& ui = homs[i][choice[i]];
    const FunctorData& uj = homs[j][choice[j]];
    const FinFunctor& fk = f.at_arrow[k];
    const FinFunctor& gk = g.at_arrow[k];
    for (std::size_t o = 0; o < fk.object_map.size(); ++o)
      if (uj.object_map[fk.object_map[o]] != gk.object_map[ui.object_map[o]]) return false;
    for (std::size_t m = 0; m < fk.morphism_map.size(); ++m)
      if (uj.morphism_map[fk.morphism_map[m]] != gk.morphism_map[ui.morphism_map[m]])
        return false;
    return true;
  };

  std::function<void(Idx)> rec = [&](Idx i) {
    if (i == idx.n_objects()) {
      DiagramMorphism dm;
      dm.source = f;
      dm.target = g;
      for (Idx o = 0; o < idx.n_objects(); ++o)
        dm.components.push_back(FinFunctor{f.at_object[o], g.at_object[o],
                                           homs[o][choice[o]].object_map,
                                           homs[o][choice[o]].morphism_map});
      out.push_back(std::move(dm));
      return;
    }
    for (Idx c = 0; c < homs[i].size(); ++c) {
      choice[i] = c;
      bool ok = true;
      for (Idx k = 0; k < idx.n_morphisms() && ok; ++k) {
        if (choice[idx.src[k]] == kNoIdx || choice[idx.tgt[k]] == kNoIdx) continue;
        ok = component_ok(k);
      }
      if (ok) rec(static_cast<Idx>(i + 1));
    }
    choice[i] = kNoIdx;
  };
  rec(0);
  return out;
}

}  // namespace catlab
