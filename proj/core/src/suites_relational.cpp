// Suites whose instance shapes are composite (functor pairs, triangles,
// cartesian squares, base-change chains). Exhaustive at reduced bounds with
// seeded random instances on top; the single-functor sweeps carry the (3,6)
// load.

#include <atomic>

#include <json.hpp>

#include "catlab/adjunction.hpp"
#include "catlab/asphericity.hpp"
#include "catlab/fibration.hpp"
#include "catlab/format.hpp"
#include "catlab/kernels.hpp"
#include "catlab/parallel.hpp"
#include "suites_internal.hpp"

namespace catlab::detail {

namespace {

using kernel::Structure;

const char* structure_name(Structure s) {
  return s == Structure::Minimal ? "minimal" : "nonempty";
}

struct FunctorTable {
  std::vector<FinCatPtr> cats;
  struct Entry {
    std::size_t ai, bi;
    FunctorData data;
  };
  std::vector<Entry> functors;
  std::vector<std::vector<std::vector<Idx>>> by_pair;  // [ai][bi] -> functor ids
};

FunctorTable build_functor_table(int max_objects, int max_morphisms) {
  FunctorTable t;
  t.cats = cached_corpus(max_objects, max_morphisms);
  const std::size_t n = t.cats.size();
  t.by_pair.assign(n, std::vector<std::vector<Idx>>(n));
  for (std::size_t ai = 0; ai < n; ++ai)
    for (std::size_t bi = 0; bi < n; ++bi)
      for_each_functor(*t.cats[ai], *t.cats[bi], [&](const FunctorData& d) {
        t.by_pair[ai][bi].push_back(static_cast<Idx>(t.functors.size()));
        t.functors.push_back({ai, bi, d});
        return true;
      });
  return t;
}

FunctorData compose_data(const FunctorData& g, const FunctorData& f) {
  FunctorData h;
  h.object_map.reserve(f.object_map.size());
  for (Idx o : f.object_map) h.object_map.push_back(g.object_map[o]);
  h.morphism_map.reserve(f.morphism_map.size());
  for (Idx m : f.morphism_map) h.morphism_map.push_back(g.morphism_map[m]);
  return h;
}

// Product functor u × u2 on the product categories (left-major pairing, the
// same order product() uses).
FunctorData product_data(const FinCat& a, const FinCat& a2, const FinCat& b, const FinCat& b2,
                         const FunctorData& u, const FunctorData& u2) {
  FunctorData p;
  p.object_map.reserve(std::size_t(a.n_objects()) * a2.n_objects());
  for (Idx x = 0; x < a.n_objects(); ++x)
    for (Idx y = 0; y < a2.n_objects(); ++y)
      p.object_map.push_back(
          static_cast<Idx>(u.object_map[x] * b2.n_objects() + u2.object_map[y]));
  p.morphism_map.reserve(std::size_t(a.n_morphisms()) * a2.n_morphisms());
  for (Idx f = 0; f < a.n_morphisms(); ++f)
    for (Idx g = 0; g < a2.n_morphisms(); ++g)
      p.morphism_map.push_back(
          static_cast<Idx>(u.morphism_map[f] * b2.n_morphisms() + u2.morphism_map[g]));
  return p;
}

std::string two_functor_witness(const FinCat& a, const FinCat& b, const FunctorData& u,
                                const FinCat& a2, const FinCat& b2, const FunctorData& u2,
                                const char* shape) {
  nlohmann::json j;
  j["first"] = nlohmann::json::parse(functor_witness_json(a, b, u));
  j["second"] = nlohmann::json::parse(functor_witness_json(a2, b2, u2));
  j["shape"] = shape;
  return j.dump();
}

// ---- aspheric-product (categories) ---------------------------------------------

SuiteReport run_aspheric_product(const SuiteOptions& opt) {
  SuiteReport report;
  const auto& corpus = cached_corpus(opt.bounds.max_objects, opt.bounds.max_morphisms);
  const std::size_t n = corpus.size();
  std::vector<std::vector<SuiteFailure>> failures(n);
  std::atomic<std::uint64_t> instances{0};
  std::vector<std::pair<bool, bool>> member(n);  // (minimal, nonempty)
  for (std::size_t i = 0; i < n; ++i)
    member[i] = {has_final_object(*corpus[i]), corpus[i]->n_objects() > 0};

  parallel_for(
      n,
      [&](std::size_t ai) {
        std::uint64_t local = 0;
        for (std::size_t bi = 0; bi < n; ++bi) {
          ++local;
          if (!(member[ai].first && member[bi].first) &&
              !(member[ai].second && member[bi].second))
            continue;
          FinCat prod = product(*corpus[ai], *corpus[bi]);
          if (member[ai].first && member[bi].first && !has_final_object(prod))
            failures[ai].push_back(
                {"A#" + std::to_string(ai) + "|B#" + std::to_string(bi),
                 "product of two minimal-aspheric categories lacks a final object",
                 functor_witness_json(*corpus[ai], *corpus[bi],
                                      FunctorData{{}, {}})});
          if (member[ai].second && member[bi].second && prod.n_objects() == 0)
            failures[ai].push_back({"A#" + std::to_string(ai) + "|B#" + std::to_string(bi),
                                    "product of two nonempty categories is empty", ""});
        }
        instances += local;
      },
      opt.threads);
  for (auto& part : failures)
    report.failures.insert(report.failures.end(), part.begin(), part.end());
  report.instances = instances.load();
  return report;
}

// ---- pair-shaped laws over a functor table --------------------------------------

struct PairContext {
  const FunctorTable& table;
  std::vector<FinCatPtr> products;                 // cache of product cats
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> product_index;

  const FinCat& product_cat(std::size_t i, std::size_t j) {
    auto key = std::pair{i, j};
    auto it = product_index.find(key);
    if (it == product_index.end()) {
      products.push_back(share(product(*table.cats[i], *table.cats[j])));
      it = product_index.emplace(key, products.size() - 1).first;
    }
    return *products[it->second];
  }
};

SuiteReport run_functor_pair_suite(
    const SuiteOptions& opt, int mo, int mm,
    const std::function<void(PairContext&, SuiteReport&)>& body) {
  SuiteReport report;
  FunctorTable table = build_functor_table(std::min(opt.bounds.max_objects, mo),
                                           std::min(opt.bounds.max_morphisms, mm));
  PairContext ctx{table, {}, {}};
  body(ctx, report);
  return report;
}

void aspheric_functor_product_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  std::vector<std::pair<bool, bool>> aspheric(t.functors.size());
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    aspheric[i] = {
        kernel::aspheric_functor(Structure::Minimal, *t.cats[e.ai], *t.cats[e.bi], e.data),
        kernel::aspheric_functor(Structure::Nonempty, *t.cats[e.ai], *t.cats[e.bi], e.data)};
  }
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j) {
      ++report.instances;
      const auto& e1 = t.functors[i];
      const auto& e2 = t.functors[j];
      for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
        bool a1 = s == Structure::Minimal ? aspheric[i].first : aspheric[i].second;
        bool a2 = s == Structure::Minimal ? aspheric[j].first : aspheric[j].second;
        if (!a1 || !a2) continue;
        const FinCat& pa = ctx.product_cat(e1.ai, e2.ai);
        const FinCat& pb = ctx.product_cat(e1.bi, e2.bi);
        FunctorData pu = product_data(*t.cats[e1.ai], *t.cats[e2.ai], *t.cats[e1.bi],
                                      *t.cats[e2.bi], e1.data, e2.data);
        if (!kernel::aspheric_functor(s, pa, pb, pu))
          report.failures.push_back(
              {"u#" + std::to_string(i) + "|u2#" + std::to_string(j),
               std::string("product of aspheric functors is not aspheric (") +
                   structure_name(s) + ")",
               two_functor_witness(*t.cats[e1.ai], *t.cats[e1.bi], e1.data, *t.cats[e2.ai],
                                   *t.cats[e2.bi], e2.data, "product")});
      }
    }
}

void locally_aspheric_closure_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  std::vector<std::pair<bool, bool>> locasph(t.functors.size());
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    locasph[i] = {
        kernel::locally_aspheric(Structure::Minimal, *t.cats[e.ai], *t.cats[e.bi], e.data),
        kernel::locally_aspheric(Structure::Nonempty, *t.cats[e.ai], *t.cats[e.bi], e.data)};
  }
  // composition closure
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j) {
      const auto& u = t.functors[i];   // A -> B
      const auto& v = t.functors[j];   // B -> C
      if (u.bi != v.ai) continue;
      ++report.instances;
      FunctorData vu = compose_data(v.data, u.data);
      for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
        bool l1 = s == Structure::Minimal ? locasph[i].first : locasph[i].second;
        bool l2 = s == Structure::Minimal ? locasph[j].first : locasph[j].second;
        if (l1 && l2 && !kernel::locally_aspheric(s, *t.cats[u.ai], *t.cats[v.bi], vu))
          report.failures.push_back(
              {"u#" + std::to_string(i) + "|v#" + std::to_string(j),
               std::string("composite of locally aspheric functors is not locally aspheric (") +
                   structure_name(s) + ")",
               two_functor_witness(*t.cats[u.ai], *t.cats[u.bi], u.data, *t.cats[v.ai],
                                   *t.cats[v.bi], v.data, "composition")});
      }
    }
  // binary product closure
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j) {
      ++report.instances;
      const auto& e1 = t.functors[i];
      const auto& e2 = t.functors[j];
      for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
        bool l1 = s == Structure::Minimal ? locasph[i].first : locasph[i].second;
        bool l2 = s == Structure::Minimal ? locasph[j].first : locasph[j].second;
        if (!l1 || !l2) continue;
        const FinCat& pa = ctx.product_cat(e1.ai, e2.ai);
        const FinCat& pb = ctx.product_cat(e1.bi, e2.bi);
        FunctorData pu = product_data(*t.cats[e1.ai], *t.cats[e2.ai], *t.cats[e1.bi],
                                      *t.cats[e2.bi], e1.data, e2.data);
        if (!kernel::locally_aspheric(s, pa, pb, pu))
          report.failures.push_back(
              {"u#" + std::to_string(i) + "|u2#" + std::to_string(j),
               std::string("product of locally aspheric functors is not locally aspheric (") +
                   structure_name(s) + ")",
               two_functor_witness(*t.cats[e1.ai], *t.cats[e1.bi], e1.data, *t.cats[e2.ai],
                                   *t.cats[e2.bi], e2.data, "product")});
      }
    }
}

void aspheric_composition_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  std::vector<std::pair<bool, bool>> aspheric(t.functors.size());
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    aspheric[i] = {
        kernel::aspheric_functor(Structure::Minimal, *t.cats[e.ai], *t.cats[e.bi], e.data),
        kernel::aspheric_functor(Structure::Nonempty, *t.cats[e.ai], *t.cats[e.bi], e.data)};
  }
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j) {
      const auto& u = t.functors[i];
      const auto& v = t.functors[j];
      if (u.bi != v.ai) continue;
      ++report.instances;
      FunctorData vu = compose_data(v.data, u.data);
      for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
        bool a1 = s == Structure::Minimal ? aspheric[i].first : aspheric[i].second;
        bool a2 = s == Structure::Minimal ? aspheric[j].first : aspheric[j].second;
        if (a1 && a2 && !kernel::aspheric_functor(s, *t.cats[u.ai], *t.cats[v.bi], vu))
          report.failures.push_back(
              {"u#" + std::to_string(i) + "|v#" + std::to_string(j),
               std::string("composite of aspheric functors is not aspheric (") +
                   structure_name(s) + ")",
               two_functor_witness(*t.cats[u.ai], *t.cats[u.bi], u.data, *t.cats[v.ai],
                                   *t.cats[v.bi], v.data, "composition")});
      }
    }
}

// Induced functor A/c -> B/c for a commutative triangle (u: A->B over C via
// w = v∘u and v: B->C).
FinFunctor triangle_slice_functor(const FinFunctor& u, const FinFunctor& v, Idx c) {
  FinFunctor w = compose_functors(v, u);
  SliceResult sa = slice(w, c);
  SliceResult sb = slice(v, c);
  std::map<std::pair<Idx, Idx>, Idx> sb_obj, sb_mor;
  for (Idx o = 0; o < sb.cat->n_objects(); ++o) sb_obj[sb.object_pairs[o]] = o;
  for (Idx m = 0; m < sb.cat->n_morphisms(); ++m) sb_mor[sb.morphism_pairs[m]] = m;
  FinFunctor out;
  out.source = sa.cat;
  out.target = sb.cat;
  for (auto [a, p] : sa.object_pairs)
    out.object_map.push_back(sb_obj.at({u.object_map[a], p}));
  for (auto [f, tg] : sa.morphism_pairs) {
    auto [a1, p1] = sa.object_pairs[tg];
    out.morphism_map.push_back(
        sb_mor.at({u.morphism_map[f], sb_obj.at({u.object_map[a1], p1})}));
  }
  return out;
}

void aspheric_local_base_body(PairContext& ctx, SuiteReport& report,
                              const AsphericityStructure& s_min,
                              const AsphericityStructure& s_ne) {
  const FunctorTable& t = ctx.table;
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j) {
      const auto& ue = t.functors[i];
      const auto& ve = t.functors[j];
      if (ue.bi != ve.ai) continue;
      ++report.instances;
      FinFunctor u{t.cats[ue.ai], t.cats[ue.bi], ue.data.object_map, ue.data.morphism_map};
      FinFunctor v{t.cats[ve.ai], t.cats[ve.bi], ve.data.object_map, ve.data.morphism_map};
      for (const AsphericityStructure* s : {&s_min, &s_ne}) {
        bool u_aspheric = is_aspheric_functor(*s, u);
        bool all_slices = true;
        for (Idx c = 0; c < v.target->n_objects() && all_slices; ++c)
          all_slices = is_aspheric_functor(*s, triangle_slice_functor(u, v, c));
        if (u_aspheric != all_slices)
          report.failures.push_back(
              {"u#" + std::to_string(i) + "|v#" + std::to_string(j),
               "asphericity of u differs from asphericity of all induced u/c (" + s->name +
                   ")",
               two_functor_witness(*t.cats[ue.ai], *t.cats[ue.bi], ue.data, *t.cats[ve.ai],
                                   *t.cats[ve.bi], ve.data, "triangle")});
      }
    }
}

// ---- square-shaped suites ----------------------------------------------------------

void for_each_square(const FunctorTable& t,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  // (u index, w index) with a shared target
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j)
      if (t.functors[i].bi == t.functors[j].bi) fn(i, j);
}

void weakly_smooth_base_change_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  std::vector<std::pair<bool, bool>> weak(t.functors.size());
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    weak[i] = {
        kernel::weakly_smooth_a(Structure::Minimal, *t.cats[e.ai], *t.cats[e.bi], e.data),
        kernel::weakly_smooth_a(Structure::Nonempty, *t.cats[e.ai], *t.cats[e.bi], e.data)};
  }
  for_each_square(t, [&](std::size_t i, std::size_t j) {
    if (!weak[i].first && !weak[i].second) return;
    ++report.instances;
    const auto& ue = t.functors[i];
    const auto& we = t.functors[j];
    FinFunctor u{t.cats[ue.ai], t.cats[ue.bi], ue.data.object_map, ue.data.morphism_map};
    FinFunctor w{t.cats[we.ai], t.cats[we.bi], we.data.object_map, we.data.morphism_map};
    CartesianSquare sq = pullback(u, w);
    for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
      bool u_weak = s == Structure::Minimal ? weak[i].first : weak[i].second;
      if (!u_weak) continue;
      if (!kernel::weakly_smooth_a(s, *sq.apex, *w.source, sq.u_prime.data()))
        report.failures.push_back(
            {"u#" + std::to_string(i) + "|w#" + std::to_string(j),
             std::string("base change of a weakly smooth functor is not weakly smooth (") +
                 structure_name(s) + ")",
             two_functor_witness(*t.cats[ue.ai], *t.cats[ue.bi], ue.data, *t.cats[we.ai],
                                 *t.cats[we.bi], we.data, "square")});
    }
  });
}

void fibration_stability_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  std::vector<bool> fib(t.functors.size());
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    fib[i] = kernel::fibration(*t.cats[e.ai], *t.cats[e.bi], e.data);
  }
  // composition
  for (std::size_t i = 0; i < t.functors.size(); ++i)
    for (std::size_t j = 0; j < t.functors.size(); ++j) {
      const auto& u = t.functors[i];
      const auto& v = t.functors[j];
      if (u.bi != v.ai) continue;
      ++report.instances;
      if (fib[i] && fib[j] &&
          !kernel::fibration(*t.cats[u.ai], *t.cats[v.bi], compose_data(v.data, u.data)))
        report.failures.push_back(
            {"u#" + std::to_string(i) + "|v#" + std::to_string(j),
             "composite of fibrations is not a fibration",
             two_functor_witness(*t.cats[u.ai], *t.cats[u.bi], u.data, *t.cats[v.ai],
                                 *t.cats[v.bi], v.data, "composition")});
    }
  // base change
  for_each_square(t, [&](std::size_t i, std::size_t j) {
    if (!fib[i]) return;
    ++report.instances;
    const auto& ue = t.functors[i];
    const auto& we = t.functors[j];
    FinFunctor u{t.cats[ue.ai], t.cats[ue.bi], ue.data.object_map, ue.data.morphism_map};
    FinFunctor w{t.cats[we.ai], t.cats[we.bi], we.data.object_map, we.data.morphism_map};
    CartesianSquare sq = pullback(u, w);
    if (!kernel::fibration(*sq.apex, *w.source, sq.u_prime.data()))
      report.failures.push_back(
          {"u#" + std::to_string(i) + "|w#" + std::to_string(j),
           "base change of a fibration is not a fibration",
           two_functor_witness(*t.cats[ue.ai], *t.cats[ue.bi], ue.data, *t.cats[we.ai],
                               *t.cats[we.bi], we.data, "square")});
  });
}

void smoothness_localization_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    ++report.instances;
    const auto& e = t.functors[i];
    FinFunctor u{t.cats[e.ai], t.cats[e.bi], e.data.object_map, e.data.morphism_map};
    // weakly smooth localizes
    for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
      bool global = kernel::weakly_smooth_a(s, *t.cats[e.ai], *t.cats[e.bi], e.data);
      bool local = true;
      for (Idx a = 0; a < u.source->n_objects() && local; ++a) {
        FinFunctor ind = induced_local_functor(u, a);
        local = kernel::weakly_smooth_a(s, *ind.source, *ind.target, ind.data());
      }
      if (global != local)
        report.failures.push_back(
            {"u#" + std::to_string(i),
             std::string("weak smoothness does not localize (") + structure_name(s) + ")",
             functor_witness_json(*t.cats[e.ai], *t.cats[e.bi], e.data)});
    }
    // minimal smoothness (= fibration) localizes
    bool global_fib = kernel::fibration(*t.cats[e.ai], *t.cats[e.bi], e.data);
    bool local_fib = true;
    for (Idx a = 0; a < u.source->n_objects() && local_fib; ++a) {
      FinFunctor ind = induced_local_functor(u, a);
      local_fib = kernel::fibration(*ind.source, *ind.target, ind.data());
    }
    if (global_fib != local_fib)
      report.failures.push_back({"u#" + std::to_string(i),
                                 "minimal smoothness does not localize",
                                 functor_witness_json(*t.cats[e.ai], *t.cats[e.bi], e.data)});
  }
}

void locasph_smooth_base_change_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  std::vector<bool> fib(t.functors.size());
  std::vector<std::pair<bool, bool>> locasph(t.functors.size());
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    fib[i] = kernel::fibration(*t.cats[e.ai], *t.cats[e.bi], e.data);
    locasph[i] = {
        kernel::locally_aspheric(Structure::Minimal, *t.cats[e.ai], *t.cats[e.bi], e.data),
        kernel::locally_aspheric(Structure::Nonempty, *t.cats[e.ai], *t.cats[e.bi], e.data)};
  }
  for_each_square(t, [&](std::size_t i, std::size_t j) {
    if (!fib[i]) return;  // fibrations are smooth for every structure
    if (!locasph[j].first && !locasph[j].second) return;
    ++report.instances;
    const auto& ue = t.functors[i];
    const auto& we = t.functors[j];
    FinFunctor u{t.cats[ue.ai], t.cats[ue.bi], ue.data.object_map, ue.data.morphism_map};
    FinFunctor w{t.cats[we.ai], t.cats[we.bi], we.data.object_map, we.data.morphism_map};
    CartesianSquare sq = pullback(u, w);
    for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
      bool w_loc = s == Structure::Minimal ? locasph[j].first : locasph[j].second;
      if (!w_loc) continue;
      if (!kernel::locally_aspheric(s, *sq.apex, *u.source, sq.v.data()))
        report.failures.push_back(
            {"u#" + std::to_string(i) + "|w#" + std::to_string(j),
             std::string("smooth base change of a locally aspheric functor is not locally "
                         "aspheric (") +
                 structure_name(s) + ")",
             two_functor_witness(*t.cats[ue.ai], *t.cats[ue.bi], ue.data, *t.cats[we.ai],
                                 *t.cats[we.bi], we.data, "square")});
    }
  });
}

// Induced slice-to-slice functor A''/a' -> B''/b' for a composed base change.
FinFunctor base_change_slice_functor(const CartesianSquare& outer,
                                     const CartesianSquare& inner, Idx a_prime) {
  // inner.v: A'' -> A', inner.u_prime: A'' -> B''; outer.u_prime: A' -> B'
  SliceResult sa = slice(inner.v, a_prime);
  SliceResult sb = slice(inner.w, outer.u_prime.object_map[a_prime]);
  std::map<std::pair<Idx, Idx>, Idx> sb_obj, sb_mor;
  for (Idx o = 0; o < sb.cat->n_objects(); ++o) sb_obj[sb.object_pairs[o]] = o;
  for (Idx m = 0; m < sb.cat->n_morphisms(); ++m) sb_mor[sb.morphism_pairs[m]] = m;
  FinFunctor out;
  out.source = sa.cat;
  out.target = sb.cat;
  for (auto [x, f] : sa.object_pairs)
    out.object_map.push_back(
        sb_obj.at({inner.u_prime.object_map[x], outer.u_prime.morphism_map[f]}));
  for (auto [m, tg] : sa.morphism_pairs) {
    auto [x1, f1] = sa.object_pairs[tg];
    out.morphism_map.push_back(sb_mor.at(
        {inner.u_prime.morphism_map[m],
         sb_obj.at({inner.u_prime.object_map[x1], outer.u_prime.morphism_map[f1]})}));
  }
  return out;
}

void carlisse_necessary_body(PairContext& ctx, SuiteReport& report) {
  const FunctorTable& t = ctx.table;
  for (std::size_t i = 0; i < t.functors.size(); ++i) {
    const auto& e = t.functors[i];
    if (!kernel::fibration(*t.cats[e.ai], *t.cats[e.bi], e.data)) continue;
    FinFunctor u{t.cats[e.ai], t.cats[e.bi], e.data.object_map, e.data.morphism_map};
    enumerate_base_change_diagrams(
        u.target, Bounds{1, 2}, Bounds{2, 3},
        [&](const BaseChangeDiagram& d) {
          ++report.instances;
          CartesianSquare outer = pullback(u, d.t);
          CartesianSquare inner = pullback(outer.u_prime, d.w);
          bool w_min_aspheric =
              kernel::aspheric_functor(Structure::Minimal, *d.b2, *d.b1, d.w.data());
          if (w_min_aspheric) {
            // condition (b): v must be aspheric for every structure
            for (Structure s : {Structure::Minimal, Structure::Nonempty})
              if (!kernel::aspheric_functor(s, *inner.apex, *outer.apex, inner.v.data()))
                report.failures.push_back(
                    {"u#" + std::to_string(i),
                     std::string("smooth functor fails a minimal-aspheric base change (") +
                         structure_name(s) + ")",
                     two_functor_witness(*d.b2, *d.b1, d.w.data(), *d.b1, *u.target,
                                         d.t.data(), "base-change")});
            // condition (d): every induced A''/a' -> B''/b' is aspheric
            for (Idx ap = 0; ap < outer.apex->n_objects(); ++ap) {
              FinFunctor ind = base_change_slice_functor(outer, inner, ap);
              for (Structure s : {Structure::Minimal, Structure::Nonempty})
                if (!kernel::aspheric_functor(s, *ind.source, *ind.target, ind.data()))
                  report.failures.push_back(
                      {"u#" + std::to_string(i) + "|a#" + std::to_string(ap),
                       std::string("smooth functor fails the slice condition (") +
                           structure_name(s) + ")",
                       two_functor_witness(*d.b2, *d.b1, d.w.data(), *d.b1, *u.target,
                                           d.t.data(), "base-change")});
            }
          }
          return true;
        });
    // condition (c): add_final shapes
    const auto& small = cached_corpus(1, 2);
    for (std::size_t b2i = 0; b2i < small.size(); ++b2i) {
      if (!has_final_object(*small[b2i])) continue;
      AddFinalResult star = add_final(*small[b2i]);
      for (const FinFunctor& t2 : enumerate_functors(star.cat, u.target)) {
        ++report.instances;
        CartesianSquare outer = pullback(u, t2);
        CartesianSquare inner = pullback(outer.u_prime, star.inclusion);
        for (Structure s : {Structure::Minimal, Structure::Nonempty})
          if (!kernel::aspheric_functor(s, *inner.apex, *outer.apex, inner.v.data()))
            report.failures.push_back(
                {"u#" + std::to_string(i) + "|c-shape#" + std::to_string(b2i),
                 std::string("smooth functor fails the added-final-object base change (") +
                     structure_name(s) + ")",
                 functor_witness_json(*star.cat, *u.target, t2.data())});
      }
    }
  }
}

void register_pair_suite(const char* name, const char* checks, int mo, int mm,
                         std::function<void(PairContext&, SuiteReport&)> body) {
  register_suite({name, checks,
                  [mo, mm, body](const SuiteOptions& opt) {
                    return run_functor_pair_suite(opt, mo, mm, body);
                  },
                  nullptr});
}

}  // namespace

void register_relational_suites() {
  register_suite({"aspheric-product", "a product of aspheric categories is aspheric",
                  run_aspheric_product, nullptr});
  register_pair_suite("aspheric-functor-product",
                      "a product of aspheric functors is aspheric", 2, 3,
                      aspheric_functor_product_body);
  register_pair_suite("aspheric-composition",
                      "a composite of aspheric functors is aspheric", 2, 3,
                      aspheric_composition_body);
  register_pair_suite(
      "aspheric-local-base",
      "over a base, a functor is aspheric iff all its slice localizations are", 2, 3,
      [](PairContext& ctx, SuiteReport& report) {
        aspheric_local_base_body(ctx, report, minimal_structure(), nonempty_structure());
      });
  register_pair_suite("locally-aspheric-closure",
                      "locally aspheric functors are closed under composition and product", 2,
                      3, locally_aspheric_closure_body);
  register_pair_suite("weakly-smooth-base-change",
                      "weakly smooth functors are stable under base change", 2, 3,
                      weakly_smooth_base_change_body);
  register_pair_suite("fibration-stability",
                      "fibrations are stable under composition and base change", 2, 3,
                      fibration_stability_body);
  register_pair_suite("smoothness-localization",
                      "weak/minimal smoothness holds iff it holds on every slice", 2, 4,
                      smoothness_localization_body);
  register_pair_suite("locally-aspheric-smooth-base-change",
                      "locally aspheric functors are stable under smooth base change", 2, 3,
                      locasph_smooth_base_change_body);
  register_pair_suite("carlisse-necessary",
                      "smooth functors pass every enumerated base-change consequence", 2, 3,
                      carlisse_necessary_body);
}

}  // namespace catlab::detail
