// Suites that sweep every functor between every ordered pair of corpus
// categories and evaluate a per-functor law.

#include <atomic>

#include "catlab/adjunction.hpp"
#include "catlab/kernels.hpp"
#include "catlab/parallel.hpp"
#include "suites_internal.hpp"

namespace catlab::detail {

namespace {

using kernel::Structure;

// Returns an error message when the law fails on (A, B, u).
using FunctorLaw = std::optional<std::string> (*)(const FinCat&, const FinCat&,
                                                  const FunctorData&);

SuiteReport run_functor_sweep(const SuiteOptions& opt, FunctorLaw law) {
  SuiteReport report;
  const auto& corpus = cached_corpus(opt.bounds.max_objects, opt.bounds.max_morphisms);
  const std::size_t n = corpus.size();
  std::vector<std::vector<SuiteFailure>> failures(n);
  std::vector<std::vector<std::string>> skips(n);
  std::atomic<std::uint64_t> instances{0};

  parallel_for(
      n,
      [&](std::size_t ai) {
        const FinCat& a = *corpus[ai];
        std::uint64_t local = 0;
        for (std::size_t bi = 0; bi < n; ++bi) {
          const FinCat& b = *corpus[bi];
          if (functor_candidate_count(a, b) > opt.functor_budget) {
            skips[ai].push_back("A#" + std::to_string(ai) + "|B#" + std::to_string(bi));
            continue;
          }
          for_each_functor(a, b, [&](const FunctorData& u) {
            ++local;
            if (auto msg = law(a, b, u))
              failures[ai].push_back(
                  {functor_key(ai, bi, u), *msg, functor_witness_json(a, b, u)});
            return true;
          });
        }
        instances += local;
      },
      opt.threads);

  for (auto& part : failures)
    report.failures.insert(report.failures.end(), part.begin(), part.end());
  for (auto& part : skips) report.skips.insert(report.skips.end(), part.begin(), part.end());
  report.instances = instances.load();
  return report;
}

bool replay_law(const std::string& witness, FunctorLaw law) {
  FinCat a, b;
  FunctorData u;
  if (!decode_functor_witness(witness, a, b, u)) return false;
  return law(a, b, u).has_value();
}

// ---- the laws -------------------------------------------------------------------

std::optional<std::string> law_carfibr(const FinCat& a, const FinCat& b, const FunctorData& u) {
  bool fib = kernel::fibration(a, b, u);
  bool d = kernel::carfibr_d(a, b, u);
  if (fib != d)
    return "is_fibration = " + std::to_string(fib) +
           " but the Δ1→Δ2 right-adjoint characterization gives " + std::to_string(d);
  return std::nullopt;
}

std::optional<std::string> law_carflisse(const FinCat& a, const FinCat& b,
                                         const FunctorData& u) {
  for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
    bool wa = kernel::weakly_smooth_a(s, a, b, u);
    bool wb = kernel::weakly_smooth_b(s, a, b, u);
    bool wc = kernel::weakly_smooth_c(s, a, b, u);
    bool wd = kernel::weakly_smooth_d(s, a, b, u);
    if (wa != wb || wb != wc || wc != wd)
      return std::string("weak-smoothness conditions disagree for structure ") +
             (s == Structure::Minimal ? "minimal" : "nonempty") + ": a=" +
             std::to_string(wa) + " b=" + std::to_string(wb) + " c=" + std::to_string(wc) +
             " d=" + std::to_string(wd);
  }
  return std::nullopt;
}

std::optional<std::string> law_prefib_weak(const FinCat& a, const FinCat& b,
                                           const FunctorData& u) {
  bool pre = kernel::prefibration(a, b, u);
  bool weak = kernel::weakly_smooth_a(Structure::Minimal, a, b, u);
  if (pre != weak)
    return "is_prefibration = " + std::to_string(pre) + " but weakly-smooth(minimal) = " +
           std::to_string(weak);
  return std::nullopt;
}

std::optional<std::string> law_radj_aspheric(const FinCat& a, const FinCat& b,
                                             const FunctorData& u) {
  if (!kernel::aspheric_functor(Structure::Minimal, a, b, u)) return std::nullopt;
  if (!kernel::aspheric_functor(Structure::Nonempty, a, b, u))
    return std::string("functor with a right adjoint is not nonempty-aspheric");
  return std::nullopt;
}

std::optional<std::string> law_equivalence_aspheric(const FinCat& a, const FinCat& b,
                                                    const FunctorData& u) {
  if (!kernel::equivalence(a, b, u)) return std::nullopt;
  if (!kernel::aspheric_functor(Structure::Minimal, a, b, u))
    return std::string("equivalence is not minimal-aspheric");
  if (!kernel::aspheric_functor(Structure::Nonempty, a, b, u))
    return std::string("equivalence is not nonempty-aspheric");
  return std::nullopt;
}

std::optional<std::string> law_precof_fibers(const FinCat& a, const FinCat& b,
                                             const FunctorData& u) {
  if (!kernel::precofibration(a, b, u)) return std::nullopt;
  for (Structure s : {Structure::Minimal, Structure::Nonempty}) {
    bool fibers_ok = true;
    for (Idx ob = 0; ob < b.n_objects() && fibers_ok; ++ob)
      fibers_ok = kernel::fiber_is_member(s, a, b, u, ob);
    if (fibers_ok && !kernel::aspheric_functor(s, a, b, u))
      return std::string("precofibration with member fibers is not aspheric (") +
             (s == Structure::Minimal ? "minimal" : "nonempty") + ")";
  }
  return std::nullopt;
}

std::optional<std::string> law_smooth_weakly(const FinCat& a, const FinCat& b,
                                             const FunctorData& u) {
  if (!kernel::fibration(a, b, u)) return std::nullopt;  // fibration = proved smooth
  for (Structure s : {Structure::Minimal, Structure::Nonempty})
    if (!kernel::weakly_smooth_a(s, a, b, u))
      return std::string("smooth (fibration) functor is not weakly smooth (") +
             (s == Structure::Minimal ? "minimal" : "nonempty") + ")";
  return std::nullopt;
}

std::optional<std::string> law_smooth_locasph(const FinCat& a, const FinCat& b,
                                              const FunctorData& u) {
  if (!kernel::fibration(a, b, u)) return std::nullopt;
  for (Structure s : {Structure::Minimal, Structure::Nonempty})
    if (!kernel::locally_aspheric(s, a, b, u))
      return std::string("smooth (fibration) functor is not locally aspheric (") +
             (s == Structure::Minimal ? "minimal" : "nonempty") + ")";
  return std::nullopt;
}

std::optional<std::string> law_lociso_smooth(const FinCat& a, const FinCat& b,
                                             const FunctorData& u) {
  if (!kernel::local_isomorphism(a, b, u)) return std::nullopt;
  if (!kernel::fibration(a, b, u))
    return std::string("local isomorphism is not minimal-smooth (not a fibration)");
  return std::nullopt;
}

// Minimal-aspheric (kernel) against the constructed adjunction (library).
std::optional<std::string> law_minasph_radj(const FinCat& a, const FinCat& b,
                                            const FunctorData& u) {
  bool min_aspheric = kernel::aspheric_functor(Structure::Minimal, a, b, u);
  FinFunctor f{share(FinCat(a)), share(FinCat(b)), u.object_map, u.morphism_map};
  auto adj = construct_right_adjoint(f);
  bool constructed = adj.has_value() && verify_adjunction(*adj).ok;
  if (min_aspheric != constructed)
    return "minimal-aspheric = " + std::to_string(min_aspheric) +
           " but construct_right_adjoint+verify = " + std::to_string(constructed);
  return std::nullopt;
}

SuiteOptions clamp_bounds(SuiteOptions opt, int mo, int mm) {
  opt.bounds.max_objects = std::min(opt.bounds.max_objects, mo);
  opt.bounds.max_morphisms = std::min(opt.bounds.max_morphisms, mm);
  return opt;
}

void add(const char* name, const char* checks, FunctorLaw law) {
  register_suite({name, checks,
                  [law](const SuiteOptions& opt) { return run_functor_sweep(opt, law); },
                  [law](const std::string& w) { return replay_law(w, law); }});
}

}  // namespace

void register_sweep_suites() {
  add("carfibr-equivalence",
      "fibration <=> minimal-smooth <=> right adjoints on every Δ1→Δ2 base change",
      law_carfibr);
  add("carflisse-equivalence",
      "the four weak-smoothness characterizations agree (minimal and nonempty)",
      law_carflisse);
  add("prefibration-weakly-smooth", "prefibration <=> weakly smooth for the minimal structure",
      law_prefib_weak);
  add("right-adjoint-aspheric", "a functor with a right adjoint is aspheric",
      law_radj_aspheric);
  add("equivalence-aspheric", "an equivalence is aspheric", law_equivalence_aspheric);
  add("precofibration-aspheric-fibers",
      "a precofibration with aspheric fibers is aspheric", law_precof_fibers);
  add("smooth-implies-weakly-smooth", "a smooth functor is weakly smooth", law_smooth_weakly);
  add("smooth-locally-aspheric", "a smooth functor is locally aspheric", law_smooth_locasph);
  add("local-isomorphism-smooth", "a local isomorphism is smooth", law_lociso_smooth);

  register_suite(
      {"minimal-aspheric-right-adjoint",
       "minimal-aspheric <=> a right adjoint exists (constructed and verified)",
       [](const SuiteOptions& opt) {
         return run_functor_sweep(clamp_bounds(opt, 2, 4), law_minasph_radj);
       },
       [](const std::string& w) { return replay_law(w, law_minasph_radj); }});
}

}  // namespace catlab::detail
