// catlab: finite-category computations, asphericity/smoothness predicates, and
// exhaustive verification suites over JSON documents.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "catlab/adjunction.hpp"
#include "catlab/asphericity.hpp"
#include "catlab/enumeration.hpp"
#include "catlab/fibration.hpp"
#include "catlab/format.hpp"
#include "catlab/kan.hpp"
#include "catlab/suites.hpp"

using namespace catlab;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void bail(int code, const std::string& message) {
  throw CliError{code, message};
}

DocumentEnvelope load_or_bail(const std::string& path, DocumentKind expected) {
  ParseResult pr = load_document(path);
  if (!pr.ok()) {
    std::string msg = "invalid document '" + path + "':";
    for (const auto& e : pr.errors) {
      msg += "\n  [" + std::string(error_code_name(e.code)) + "] " + e.message;
      if (e.line > 0) msg += " (line " + std::to_string(e.line) + ", column " +
                             std::to_string(e.column) + ")";
    }
    bail(kExitInvalid, msg);
  }
  if (pr.document->kind != expected)
    bail(kExitInvalid, "'" + path + "' is a " +
                           document_kind_name(pr.document->kind) + " document, expected " +
                           document_kind_name(expected));
  return std::move(*pr.document);
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) bail(kExitInvalid, "cannot write '" + out_path + "'");
  out << text;
}

Idx object_or_bail(const FinCat& c, const std::string& id) {
  auto i = c.object_index(id);
  if (!i) bail(kExitInvalid, "unknown object '" + id + "'");
  return *i;
}

Idx morphism_or_bail(const FinCat& c, const std::string& id) {
  auto i = c.morphism_index(id);
  if (!i) bail(kExitInvalid, "unknown morphism '" + id + "'");
  return *i;
}

void emit_category(FinCatPtr c, const std::string& out) {
  emit(serialize(envelope_of(std::move(c))), out);
}

void emit_functor(const FinFunctor& f, const std::string& out) {
  emit(serialize(envelope_of(f)), out);
}

void emit_diagram(const CatDiagram& d, const std::string& out) {
  DocumentEnvelope e;
  e.kind = DocumentKind::Diagram;
  e.payload = d;
  emit(serialize(e), out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-category computations, asphericity structures, and theorem suites"};
  app.require_subcommand(1);

  std::string in1, in2, out, at, arrow, object, structure = "minimal", report_path, suite;
  int max_objects = 3, max_morphisms = 6, samples = 200;
  std::uint64_t seed = 0;
  bool list_suites = false;

  // ---- validate ----
  auto* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("file", in1)->required();

  // ---- construct ----
  auto* construct = app.add_subcommand("construct", "build a derived category");
  construct->require_subcommand(1);
  auto add_common = [&](CLI::App* cmd, bool two_inputs = false) {
    cmd->add_option("input", in1)->required();
    if (two_inputs) cmd->add_option("input2", in2)->required();
    cmd->add_option("-o,--out", out, "output file (default: stdout)");
    return cmd;
  };
  auto* c_op = add_common(construct->add_subcommand("op", "opposite category"));
  auto* c_product = add_common(construct->add_subcommand("product", "binary product"), true);
  auto* c_slice = add_common(construct->add_subcommand("slice", "slice A/c of a functor"));
  c_slice->add_option("--at", at, "object of the target")->required();
  auto* c_coslice = add_common(construct->add_subcommand("coslice", "coslice c\\A"));
  c_coslice->add_option("--at", at)->required();
  auto* c_fiber = add_common(construct->add_subcommand("fiber", "fiber over an object"));
  c_fiber->add_option("--at", at)->required();
  auto* c_pullback =
      add_common(construct->add_subcommand("pullback", "strict pullback of two functors"), true);
  auto* c_groth = add_common(
      construct->add_subcommand("grothendieck", "total category of a diagram"));
  std::string projection_out;
  c_groth->add_option("--projection-out", projection_out, "write the projection functor");
  auto* c_final = add_common(construct->add_subcommand("add-final", "freely add a final object"));
  auto* c_comma = add_common(construct->add_subcommand("comma-square", "comma 2-square"), true);
  auto* c_lift = add_common(construct->add_subcommand("lift-category", "lift category A(a1,g)"));
  c_lift->add_option("--arrow", arrow, "arrow of the base")->required();
  c_lift->add_option("--object", object, "object over the arrow target")->required();

  // ---- check ----
  auto* check = app.add_subcommand("check", "decide a predicate (exit 0 = true, 1 = false)");
  check->require_subcommand(1);
  std::vector<CLI::App*> checks;
  for (const char* name :
       {"final-object", "aspheric", "aspheric-functor", "locally-aspheric", "right-adjoint",
        "equivalence", "prefibration", "fibration", "precofibration", "cofibration",
        "weakly-smooth", "smooth"}) {
    auto* cmd = check->add_subcommand(name, name);
    cmd->add_option("input", in1)->required();
    cmd->add_option("--structure", structure, "minimal|nonempty (default minimal)");
    cmd->add_option("--max-objects", max_objects, "counterexample search bound");
    cmd->add_option("--max-morphisms", max_morphisms, "counterexample search bound");
    checks.push_back(cmd);
  }

  // ---- kan ----
  auto* kan_cmd = app.add_subcommand("kan", "Θ/Θ' machinery and verifications");
  kan_cmd->require_subcommand(1);
  auto* k_theta = kan_cmd->add_subcommand("theta", "Θ_I of an object of Cat/I");
  k_theta->add_option("functor", in1, "structure functor A -> I")->required();
  k_theta->add_option("-o,--out", out);
  auto* k_theta_prime = kan_cmd->add_subcommand("theta-prime", "Θ'_I of a diagram");
  k_theta_prime->add_option("diagram", in1)->required();
  k_theta_prime->add_option("-o,--out", out);
  auto* k_shriek = kan_cmd->add_subcommand("shriek", "left homotopical extension w_!");
  k_shriek->add_option("w", in1, "functor J -> I")->required();
  k_shriek->add_option("diagram", in2, "diagram over J")->required();
  k_shriek->add_option("-o,--out", out);
  auto* k_kappa = kan_cmd->add_subcommand("kappa", "base change comparison component");
  k_kappa->add_option("square", in1)->required();
  k_kappa->add_option("diagram", in2, "diagram over the right-leg source")->required();
  k_kappa->add_option("--at", at, "object of the bottom-leg source")->required();
  k_kappa->add_option("-o,--out", out);
  auto* k_eps = kan_cmd->add_subcommand("epsilon", "counit component ε_{F,i}");
  k_eps->add_option("w", in1, "functor J -> I")->required();
  k_eps->add_option("diagram", in2, "diagram over I")->required();
  k_eps->add_option("--at", at, "object of I")->required();
  k_eps->add_option("-o,--out", out);
  auto* k_eta = kan_cmd->add_subcommand("eta", "unit component η_{(A,v)}");
  k_eta->add_option("w", in1, "functor J -> I")->required();
  k_eta->add_option("structure", in2, "structure functor A -> J")->required();
  k_eta->add_option("-o,--out", out);
  auto* k_lemmeclef = kan_cmd->add_subcommand(
      "verify-lemmeclef", "verify the factorization on every diagram morphism F -> G");
  k_lemmeclef->add_option("F", in1)->required();
  k_lemmeclef->add_option("G", in2)->required();
  auto* k_cartint =
      kan_cmd->add_subcommand("verify-cartint", "verify ∫(Fw) = J ×_I ∫F bit-exact");
  k_cartint->add_option("w", in1)->required();
  k_cartint->add_option("diagram", in2)->required();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run a named theorem suite");
  verify->add_option("--suite", suite);
  verify->add_flag("--list", list_suites, "list registered suites");
  verify->add_option("--max-objects", max_objects);
  verify->add_option("--max-morphisms", max_morphisms);
  verify->add_option("--seed", seed);
  verify->add_option("--samples", samples);
  verify->add_option("--report", report_path, "write a JSON report (also on failure)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      ParseResult pr = load_document(in1);
      if (!pr.ok()) {
        for (const auto& e : pr.errors) {
          std::cerr << "[" << error_code_name(e.code) << "] " << e.message;
          if (e.line > 0) std::cerr << " (line " << e.line << ", column " << e.column << ")";
          std::cerr << "\n";
        }
        return kExitInvalid;
      }
      std::cout << "valid " << document_kind_name(pr.document->kind) << "\n";
      return kExitTrue;
    }

    if (construct->parsed()) {
      if (c_op->parsed()) {
        auto doc = load_or_bail(in1, DocumentKind::Category);
        emit_category(share(opposite(*doc.category())), out);
      } else if (c_product->parsed()) {
        auto a = load_or_bail(in1, DocumentKind::Category);
        auto b = load_or_bail(in2, DocumentKind::Category);
        emit_category(share(product(*a.category(), *b.category())), out);
      } else if (c_slice->parsed()) {
        auto f = load_or_bail(in1, DocumentKind::Functor);
        emit_category(slice(f.functor(), object_or_bail(*f.functor().target, at)).cat, out);
      } else if (c_coslice->parsed()) {
        auto f = load_or_bail(in1, DocumentKind::Functor);
        emit_category(coslice(f.functor(), object_or_bail(*f.functor().target, at)).cat, out);
      } else if (c_fiber->parsed()) {
        auto f = load_or_bail(in1, DocumentKind::Functor);
        emit_category(fiber(f.functor(), object_or_bail(*f.functor().target, at)).cat, out);
      } else if (c_pullback->parsed()) {
        auto u = load_or_bail(in1, DocumentKind::Functor);
        auto w = load_or_bail(in2, DocumentKind::Functor);
        CartesianSquare sq = pullback(u.functor(), w.functor());
        emit_category(sq.apex, out);
      } else if (c_groth->parsed()) {
        auto d = load_or_bail(in1, DocumentKind::Diagram);
        GrothendieckResult gr = grothendieck(d.diagram());
        emit_category(gr.total, out);
        if (!projection_out.empty()) emit_functor(gr.projection, projection_out);
      } else if (c_final->parsed()) {
        auto c = load_or_bail(in1, DocumentKind::Category);
        emit_category(add_final(*c.category()).cat, out);
      } else if (c_comma->parsed()) {
        auto u = load_or_bail(in1, DocumentKind::Functor);
        auto w = load_or_bail(in2, DocumentKind::Functor);
        emit_category(comma_square(u.functor(), w.functor()).comma, out);
      } else if (c_lift->parsed()) {
        auto f = load_or_bail(in1, DocumentKind::Functor);
        const FinFunctor& u = f.functor();
        emit_category(share(lift_category(u, morphism_or_bail(*u.target, arrow),
                                          object_or_bail(*u.source, object))),
                      out);
      }
      return kExitTrue;
    }

    if (check->parsed()) {
      const AsphericityStructure& s = structure_by_name(structure);
      const std::string name = check->get_subcommands().front()->get_name();
      if (name == "final-object" || name == "aspheric") {
        auto c = load_or_bail(in1, DocumentKind::Category);
        bool ok = name == "final-object" ? has_final_object(*c.category())
                                         : is_aspheric(s, *c.category());
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? kExitTrue : kExitFalse;
      }
      auto f = load_or_bail(in1, DocumentKind::Functor);
      const FinFunctor& u = f.functor();
      bool ok = false;
      if (name == "aspheric-functor") ok = is_aspheric_functor(s, u);
      else if (name == "locally-aspheric") ok = is_locally_aspheric(s, u);
      else if (name == "right-adjoint") ok = has_right_adjoint(u);
      else if (name == "equivalence") ok = is_equivalence(u);
      else if (name == "prefibration") ok = is_prefibration(u);
      else if (name == "fibration") ok = is_fibration(u);
      else if (name == "precofibration") ok = is_precofibration(u);
      else if (name == "cofibration") ok = is_cofibration(u);
      else if (name == "weakly-smooth") ok = is_weakly_smooth(s, u);
      else if (name == "smooth") {
        SmoothVerdict v = is_smooth(s, u, Bounds{max_objects, max_morphisms});
        switch (v.status) {
          case SmoothVerdict::Status::Proved:
            std::cout << "proved\n";
            return kExitTrue;
          case SmoothVerdict::Status::Refuted:
            std::cout << "refuted (base change through '"
                      << (v.witness ? v.witness->failing_slice_object : std::string()) << "')\n";
            return kExitFalse;
          case SmoothVerdict::Status::Evidence:
            std::cout << "no counterexample within bounds (" << v.checked_bound.max_objects
                      << "," << v.checked_bound.max_morphisms << ")\n";
            return kExitTrue;
        }
      }
      std::cout << (ok ? "true" : "false") << "\n";
      return ok ? kExitTrue : kExitFalse;
    }

    if (kan_cmd->parsed()) {
      if (k_theta->parsed()) {
        auto f = load_or_bail(in1, DocumentKind::Functor);
        const FinFunctor& v = f.functor();
        emit_diagram(theta(v.target, {v.source, v}), out);
    } else if (k_theta_prime->parsed()) {
        auto d = load_or_bail(in1, DocumentKind::Diagram);
        emit_functor(theta_prime(d.diagram()).structure, out);
      } else if (k_shriek->parsed()) {
        auto w = load_or_bail(in1, DocumentKind::Functor);
        auto d = load_or_bail(in2, DocumentKind::Diagram);
        emit_diagram(shriek(w.functor(), d.diagram()), out);
      } else if (k_kappa->parsed()) {
        auto sq = load_or_bail(in1, DocumentKind::Square);
        auto d = load_or_bail(in2, DocumentKind::Diagram);
        Idx bp = object_or_bail(*sq.square().w.source, at);
        emit_functor(kappa(sq.square(), d.diagram(), bp), out);
      } else if (k_eps->parsed()) {
        auto w = load_or_bail(in1, DocumentKind::Functor);
        auto d = load_or_bail(in2, DocumentKind::Diagram);
        Idx i = object_or_bail(*w.functor().target, at);
        emit_functor(epsilon_component(w.functor(), d.diagram(), i), out);
      } else if (k_eta->parsed()) {
        auto w = load_or_bail(in1, DocumentKind::Functor);
        auto v = load_or_bail(in2, DocumentKind::Functor);
        emit_functor(eta_component(w.functor(), {v.functor().source, v.functor()}).eta, out);
      } else if (k_lemmeclef->parsed()) {
        auto fd = load_or_bail(in1, DocumentKind::Diagram);
        auto gd = load_or_bail(in2, DocumentKind::Diagram);
        auto morphisms = enumerate_diagram_morphisms(fd.diagram(), gd.diagram());
        std::size_t failures = 0;
        for (const auto& u : morphisms)
          if (!verify_lemmeclef(u).ok()) ++failures;
        std::cout << morphisms.size() << " diagram morphisms, " << failures << " failures\n";
        return failures == 0 ? kExitTrue : kExitFalse;
      } else if (k_cartint->parsed()) {
        auto w = load_or_bail(in1, DocumentKind::Functor);
        auto d = load_or_bail(in2, DocumentKind::Diagram);
        bool ok = verify_cartint(w.functor(), d.diagram());
        std::cout << (ok ? "true" : "false") << "\n";
        return ok ? kExitTrue : kExitFalse;
      }
      return kExitTrue;
    }

    if (verify->parsed()) {
      if (list_suites) {
        for (const auto& info : suite_registry())
          std::cout << info.name << "\n    " << info.checks << "\n";
        return kExitTrue;
      }
      if (suite.empty()) bail(kExitInvalid, "verify requires --suite <name> or --list");
      SuiteOptions options;
      options.bounds = {max_objects, max_morphisms};
      options.seed = seed;
      options.samples = samples;
      SuiteReport r = run_suite(suite, options);
      if (!report_path.empty()) {
        std::ofstream rf(report_path, std::ios::binary);
        rf << report_to_json(r);
      }
      std::cout << r.suite << ": " << r.instances << " instances, " << r.failures.size()
                << " failures";
      if (!r.skips.empty()) std::cout << ", " << r.skips.size() << " skips";
      std::cout << " (" << static_cast<long>(r.wall_ms) << " ms)\n";
      for (const auto& failure : r.failures)
        std::cout << "  FAIL " << failure.instance_key << ": " << failure.message << "\n";
      return r.failures.empty() ? kExitTrue : kExitFalse;
    }
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const Error& e) {
    std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitTrue;
}
