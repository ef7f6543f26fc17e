#include "catlab/format.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace catlab {

using nlohmann::json;

const char* document_kind_name(DocumentKind k) {
  switch (k) {
    case DocumentKind::Category: return "category";
    case DocumentKind::Functor: return "functor";
    case DocumentKind::Diagram: return "diagram";
    case DocumentKind::Square: return "square";
    case DocumentKind::NatTrans: return "nat-trans";
  }
  return "unknown";
}

namespace {

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

struct Parser {
  std::string base_dir;
  std::vector<ParseError> errors;

  void fail(ErrorCode code, std::string msg, int line = 0, int col = 0) {
    errors.push_back({code, std::move(msg), line, col});
  }

  std::optional<FinCatPtr> category_payload(const json& j) {
    if (!j.is_object()) {
      fail(ErrorCode::InvalidDocument, "category payload is not an object");
      return std::nullopt;
    }
    RawCategory raw;
    std::set<std::string> seen_morphisms;
    for (const auto& o : j.value("objects", json::array())) raw.objects.push_back(o);
    for (const auto& m : j.value("morphisms", json::array())) {
      std::string id = m.value("id", "");
      if (!seen_morphisms.insert(id).second) {
        fail(ErrorCode::SyntaxError, "duplicated morphism id '" + id + "'");
        return std::nullopt;
      }
      raw.morphisms.push_back({id, m.value("src", ""), m.value("tgt", "")});
    }
    for (const auto& e : j.value("compose", json::array()))
      raw.compose.push_back(
          {e.value("after", ""), e.value("before", ""), e.value("equals", "")});
    auto result = validate_category(raw);
    if (!result.ok()) {
      for (const auto& v : result.violations) fail(v.code, v.message);
      return std::nullopt;
    }
    return share(std::move(*result.category));
  }

  // A category reference: inline payload or relative path string.
  std::optional<FinCatPtr> category_ref(const json& j) {
    if (j.is_string()) {
      std::filesystem::path p = std::filesystem::path(base_dir) / j.get<std::string>();
      std::ifstream in(p);
      if (!in) {
        fail(ErrorCode::DanglingReference, "cannot open referenced file '" + p.string() + "'");
        return std::nullopt;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      ParseResult sub = parse_document(ss.str(), p.parent_path().string());
      if (!sub.ok() || sub.document->kind != DocumentKind::Category) {
        fail(ErrorCode::DanglingReference,
             "referenced file '" + p.string() + "' is not a valid category document");
        return std::nullopt;
      }
      return sub.document->category();
    }
    if (j.is_object() && j.contains("kind")) {
      // full nested document
      if (j.value("kind", "") != "category") {
        fail(ErrorCode::InvalidDocument, "nested document is not a category");
        return std::nullopt;
      }
      return category_payload(j);
    }
    return category_payload(j);
  }

  std::optional<FinFunctor> functor_payload(const json& j) {
    std::optional<FinCatPtr> src, tgt;
    if (j.contains("source")) src = category_ref(j["source"]);
    else fail(ErrorCode::InvalidDocument, "functor lacks a source");
    if (!src) return std::nullopt;
    if (j.contains("target")) tgt = category_ref(j["target"]);
    else fail(ErrorCode::InvalidDocument, "functor lacks a target");
    if (!tgt) return std::nullopt;
    RawFunctor raw;
    for (const auto& [k, v] : j.value("object_map", json::object()).items())
      raw.object_map[k] = v.get<std::string>();
    for (const auto& [k, v] : j.value("morphism_map", json::object()).items())
      raw.morphism_map[k] = v.get<std::string>();
    auto result = validate_functor(raw, *src, *tgt);
    if (!result.ok()) {
      for (const auto& v : result.violations) fail(v.code, v.message);
      return std::nullopt;
    }
    return result.functor;
  }

  std::optional<FinFunctor> functor_ref(const json& j) {
    if (j.is_string()) {
      std::filesystem::path p = std::filesystem::path(base_dir) / j.get<std::string>();
      std::ifstream in(p);
      if (!in) {
        fail(ErrorCode::DanglingReference, "cannot open referenced file '" + p.string() + "'");
        return std::nullopt;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      ParseResult sub = parse_document(ss.str(), p.parent_path().string());
      if (!sub.ok() || sub.document->kind != DocumentKind::Functor) {
        fail(ErrorCode::DanglingReference,
             "referenced file '" + p.string() + "' is not a valid functor document");
        return std::nullopt;
      }
      return sub.document->functor();
    }
    return functor_payload(j);
  }

  std::optional<CatDiagram> diagram_payload(const json& j) {
    std::optional<FinCatPtr> index;
    if (j.contains("index")) index = category_ref(j["index"]);
    else fail(ErrorCode::InvalidDocument, "diagram lacks an index");
    if (!index) return std::nullopt;
    CatDiagram d;
    d.index = *index;
    const FinCat& idx = **index;
    d.at_object.resize(idx.n_objects());
    for (Idx i = 0; i < idx.n_objects(); ++i) {
      const std::string& name = idx.objects[i];
      if (!j.contains("at_object") || !j["at_object"].contains(name)) {
        fail(ErrorCode::InvalidDocument, "diagram lacks a value at object '" + name + "'");
        return std::nullopt;
      }
      auto v = category_ref(j["at_object"][name]);
      if (!v) return std::nullopt;
      d.at_object[i] = *v;
    }
    d.at_arrow.resize(idx.n_morphisms());
    for (Idx k = 0; k < idx.n_morphisms(); ++k) {
      const std::string& name = idx.morphisms[k];
      if (idx.identity[idx.src[k]] == k &&
          (!j.contains("at_arrow") || !j["at_arrow"].contains(name))) {
        d.at_arrow[k] = identity_functor(d.at_object[idx.src[k]]);
        continue;
      }
      if (!j.contains("at_arrow") || !j["at_arrow"].contains(name)) {
        fail(ErrorCode::InvalidDocument, "diagram lacks a functor at arrow '" + name + "'");
        return std::nullopt;
      }
      const json& fj = j["at_arrow"][name];
      RawFunctor raw;
      for (const auto& [k2, v] : fj.value("object_map", json::object()).items())
        raw.object_map[k2] = v.get<std::string>();
      for (const auto& [k2, v] : fj.value("morphism_map", json::object()).items())
        raw.morphism_map[k2] = v.get<std::string>();
      auto result =
          validate_functor(raw, d.at_object[idx.src[k]], d.at_object[idx.tgt[k]]);
      if (!result.ok()) {
        for (const auto& v : result.violations) fail(v.code, v.message);
        return std::nullopt;
      }
      d.at_arrow[k] = *result.functor;
    }
    auto viol = validate_diagram(d);
    if (!viol.empty()) {
      for (const auto& v : viol) fail(v.code, v.message);
      return std::nullopt;
    }
    return d;
  }
};

json category_json(const FinCat& c) {
  json j;
  j["kind"] = "category";
  j["format_version"] = 1;
  j["objects"] = json::array();
  for (const auto& o : c.objects) j["objects"].push_back(o);
  j["morphisms"] = json::array();
  const Idx m = c.n_morphisms();
  std::vector<bool> is_id(m, false);
  for (Idx o = 0; o < c.n_objects(); ++o) is_id[c.identity[o]] = true;
  for (Idx f = 0; f < m; ++f) {
    if (is_id[f]) continue;
    json mj;
    mj["id"] = c.morphisms[f];
    mj["src"] = c.objects[c.src[f]];
    mj["tgt"] = c.objects[c.tgt[f]];
    j["morphisms"].push_back(mj);
  }
  j["compose"] = json::array();
  for (Idx g = 0; g < m; ++g)
    for (Idx f = 0; f < m; ++f) {
      if (is_id[g] || is_id[f] || !c.composable(g, f)) continue;
      json e;
      e["after"] = c.morphisms[g];
      e["before"] = c.morphisms[f];
      e["equals"] = c.morphisms[c.compose(g, f)];
      j["compose"].push_back(e);
    }
  return j;
}

json functor_json(const FinFunctor& u) {
  json j;
  j["kind"] = "functor";
  j["format_version"] = 1;
  j["source"] = category_json(*u.source);
  j["target"] = category_json(*u.target);
  json om = json::object();
  for (Idx o = 0; o < u.source->n_objects(); ++o)
    om[u.source->objects[o]] = u.target->objects[u.object_map[o]];
  j["object_map"] = om;
  json mm = json::object();
  for (Idx f = 0; f < u.source->n_morphisms(); ++f) {
    if (u.source->identity[u.source->src[f]] == f) continue;  // implicit
    mm[u.source->morphisms[f]] = u.target->morphisms[u.morphism_map[f]];
  }
  j["morphism_map"] = mm;
  return j;
}

json diagram_json(const CatDiagram& d) {
  json j;
  j["kind"] = "diagram";
  j["format_version"] = 1;
  j["index"] = category_json(*d.index);
  json ao = json::object();
  const FinCat& idx = *d.index;
  for (Idx i = 0; i < idx.n_objects(); ++i) ao[idx.objects[i]] = category_json(*d.at_object[i]);
  j["at_object"] = ao;
  json aa = json::object();
  for (Idx k = 0; k < idx.n_morphisms(); ++k) {
    if (idx.identity[idx.src[k]] == k) continue;
    const FinFunctor& f = d.at_arrow[k];
    json fj;
    json om = json::object();
    for (Idx o = 0; o < f.source->n_objects(); ++o)
      om[f.source->objects[o]] = f.target->objects[f.object_map[o]];
    fj["object_map"] = om;
    json mm = json::object();
    for (Idx m2 = 0; m2 < f.source->n_morphisms(); ++m2) {
      if (f.source->identity[f.source->src[m2]] == m2) continue;
      mm[f.source->morphisms[m2]] = f.target->morphisms[f.morphism_map[m2]];
    }
    fj["morphism_map"] = mm;
    aa[idx.morphisms[k]] = fj;
  }
  j["at_arrow"] = aa;
  return j;
}

json nat_trans_json(const NatTrans& t) {
  json j;
  j["kind"] = "nat-trans";
  j["format_version"] = 1;
  j["source"] = functor_json(t.source);
  j["target"] = functor_json(t.target);
  json comp = json::object();
  for (Idx o = 0; o < t.source.source->n_objects(); ++o)
    comp[t.source.source->objects[o]] = t.source.target->morphisms[t.components[o]];
  j["components"] = comp;
  return j;
}

json square_json(const CartesianSquare& s) {
  json j;
  j["kind"] = "square";
  j["format_version"] = 1;
  j["u"] = functor_json(s.u);
  j["w"] = functor_json(s.w);
  return j;
}

}  // namespace

ParseResult parse_document(const std::string& text, const std::string& base_dir) {
  ParseResult out;
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    out.errors.push_back({ErrorCode::SyntaxError, e.what(), line, col});
    return out;
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    out.errors.push_back({ErrorCode::UnknownKind, "document lacks a string 'kind' field"});
    return out;
  }
  const std::string kind = j["kind"];
  const int version = j.value("format_version", 0);
  if (version != 1) {
    out.errors.push_back({ErrorCode::VersionUnsupported,
                          "unsupported format_version " + std::to_string(version)});
    return out;
  }

  Parser p{base_dir, {}};
  DocumentEnvelope env;
  env.format_version = version;
  if (kind == "category") {
    env.kind = DocumentKind::Category;
    auto c = p.category_payload(j);
    if (c) env.payload = *c;
  } else if (kind == "functor") {
    env.kind = DocumentKind::Functor;
    auto f = p.functor_payload(j);
    if (f) env.payload = *f;
  } else if (kind == "diagram") {
    env.kind = DocumentKind::Diagram;
    auto d = p.diagram_payload(j);
    if (d) env.payload = *d;
  } else if (kind == "square") {
    env.kind = DocumentKind::Square;
    std::optional<FinFunctor> u, w;
    if (j.contains("u")) u = p.functor_ref(j["u"]);
    if (j.contains("w")) w = p.functor_ref(j["w"]);
    if (u && w) {
      if (!(*u->target == *w->target)) {
        p.fail(ErrorCode::TargetMismatch, "square legs do not share a target");
      } else {
        env.payload = pullback(*u, *w);
      }
    } else if (!j.contains("u") || !j.contains("w")) {
      p.fail(ErrorCode::InvalidDocument, "square lacks 'u' or 'w'");
    }
  } else if (kind == "nat-trans") {
    env.kind = DocumentKind::NatTrans;
    std::optional<FinFunctor> f, g;
    if (j.contains("source")) f = p.functor_ref(j["source"]);
    if (j.contains("target")) g = p.functor_ref(j["target"]);
    if (f && g) {
      NatTrans t;
      t.source = *f;
      t.target = *g;
      t.components.assign(f->source->n_objects(), kNoIdx);
      bool ok = true;
      for (const auto& [k, v] : j.value("components", json::object()).items()) {
        auto o = f->source->object_index(k);
        auto m = f->target->morphism_index(v.get<std::string>());
        if (!o || !m) {
          p.fail(ErrorCode::DanglingReference, "bad component '" + k + "'");
          ok = false;
          break;
        }
        t.components[*o] = *m;
      }
      for (Idx o = 0; ok && o < f->source->n_objects(); ++o)
        if (t.components[o] == kNoIdx) {
          p.fail(ErrorCode::InvalidDocument,
                 "missing component at '" + f->source->objects[o] + "'");
          ok = false;
        }
      if (ok && !naturality_holds(t)) {
        p.fail(ErrorCode::NotNatural, "components are not natural");
        ok = false;
      }
      if (ok) env.payload = t;
    } else if (!j.contains("source") || !j.contains("target")) {
      p.fail(ErrorCode::InvalidDocument, "nat-trans lacks 'source' or 'target'");
    }
  } else {
    out.errors.push_back({ErrorCode::UnknownKind, "unknown document kind '" + kind + "'"});
    return out;
  }

  if (!p.errors.empty()) {
    out.errors = std::move(p.errors);
    return out;
  }
  out.document = std::move(env);
  return out;
}

ParseResult load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult out;
    out.errors.push_back({ErrorCode::SyntaxError, "cannot open file '" + path + "'"});
    return out;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), std::filesystem::path(path).parent_path().string());
}

std::string serialize(const DocumentEnvelope& doc) {
  json j;
  switch (doc.kind) {
    case DocumentKind::Category: j = category_json(*doc.category()); break;
    case DocumentKind::Functor: j = functor_json(doc.functor()); break;
    case DocumentKind::Diagram: j = diagram_json(doc.diagram()); break;
    case DocumentKind::Square: j = square_json(doc.square()); break;
    case DocumentKind::NatTrans: j = nat_trans_json(doc.nat_trans()); break;
  }
  return j.dump(2) + "\n";
}

std::string serialize_category(const FinCat& c) { return category_json(c).dump(2) + "\n"; }

std::string serialize_functor(const FinFunctor& u) { return functor_json(u).dump(2) + "\n"; }

DocumentEnvelope envelope_of(FinCatPtr c) {
  DocumentEnvelope e;
  e.kind = DocumentKind::Category;
  e.payload = std::move(c);
  return e;
}

DocumentEnvelope envelope_of(const FinFunctor& u) {
  DocumentEnvelope e;
  e.kind = DocumentKind::Functor;
  e.payload = u;
  return e;
}

}  // namespace catlab
