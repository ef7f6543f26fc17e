#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "catlab/enumeration.hpp"
#include "catlab/format.hpp"
#include "catlab/kan.hpp"

using namespace catlab;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data_path(const std::string& name) {
  return std::string(CATLAB_TEST_DATA_DIR) + "/" + name;
}

std::string golden_path(const std::string& name) {
  return std::string(CATLAB_GOLDEN_DIR) + "/" + name;
}

CatDiagram mixed_diagram() {
  ParseResult pr = load_document(data_path("mixed_diagram.json"));
  REQUIRE(pr.ok());
  return pr.document->diagram();
}

}  // namespace

TEST_CASE("the terminal category document parses") {
  ParseResult pr = load_document(data_path("e.json"));
  REQUIRE(pr.ok());
  CHECK(pr.document->kind == DocumentKind::Category);
  CHECK(pr.document->category()->n_objects() == 1);
  CHECK(pr.document->category()->n_morphisms() == 1);
}

TEST_CASE("duplicated morphism ids are syntax errors naming the id") {
  std::string text =
      R"({"kind":"category","format_version":1,"objects":["0","1"],)"
      R"("morphisms":[{"id":"f","src":"0","tgt":"1"},{"id":"f","src":"0","tgt":"1"}],)"
      R"("compose":[]})";
  ParseResult pr = parse_document(text);
  REQUIRE_FALSE(pr.ok());
  CHECK(pr.errors.front().code == ErrorCode::SyntaxError);
  CHECK(pr.errors.front().message.find("'f'") != std::string::npos);
}

TEST_CASE("malformed JSON reports line and column") {
  ParseResult pr = parse_document("{\n  \"kind\": \"category\",\n  oops\n}");
  REQUIRE_FALSE(pr.ok());
  CHECK(pr.errors.front().code == ErrorCode::SyntaxError);
  CHECK(pr.errors.front().line >= 1);
  CHECK(pr.errors.front().column >= 1);
}

TEST_CASE("unknown kinds and unsupported versions") {
  ParseResult pr = parse_document(R"({"kind":"widget","format_version":1})");
  REQUIRE_FALSE(pr.ok());
  CHECK(pr.errors.front().code == ErrorCode::UnknownKind);
  ParseResult pr2 =
      parse_document(R"({"kind":"category","format_version":7,"objects":[]})");
  REQUIRE_FALSE(pr2.ok());
  CHECK(pr2.errors.front().code == ErrorCode::VersionUnsupported);
}

TEST_CASE("functor documents resolve relative references") {
  ParseResult pr = load_document(data_path("incl0.json"));
  REQUIRE(pr.ok());
  const FinFunctor& f = pr.document->functor();
  CHECK(f.source->n_objects() == 1);
  CHECK(f.target->n_objects() == 2);
  CHECK(f.object_map == std::vector<Idx>{0});
}

TEST_CASE("diagram and square documents load") {
  CatDiagram d = mixed_diagram();
  CHECK(d.at_object[0]->n_objects() == 1);
  CHECK(d.at_object[1]->n_objects() == 2);
  ParseResult sq = load_document(data_path("square.json"));
  REQUIRE(sq.ok());
  CHECK(sq.document->square().apex->n_objects() == 2);
}

TEST_CASE("round trip: parse ∘ serialize ∘ parse is the identity") {
  auto cats = enumerate_categories(2, 4);
  for (std::size_t i = 0; i < cats.size(); i += 3) {
    DocumentEnvelope env = envelope_of(share(FinCat(cats[i])));
    std::string text = serialize(env);
    ParseResult pr = parse_document(text);
    REQUIRE(pr.ok());
    CHECK(*pr.document->category() == cats[i]);
    CHECK(serialize(*pr.document) == text);
  }
}

TEST_CASE("serializer output is stable and matches the golden files") {
  SUBCASE("e") {
    ParseResult pr = load_document(data_path("e.json"));
    REQUIRE(pr.ok());
    CHECK(serialize(*pr.document) == read_file(golden_path("e.golden.json")));
  }
  SUBCASE("Δ1") {
    ParseResult pr = load_document(data_path("delta1.json"));
    REQUIRE(pr.ok());
    CHECK(serialize(*pr.document) == read_file(golden_path("delta1.golden.json")));
  }
  SUBCASE("Δ2 is byte-identical through a parse round trip") {
    ParseResult pr = load_document(data_path("delta2.json"));
    REQUIRE(pr.ok());
    std::string once = serialize(*pr.document);
    CHECK(once == read_file(golden_path("delta2.golden.json")));
    ParseResult again = parse_document(once);
    REQUIRE(again.ok());
    CHECK(serialize(*again.document) == once);
  }
  SUBCASE("a Grothendieck total embeds the i#a identifier grammar") {
    GrothendieckResult gr = grothendieck(mixed_diagram());
    std::string text = serialize(envelope_of(gr.total));
    CHECK(text == read_file(golden_path("grothendieck_mixed.golden.json")));
    CHECK(text.find("1#0") != std::string::npos);
    CHECK(text.find("0#0") != std::string::npos);
  }
}

TEST_CASE("last line ends with a newline and uses LF") {
  ParseResult pr = load_document(data_path("delta1.json"));
  REQUIRE(pr.ok());
  std::string text = serialize(*pr.document);
  REQUIRE(!text.empty());
  CHECK(text.back() == '\n');
  CHECK(text.find('\r') == std::string::npos);
}

TEST_CASE("nat-trans documents") {
  std::string text = R"({
    "kind": "nat-trans",
    "format_version": 1,
    "source": {"kind":"functor","format_version":1,
      "source": {"kind":"category","format_version":1,"objects":["x"],"morphisms":[],"compose":[]},
      "target": {"kind":"category","format_version":1,"objects":["0","1"],
                 "morphisms":[{"id":"a01","src":"0","tgt":"1"}],"compose":[]},
      "object_map": {"x":"0"}, "morphism_map": {}},
    "target": {"kind":"functor","format_version":1,
      "source": {"kind":"category","format_version":1,"objects":["x"],"morphisms":[],"compose":[]},
      "target": {"kind":"category","format_version":1,"objects":["0","1"],
                 "morphisms":[{"id":"a01","src":"0","tgt":"1"}],"compose":[]},
      "object_map": {"x":"1"}, "morphism_map": {}},
    "components": {"x": "a01"}
  })";
  ParseResult pr = parse_document(text);
  REQUIRE(pr.ok());
  CHECK(naturality_holds(pr.document->nat_trans()));
  // a non-natural assignment is rejected
  std::string bad = text;
  bad.replace(bad.find("\"x\": \"a01\""), 10, "\"x\": \"id_0\"");
  ParseResult pr2 = parse_document(bad);
  CHECK_FALSE(pr2.ok());
}
