#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "catlab/constructions.hpp"
#include "catlab/functor.hpp"

namespace catlab {

enum class DocumentKind { Category, Functor, Diagram, Square, NatTrans };

const char* document_kind_name(DocumentKind k);

// A parsed and semantically validated document. Functor/diagram/square/nat-trans
// payloads carry their categories inline after loading (file references are
// resolved during parse).
struct DocumentEnvelope {
  DocumentKind kind;
  int format_version = 1;
  std::variant<FinCatPtr, FinFunctor, CatDiagram, CartesianSquare, NatTrans> payload;

  const FinCatPtr& category() const { return std::get<FinCatPtr>(payload); }
  const FinFunctor& functor() const { return std::get<FinFunctor>(payload); }
  const CatDiagram& diagram() const { return std::get<CatDiagram>(payload); }
  const CartesianSquare& square() const { return std::get<CartesianSquare>(payload); }
  const NatTrans& nat_trans() const { return std::get<NatTrans>(payload); }
};

struct ParseError {
  ErrorCode code;       // SyntaxError | UnknownKind | VersionUnsupported |
                        // InvalidDocument | validation codes
  std::string message;
  int line = 0;         // 1-based; 0 when not applicable
  int column = 0;
};

struct ParseResult {
  std::optional<DocumentEnvelope> document;
  std::vector<ParseError> errors;
  bool ok() const { return errors.empty(); }
};

// `base_dir` resolves relative file references inside functor/diagram
// documents ("" = current directory).
ParseResult parse_document(const std::string& text, const std::string& base_dir = "");

// Reads and parses a file (reference resolution relative to its directory).
ParseResult load_document(const std::string& path);

// Canonical form: keys sorted, objects/morphisms in declaration order,
// identities implicit, 2-space indent, UTF-8, LF, trailing newline.
std::string serialize(const DocumentEnvelope& doc);

std::string serialize_category(const FinCat& c);
std::string serialize_functor(const FinFunctor& u);

DocumentEnvelope envelope_of(FinCatPtr c);
DocumentEnvelope envelope_of(const FinFunctor& u);

}  // namespace catlab
