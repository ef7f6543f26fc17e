#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catlab/error.hpp"

namespace catlab {

using Idx = std::uint16_t;
inline constexpr Idx kNoIdx = 0xFFFF;

// A finite category: objects, morphisms with src/tgt, per-object identity,
// and a total composition table over composable pairs. Immutable after
// validation; every operation in the library is pure.
struct FinCat {
  std::vector<std::string> objects;    // object ids, declaration order
  std::vector<std::string> morphisms;  // morphism ids, declaration order
  std::vector<Idx> src;                // per morphism
  std::vector<Idx> tgt;                // per morphism
  std::vector<Idx> identity;           // per object -> morphism index
  // Row-major m x m table; comp[g*m + f] = g∘f ("g after f"), kNoIdx when
  // tgt(f) != src(g).
  std::vector<Idx> comp;

  Idx n_objects() const { return static_cast<Idx>(objects.size()); }
  Idx n_morphisms() const { return static_cast<Idx>(morphisms.size()); }

  bool composable(Idx g, Idx f) const { return tgt[f] == src[g]; }
  Idx compose(Idx g, Idx f) const { return comp[g * morphisms.size() + f]; }
  bool is_identity(Idx m) const { return identity[src[m]] == m && src[m] == tgt[m]; }

  std::optional<Idx> object_index(const std::string& id) const;
  std::optional<Idx> morphism_index(const std::string& id) const;

  // Morphisms x -> y, in declaration order.
  std::vector<Idx> hom(Idx x, Idx y) const;

  bool operator==(const FinCat& o) const = default;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

inline FinCatPtr share(FinCat c) { return std::make_shared<const FinCat>(std::move(c)); }

// ---- raw input & validation -------------------------------------------------

struct RawMorphism {
  std::string id;
  std::string src;
  std::string tgt;
};

struct RawComposite {
  std::string after;   // g
  std::string before;  // f
  std::string equals;  // g∘f
};

struct RawCategory {
  std::vector<std::string> objects;
  std::vector<RawMorphism> morphisms;  // identities may be omitted
  std::vector<RawComposite> compose;   // required for composable non-identity pairs
};

struct Violation {
  ErrorCode code;
  std::string message;  // names the smallest witness
};

struct CategoryValidation {
  std::optional<FinCat> category;  // present iff violations empty
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks every FinCat invariant. Identities absent from `raw` are synthesized
// with reserved ids "id_<object>"; declared morphisms named "id_<object>" are
// taken as that object's identity and checked.
CategoryValidation validate_category(const RawCategory& raw);

// Validated FinCat -> raw description (inverse of validate_category up to
// identity synthesis).
RawCategory to_raw(const FinCat& c);

// Throwing convenience for inputs known to be well-formed.
FinCat make_category(const RawCategory& raw);

// ---- elementary constructions ----------------------------------------------

// Objects preserved, src/tgt swapped, compose(g,f) := C.compose(f,g).
FinCat opposite(const FinCat& c);

// Objects/morphisms are ordered pairs (left-major); composition componentwise.
// Ids are "a*b" / "f*g".
FinCat product(const FinCat& c, const FinCat& d);

// ---- object-level structure --------------------------------------------------

std::optional<Idx> find_final_object(const FinCat& c);
std::optional<Idx> find_initial_object(const FinCat& c);
inline bool has_final_object(const FinCat& c) { return find_final_object(c).has_value(); }

bool is_isomorphism_arrow(const FinCat& c, Idx f);

// ---- isomorphism & canonical form --------------------------------------------

struct IsoWitness {
  std::vector<Idx> object_map;
  std::vector<Idx> morphism_map;
};

// Invertible-functor search: degree-sequence pruning, then backtracking.
std::optional<IsoWitness> find_isomorphism(const FinCat& c, const FinCat& d);
inline bool are_isomorphic(const FinCat& c, const FinCat& d) {
  return find_isomorphism(c, d).has_value();
}

// Lexicographically least encoding of (shape, composition table) over all
// object/morphism relabelings. Equal keys <=> isomorphic categories.
std::vector<std::uint16_t> canonical_key(const FinCat& c);

// Relabels c into the category realizing its canonical key, with objects named
// "0","1",... and non-identity morphisms named "m0","m1",...
FinCat canonical_form(const FinCat& c);

// Decodes a canonical key back into its category.
FinCat category_from_canonical_key(const std::vector<std::uint16_t>& key);

// ---- small standard categories ------------------------------------------------

FinCat empty_category();
FinCat terminal_category();           // e (one object "0")
FinCat ordinal(int n);                // Δn: objects "0".."n", one arrow i->j for i<=j
FinCat discrete_category(int n);      // n objects, identities only
FinCat parallel_pair_category();      // two objects, two parallel arrows
FinCat monoid_category(int n, const std::vector<Idx>& table);  // table[i*n+j] = i∘j

}  // namespace catlab
