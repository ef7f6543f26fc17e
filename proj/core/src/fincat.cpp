#include "catlab/fincat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace catlab {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MissingComposite: return "MissingComposite";
    case ErrorCode::AssociativityViolation: return "AssociativityViolation";
    case ErrorCode::IdentityViolation: return "IdentityViolation";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::CompositionViolation: return "CompositionViolation";
    case ErrorCode::NotAFunctor: return "NotAFunctor";
    case ErrorCode::NotNatural: return "NotNatural";
    case ErrorCode::NotADiagram: return "NotADiagram";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::UnknownMorphism: return "UnknownMorphism";
    case ErrorCode::SourceTargetMismatch: return "SourceTargetMismatch";
    case ErrorCode::TargetMismatch: return "TargetMismatch";
    case ErrorCode::FiberMismatch: return "FiberMismatch";
    case ErrorCode::IllTyped: return "IllTyped";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownKind: return "UnknownKind";
    case ErrorCode::VersionUnsupported: return "VersionUnsupported";
    case ErrorCode::InvalidDocument: return "InvalidDocument";
  }
  return "Unknown";
}

std::optional<Idx> FinCat::object_index(const std::string& id) const {
  for (Idx i = 0; i < n_objects(); ++i)
    if (objects[i] == id) return i;
  return std::nullopt;
}

std::optional<Idx> FinCat::morphism_index(const std::string& id) const {
  for (Idx i = 0; i < n_morphisms(); ++i)
    if (morphisms[i] == id) return i;
  return std::nullopt;
}

std::vector<Idx> FinCat::hom(Idx x, Idx y) const {
  std::vector<Idx> out;
  for (Idx f = 0; f < n_morphisms(); ++f)
    if (src[f] == x && tgt[f] == y) out.push_back(f);
  return out;
}

// ---- validation ---------------------------------------------------------------

CategoryValidation validate_category(const RawCategory& raw) {
  CategoryValidation result;
  auto fail = [&](ErrorCode code, std::string msg) {
    result.violations.push_back({code, std::move(msg)});
  };

  std::unordered_map<std::string, Idx> obj_index;
  for (const auto& o : raw.objects) {
    if (obj_index.count(o)) {
      fail(ErrorCode::DanglingReference, "duplicate object id '" + o + "'");
      return result;
    }
    obj_index.emplace(o, static_cast<Idx>(obj_index.size()));
  }

  FinCat c;
  c.objects = raw.objects;
  std::unordered_map<std::string, Idx> mor_index;
  auto add_morphism = [&](const std::string& id, Idx s, Idx t) {
    mor_index.emplace(id, static_cast<Idx>(c.morphisms.size()));
    c.morphisms.push_back(id);
    c.src.push_back(s);
    c.tgt.push_back(t);
  };

  // In-memory layout: identities first (identity of object i at index i,
  // reserved id "id_<object>", declared or synthesized), then the remaining
  // declared morphisms in declaration order. This keeps serialize/validate
  // round trips bit-exact.
  {
    std::unordered_map<std::string, const RawMorphism*> declared;
    std::set<std::string> seen;
    for (const auto& m : raw.morphisms) {
      if (!seen.insert(m.id).second) {
        fail(ErrorCode::DanglingReference, "duplicate morphism id '" + m.id + "'");
        return result;
      }
      declared.emplace(m.id, &m);
    }
    c.identity.resize(c.objects.size());
    for (Idx o = 0; o < c.n_objects(); ++o) {
      const std::string reserved = "id_" + c.objects[o];
      auto it = declared.find(reserved);
      if (it != declared.end()) {
        if (it->second->src != c.objects[o] || it->second->tgt != c.objects[o]) {
          fail(ErrorCode::IdentityViolation,
               "reserved identity '" + reserved + "' is not an endomorphism of '" +
                   c.objects[o] + "'");
          return result;
        }
      }
      add_morphism(reserved, o, o);
      c.identity[o] = o;
    }
    for (const auto& m : raw.morphisms) {
      if (mor_index.count(m.id)) continue;  // an explicitly declared identity
      auto s = obj_index.find(m.src);
      auto t = obj_index.find(m.tgt);
      if (s == obj_index.end()) {
        fail(ErrorCode::DanglingReference,
             "morphism '" + m.id + "' has unknown src '" + m.src + "'");
        continue;
      }
      if (t == obj_index.end()) {
        fail(ErrorCode::DanglingReference,
             "morphism '" + m.id + "' has unknown tgt '" + m.tgt + "'");
        continue;
      }
      add_morphism(m.id, s->second, t->second);
    }
  }
  if (!result.violations.empty()) return result;

  const std::size_t m = c.morphisms.size();
  c.comp.assign(m * m, kNoIdx);
  std::vector<bool> given(m * m, false);

  auto is_id = [&](Idx f) { return c.identity[c.src[f]] == f; };

  // Identity compositions are forced.
  for (Idx f = 0; f < m; ++f) {
    c.comp[c.identity[c.tgt[f]] * m + f] = f;
    c.comp[f * m + c.identity[c.src[f]]] = f;
  }

  for (const auto& e : raw.compose) {
    auto g = mor_index.find(e.after);
    auto f = mor_index.find(e.before);
    auto h = mor_index.find(e.equals);
    if (g == mor_index.end() || f == mor_index.end() || h == mor_index.end()) {
      fail(ErrorCode::DanglingReference,
           "compose entry (" + e.after + " ∘ " + e.before + " = " + e.equals +
               ") references an unknown morphism");
      continue;
    }
    Idx gi = g->second, fi = f->second, hi = h->second;
    if (c.tgt[fi] != c.src[gi]) {
      fail(ErrorCode::CompositionViolation,
           "compose entry (" + e.after + " ∘ " + e.before + "): pair is not composable");
      continue;
    }
    if (c.src[hi] != c.src[fi] || c.tgt[hi] != c.tgt[gi]) {
      fail(ErrorCode::CompositionViolation,
           "compose entry (" + e.after + " ∘ " + e.before + " = " + e.equals +
               "): result endpoints do not match");
      continue;
    }
    Idx forced = c.comp[gi * m + fi];
    if (forced != kNoIdx && forced != hi) {
      fail(ErrorCode::IdentityViolation,
           "compose entry (" + e.after + " ∘ " + e.before + " = " + e.equals +
               ") contradicts the identity law (expected '" + c.morphisms[forced] + "')");
      continue;
    }
    if (given[gi * m + fi] && c.comp[gi * m + fi] != hi) {
      fail(ErrorCode::CompositionViolation,
           "conflicting compose entries for (" + e.after + " ∘ " + e.before + ")");
      continue;
    }
    c.comp[gi * m + fi] = hi;
    given[gi * m + fi] = true;
  }
  if (!result.violations.empty()) return result;

  // Totality over composable pairs.
  for (Idx g = 0; g < m && result.violations.size() < 16; ++g)
    for (Idx f = 0; f < m; ++f)
      if (c.tgt[f] == c.src[g] && c.comp[g * m + f] == kNoIdx)
        fail(ErrorCode::MissingComposite,
             "no composite for (" + c.morphisms[g] + " ∘ " + c.morphisms[f] + ")");
  if (!result.violations.empty()) return result;

  // Identity laws for explicitly declared identities acting on each side are
  // already forced above; what remains is associativity.
  for (Idx h = 0; h < m; ++h) {
    for (Idx g = 0; g < m; ++g) {
      if (c.tgt[g] != c.src[h]) continue;
      Idx hg = c.comp[h * m + g];
      for (Idx f = 0; f < m; ++f) {
        if (c.tgt[f] != c.src[g]) continue;
        Idx gf = c.comp[g * m + f];
        if (c.comp[h * m + gf] != c.comp[hg * m + f]) {
          fail(ErrorCode::AssociativityViolation,
               "(" + c.morphisms[h] + " ∘ " + c.morphisms[g] + ") ∘ " + c.morphisms[f] +
                   " != " + c.morphisms[h] + " ∘ (" + c.morphisms[g] + " ∘ " +
                   c.morphisms[f] + ")");
          result.category.reset();
          return result;
        }
      }
    }
  }

  (void)is_id;
  result.category = std::move(c);
  return result;
}

RawCategory to_raw(const FinCat& c) {
  RawCategory raw;
  raw.objects = c.objects;
  const Idx m = c.n_morphisms();
  std::vector<bool> is_id(m, false);
  for (Idx o = 0; o < c.n_objects(); ++o) is_id[c.identity[o]] = true;
  for (Idx f = 0; f < m; ++f)
    if (!is_id[f]) raw.morphisms.push_back({c.morphisms[f], c.objects[c.src[f]], c.objects[c.tgt[f]]});
  for (Idx g = 0; g < m; ++g)
    for (Idx f = 0; f < m; ++f)
      if (!is_id[g] && !is_id[f] && c.composable(g, f))
        raw.compose.push_back({c.morphisms[g], c.morphisms[f], c.morphisms[c.compose(g, f)]});
  return raw;
}

FinCat make_category(const RawCategory& raw) {
  auto v = validate_category(raw);
  if (!v.ok()) {
    std::string msg = "invalid category:";
    for (const auto& viol : v.violations) msg += " [" + viol.message + "]";
    throw Error(v.violations.front().code, msg);
  }
  return std::move(*v.category);
}

// ---- elementary constructions ---------------------------------------------------

FinCat opposite(const FinCat& c) {
  FinCat o;
  o.objects = c.objects;
  o.morphisms = c.morphisms;
  o.src = c.tgt;
  o.tgt = c.src;
  o.identity = c.identity;
  const std::size_t m = c.morphisms.size();
  o.comp.assign(m * m, kNoIdx);
  for (Idx g = 0; g < m; ++g)
    for (Idx f = 0; f < m; ++f)
      if (o.tgt[f] == o.src[g]) o.comp[g * m + f] = c.comp[f * m + g];
  return o;
}

FinCat product(const FinCat& c, const FinCat& d) {
  FinCat p;
  const Idx nc = c.n_objects(), nd = d.n_objects();
  const Idx mc = c.n_morphisms(), md = d.n_morphisms();
  p.objects.reserve(std::size_t(nc) * nd);
  for (Idx a = 0; a < nc; ++a)
    for (Idx b = 0; b < nd; ++b) p.objects.push_back(c.objects[a] + "*" + d.objects[b]);
  auto obj = [&](Idx a, Idx b) { return static_cast<Idx>(a * nd + b); };
  const std::size_t m = std::size_t(mc) * md;
  p.morphisms.reserve(m);
  p.src.reserve(m);
  p.tgt.reserve(m);
  for (Idx f = 0; f < mc; ++f)
    for (Idx g = 0; g < md; ++g) {
      p.morphisms.push_back(c.morphisms[f] + "*" + d.morphisms[g]);
      p.src.push_back(obj(c.src[f], d.src[g]));
      p.tgt.push_back(obj(c.tgt[f], d.tgt[g]));
    }
  auto mor = [&](Idx f, Idx g) { return static_cast<Idx>(f * md + g); };
  p.identity.resize(p.objects.size());
  for (Idx a = 0; a < nc; ++a)
    for (Idx b = 0; b < nd; ++b) p.identity[obj(a, b)] = mor(c.identity[a], d.identity[b]);
  p.comp.assign(m * m, kNoIdx);
  for (Idx f1 = 0; f1 < mc; ++f1)
    for (Idx g1 = 0; g1 < md; ++g1)
      for (Idx f2 = 0; f2 < mc; ++f2) {
        if (c.tgt[f2] != c.src[f1]) continue;
        Idx cf = c.compose(f1, f2);
        for (Idx g2 = 0; g2 < md; ++g2) {
          if (d.tgt[g2] != d.src[g1]) continue;
          p.comp[mor(f1, g1) * m + mor(f2, g2)] = mor(cf, d.compose(g1, g2));
        }
      }
  return p;
}

// ---- object-level structure --------------------------------------------------------

std::optional<Idx> find_final_object(const FinCat& c) {
  const Idx n = c.n_objects(), m = c.n_morphisms();
  for (Idx t = 0; t < n; ++t) {
    std::vector<int> count(n, 0);
    for (Idx f = 0; f < m; ++f)
      if (c.tgt[f] == t) ++count[c.src[f]];
    bool final = true;
    for (Idx x = 0; x < n && final; ++x) final = (count[x] == 1);
    if (final) return t;
  }
  return std::nullopt;
}

std::optional<Idx> find_initial_object(const FinCat& c) {
  const Idx n = c.n_objects(), m = c.n_morphisms();
  for (Idx s = 0; s < n; ++s) {
    std::vector<int> count(n, 0);
    for (Idx f = 0; f < m; ++f)
      if (c.src[f] == s) ++count[c.tgt[f]];
    bool initial = true;
    for (Idx x = 0; x < n && initial; ++x) initial = (count[x] == 1);
    if (initial) return s;
  }
  return std::nullopt;
}

bool is_isomorphism_arrow(const FinCat& c, Idx f) {
  for (Idx g = 0; g < c.n_morphisms(); ++g)
    if (c.src[g] == c.tgt[f] && c.tgt[g] == c.src[f] &&
        c.compose(g, f) == c.identity[c.src[f]] && c.compose(f, g) == c.identity[c.tgt[f]])
      return true;
  return false;
}

// ---- isomorphism search --------------------------------------------------------------

namespace {

struct ObjSignature {
  int loops;
  std::vector<int> out_degrees;  // sorted multiset of |hom(x, y)| over y
  std::vector<int> in_degrees;
  bool operator==(const ObjSignature&) const = default;
};

ObjSignature object_signature(const FinCat& c, Idx x) {
  ObjSignature s{};
  const Idx n = c.n_objects(), m = c.n_morphisms();
  std::vector<int> out(n, 0), in(n, 0);
  for (Idx f = 0; f < m; ++f) {
    if (c.src[f] == x) ++out[c.tgt[f]];
    if (c.tgt[f] == x) ++in[c.src[f]];
  }
  s.loops = out[x];
  s.out_degrees = out;
  s.in_degrees = in;
  std::sort(s.out_degrees.begin(), s.out_degrees.end());
  std::sort(s.in_degrees.begin(), s.in_degrees.end());
  return s;
}

// Extends a full object bijection to a morphism bijection, checking
// composition as images become available. Composition preimages are
// precomputed so each assignment only touches the pairs it participates in.
bool match_morphisms(const FinCat& c, const FinCat& d, const std::vector<Idx>& obj_map,
                     std::vector<Idx>& mor_map) {
  const Idx m = c.n_morphisms();
  std::vector<bool> used(m, false);
  mor_map.assign(m, kNoIdx);
  for (Idx o = 0; o < c.n_objects(); ++o) {
    mor_map[c.identity[o]] = d.identity[obj_map[o]];
    used[d.identity[obj_map[o]]] = true;
  }
  // pairs (g,h) with g∘h = f, per f
  std::vector<std::vector<std::pair<Idx, Idx>>> preimage(m);
  for (Idx g = 0; g < m; ++g)
    for (Idx h = 0; h < m; ++h)
      if (c.composable(g, h)) preimage[c.compose(g, h)].push_back({g, h});

  std::vector<Idx> order;
  for (Idx f = 0; f < m; ++f)
    if (mor_map[f] == kNoIdx) order.push_back(f);

  std::function<bool(std::size_t)> go = [&](std::size_t pos) {
    if (pos == order.size()) return true;
    Idx f = order[pos];
    for (Idx img = 0; img < m; ++img) {
      if (used[img] || d.src[img] != obj_map[c.src[f]] || d.tgt[img] != obj_map[c.tgt[f]])
        continue;
      mor_map[f] = img;
      used[img] = true;
      bool ok = true;
      // composites with f on either side whose result is already pinned
      for (Idx g = 0; g < m && ok; ++g) {
        if (mor_map[g] == kNoIdx) continue;
        if (c.composable(f, g)) {
          Idx h = c.compose(f, g);
          if (mor_map[h] != kNoIdx && d.compose(img, mor_map[g]) != mor_map[h]) ok = false;
        }
        if (ok && c.composable(g, f)) {
          Idx h = c.compose(g, f);
          if (mor_map[h] != kNoIdx && d.compose(mor_map[g], img) != mor_map[h]) ok = false;
        }
      }
      // composites landing on f itself
      for (const auto& [g, h] : preimage[f]) {
        if (!ok) break;
        if (mor_map[g] == kNoIdx || mor_map[h] == kNoIdx || g == f || h == f) continue;
        if (d.compose(mor_map[g], mor_map[h]) != img) ok = false;
      }
      if (ok && go(pos + 1)) return true;
      used[img] = false;
      mor_map[f] = kNoIdx;
    }
    return false;
  };
  return go(0);
}

}  // namespace

std::optional<IsoWitness> find_isomorphism(const FinCat& c, const FinCat& d) {
  if (c.n_objects() != d.n_objects() || c.n_morphisms() != d.n_morphisms())
    return std::nullopt;
  const Idx n = c.n_objects();
  if (n == 0) return IsoWitness{{}, {}};

  std::vector<ObjSignature> sig_c(n), sig_d(n);
  for (Idx x = 0; x < n; ++x) {
    sig_c[x] = object_signature(c, x);
    sig_d[x] = object_signature(d, x);
  }

  std::vector<Idx> obj_map(n, kNoIdx);
  std::vector<bool> used(n, false);
  std::vector<Idx> mor_map;

  std::function<bool(Idx)> assign = [&](Idx x) {
    if (x == n) return match_morphisms(c, d, obj_map, mor_map);
    for (Idx y = 0; y < n; ++y) {
      if (used[y] || !(sig_c[x] == sig_d[y])) continue;
      obj_map[x] = y;
      used[y] = true;
      if (assign(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return IsoWitness{obj_map, mor_map};
}

// ---- canonical form ---------------------------------------------------------------

// Canonical key layout: [n, m, (src,tgt) per non-identity morphism, then the
// k×k composition table over non-identity pairs in new indices] — identity
// rows and columns are forced by the identity laws and carry no information.
std::vector<std::uint16_t> canonical_key(const FinCat& c) {
  const Idx n = c.n_objects();
  const Idx m = c.n_morphisms();
  std::vector<Idx> nonids;
  for (Idx f = 0; f < m; ++f)
    if (c.identity[c.src[f]] != f) nonids.push_back(f);
  const std::size_t k = nonids.size();

  std::vector<std::uint16_t> best;
  std::vector<std::uint16_t> cur(2 + 2 * k + k * k);
  cur[0] = n;
  cur[1] = m;

  std::vector<Idx> perm(n);  // old object -> new position
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Idx> order(k);  // new non-id position -> old morphism
  std::vector<Idx> newmor(m, kNoIdx);

  do {
    std::vector<Idx> all = nonids;
    std::sort(all.begin(), all.end(), [&](Idx a, Idx b) {
      auto ka = std::pair<Idx, Idx>(perm[c.src[a]], perm[c.tgt[a]]);
      auto kb = std::pair<Idx, Idx>(perm[c.src[b]], perm[c.tgt[b]]);
      return ka < kb || (ka == kb && a < b);
    });
    // Minimal shape prefix is the sorted (src,tgt) sequence; compare it first.
    bool shape_viable = best.empty();
    if (!best.empty()) {
      int cmp = 0;
      for (std::size_t i = 0; i < k && cmp == 0; ++i) {
        std::uint16_t s = perm[c.src[all[i]]], t = perm[c.tgt[all[i]]];
        if (s != best[2 + 2 * i]) cmp = s < best[2 + 2 * i] ? -1 : 1;
        else if (t != best[3 + 2 * i]) cmp = t < best[3 + 2 * i] ? -1 : 1;
      }
      shape_viable = cmp <= 0;
      if (cmp < 0) best.clear();  // strictly better shape: previous best dies
    }
    if (!shape_viable) continue;
    for (std::size_t i = 0; i < k; ++i) {
      cur[2 + 2 * i] = perm[c.src[all[i]]];
      cur[3 + 2 * i] = perm[c.tgt[all[i]]];
    }

    // Buckets of interchangeable positions (equal (src,tgt) in new labels).
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (std::size_t i = 0; i < k;) {
      std::size_t j = i;
      auto key = std::pair<Idx, Idx>(perm[c.src[all[i]]], perm[c.tgt[all[i]]]);
      while (j < k && std::pair<Idx, Idx>(perm[c.src[all[j]]], perm[c.tgt[all[j]]]) == key)
        ++j;
      ranges.push_back({i, j});
      i = j;
    }

    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == ranges.size()) {
        for (Idx o = 0; o < n; ++o) newmor[c.identity[o]] = perm[o];
        for (std::size_t i = 0; i < k; ++i) newmor[all[i]] = static_cast<Idx>(n + i);
        bool better = best.empty();
        bool worse = false;
        std::size_t pos = 2 + 2 * k;
        for (std::size_t gi = 0; gi < k && !worse; ++gi)
          for (std::size_t fi = 0; fi < k; ++fi, ++pos) {
            Idx comp = c.comp[all[gi] * m + all[fi]];
            std::uint16_t v = comp == kNoIdx ? kNoIdx : newmor[comp];
            cur[pos] = v;
            if (!better) {
              if (v < best[pos]) better = true;
              else if (v > best[pos]) { worse = true; break; }
            }
          }
        if (!worse && better) best = cur;
        return;
      }
      auto [lo, hi] = ranges[r];
      std::sort(all.begin() + lo, all.begin() + hi);
      do {
        rec(r + 1);
      } while (std::next_permutation(all.begin() + lo, all.begin() + hi));
    };
    rec(0);
  } while (std::next_permutation(perm.begin(), perm.end()));

  (void)order;
  if (best.empty()) best = cur;  // n == 0 or k == 0 with single arrangement
  return best;
}

FinCat canonical_form(const FinCat& c) { return category_from_canonical_key(canonical_key(c)); }

FinCat category_from_canonical_key(const std::vector<std::uint16_t>& key) {
  const Idx n = key[0], m = key[1];
  FinCat out;
  out.objects.reserve(n);
  for (Idx o = 0; o < n; ++o) out.objects.push_back(std::to_string(o));
  out.morphisms.reserve(m);
  out.src.resize(m);
  out.tgt.resize(m);
  out.identity.resize(n);
  for (Idx o = 0; o < n; ++o) {
    out.morphisms.push_back("id_" + std::to_string(o));
    out.src[o] = o;
    out.tgt[o] = o;
    out.identity[o] = o;
  }
  std::size_t pos = 2;
  for (Idx k = n; k < m; ++k) {
    out.morphisms.push_back("m" + std::to_string(k - n));
    out.src[k] = static_cast<Idx>(key[pos++]);
    out.tgt[k] = static_cast<Idx>(key[pos++]);
  }
  out.comp.assign(std::size_t(m) * m, kNoIdx);
  for (Idx f = 0; f < m; ++f) {
    out.comp[out.tgt[f] * m + f] = f;  // identity of tgt(f) has index tgt(f)
    out.comp[f * std::size_t(m) + out.src[f]] = f;
  }
  for (Idx g = n; g < m; ++g)
    for (Idx f = n; f < m; ++f) out.comp[g * std::size_t(m) + f] = static_cast<Idx>(key[pos++]);
  return out;
}

// ---- small standard categories ---------------------------------------------------

FinCat empty_category() {
  return make_category(RawCategory{});
}

FinCat terminal_category() {
  RawCategory raw;
  raw.objects = {"0"};
  return make_category(raw);
}

FinCat ordinal(int n) {
  RawCategory raw;
  for (int i = 0; i <= n; ++i) raw.objects.push_back(std::to_string(i));
  auto arrow = [](int i, int j) { return "a" + std::to_string(i) + std::to_string(j); };
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      raw.morphisms.push_back({arrow(i, j), std::to_string(i), std::to_string(j)});
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        raw.compose.push_back({arrow(j, k), arrow(i, j), arrow(i, k)});
  return make_category(raw);
}

FinCat discrete_category(int n) {
  RawCategory raw;
  for (int i = 0; i < n; ++i) raw.objects.push_back(std::to_string(i));
  return make_category(raw);
}

FinCat parallel_pair_category() {
  RawCategory raw;
  raw.objects = {"0", "1"};
  raw.morphisms = {{"f", "0", "1"}, {"g", "0", "1"}};
  return make_category(raw);
}

FinCat monoid_category(int n, const std::vector<Idx>& table) {
  RawCategory raw;
  raw.objects = {"0"};
  auto name = [&](Idx i) { return i == 0 ? std::string("id_0") : "m" + std::to_string(i); };
  for (Idx i = 1; i < n; ++i) raw.morphisms.push_back({name(i), "0", "0"});
  for (Idx i = 1; i < n; ++i)
    for (Idx j = 1; j < n; ++j)
      raw.compose.push_back({name(i), name(j), name(table[i * n + j])});
  return make_category(raw);
}

}  // namespace catlab
