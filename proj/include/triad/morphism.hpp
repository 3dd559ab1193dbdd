#pragma once

#include <map>
#include <optional>
#include <vector>

#include "triad/named_set.hpp"

namespace triad {

/// A morphism (f, g) between named sets: f maps supports, g maps reflectors,
/// and the naming squares commute (fq = rg). Commutativity is not enforced by
/// construction; check_morphism tests it extensionally.
struct Morphism {
  Atom id;
  NamedSet source;
  NamedSet target;
  std::map<Atom, Atom> element_map;  // f: source.support -> target.support
  std::map<Atom, Atom> name_map;     // g: source.reflector -> target.reflector

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.source == b.source && a.target == b.target &&
           a.element_map == b.element_map && a.name_map == b.name_map;
  }
};

struct MorphismCheck {
  bool commutes = false;
  // A pair present in exactly one of the two composite relations, when they differ.
  std::optional<AtomPair> witness;
};

/// Validates that f and g are total maps into the target's components.
/// Throws PartialMap.
Morphism make_morphism(Atom id, NamedSet source, NamedSet target,
                       std::map<Atom, Atom> element_map, std::map<Atom, Atom> name_map);

/// Computes both composite relations fq = {(x,b) : (f(x),b) ∈ q} and
/// rg = {(x,g(a)) : (x,a) ∈ r} as pair sets and compares them.
MorphismCheck check_morphism(const Morphism& m);

/// Left-to-right composition: first f, then g. Throws NonComposable when
/// f.target and g.source differ.
Morphism compose_morphisms(const Morphism& f, const Morphism& g);

Morphism identity_morphism(const NamedSet& x);

struct CategoryReport {
  struct MorphismStatus {
    Atom id;
    bool commutes;
    std::optional<AtomPair> witness;
  };
  struct PairStatus {
    Atom first, second;
    bool composite_commutes;
  };
  struct TripleStatus {
    Atom first, second, third;
    bool associative;
  };
  struct IdentityStatus {
    Atom id;
    bool left_identity;   // id_source ∘ f == f
    bool right_identity;  // f ∘ id_target == f
  };

  std::vector<MorphismStatus> morphisms;
  std::vector<PairStatus> pairs;
  std::vector<TripleStatus> triples;
  std::vector<IdentityStatus> identities;

  bool all_pass() const;
};

/// Checks every morphism's commutativity, every composable pair's composite,
/// associativity on every composable triple, and both identity laws.
/// Throws UnknownObject if a morphism endpoint is not among `objects`.
CategoryReport verify_category(const std::vector<NamedSet>& objects,
                               const std::vector<Morphism>& morphisms);

}  // namespace triad
