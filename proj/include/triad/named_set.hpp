#pragma once

#include "triad/atom.hpp"

namespace triad {

/// A finite set-theoretical named set (X, r, I): support X, naming relation
/// r ⊆ X × I, reflector I. Any of the three components may be empty; the
/// relation may be partial and multivalued.
struct NamedSet {
  Atom id;
  AtomSet support;
  AtomSet reflector;
  PairSet relation;

  /// Equality is componentwise on (support, reflector, relation); ids are
  /// labels and do not participate.
  friend bool operator==(const NamedSet& a, const NamedSet& b) {
    return a.support == b.support && a.reflector == b.reflector && a.relation == b.relation;
  }
};

struct Classification {
  bool functional = false;         // every support element has at most one name
  bool total = false;              // every support element has at least one name
  bool normalized = false;         // factual names exhaust the reflector
  bool singlenamed = false;        // exactly one factual name
  bool individually_named = false; // relation is a bijection from support onto the reflector

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Validates relation pairs against support × reflector. Throws DanglingPair.
NamedSet make_named_set(Atom id, AtomSet support, AtomSet reflector, PairSet relation);

/// Names assigned to at least one support element.
AtomSet factual_names(const NamedSet& x);

/// The complete name of `element`: every name related to it (may be empty).
/// Throws UnknownElement if `element` is not in the support.
AtomSet names_of(const NamedSet& x, const Atom& element);

Classification classify(const NamedSet& x);

/// Strict: inner.relation equals outer.relation restricted to
/// inner.support × inner.reflector. Weak: containment instead of equality.
/// Both require support and reflector containment.
bool is_named_subset(const NamedSet& inner, const NamedSet& outer, bool weak);

}  // namespace triad
