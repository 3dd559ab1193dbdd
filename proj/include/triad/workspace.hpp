#pragma once

#include <map>

#include "triad/morphism.hpp"
#include "triad/properties.hpp"
#include "triad/structures.hpp"
#include "triad/views.hpp"

namespace triad {

/// Everything a workspace file can declare, keyed by id within each kind.
/// Cross-references (morphism endpoints, fuzzy lattice scales) are resolved
/// into embedded copies at parse time.
struct Workspace {
  std::map<Atom, NamedSet> named_sets;
  std::map<Atom, Morphism> morphisms;
  std::map<Atom, PlainSet> sets;
  std::map<Atom, MultisetM> multisets;
  std::map<Atom, FuzzySet> fuzzy_sets;
  std::map<Atom, FiniteLattice> lattices;
  std::map<Atom, Property> properties;
  std::map<Atom, Calculus> calculi;
  std::map<Atom, MealyAutomaton> automata;
  std::map<Atom, Grammar> grammars;
  std::map<Atom, TuringMachine> turing_machines;

  friend bool operator==(const Workspace&, const Workspace&) = default;
};

}  // namespace triad
