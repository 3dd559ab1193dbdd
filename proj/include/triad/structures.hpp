#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "triad/named_set.hpp"
#include "triad/rational.hpp"

namespace triad {

// A word over some alphabet of symbols. CLI-level words are one symbol per
// character; nothing below assumes single-character symbols.
using Word = std::vector<Atom>;

/// Renders a word by concatenating its symbols; the empty word prints as "ε".
std::string render_word(const Word& word);

// ---------------------------------------------------------------------------
// Calculi

/// A ground deduction rule: finitely many premise sentences yield one
/// conclusion. Premise-free rules are disallowed; axioms live in the calculus.
struct GroundRule {
  AtomSet premises;
  Atom conclusion;

  auto operator<=>(const GroundRule&) const = default;
};

GroundRule make_ground_rule(AtomSet premises, Atom conclusion);

struct Calculus {
  Atom id;
  AtomSet axioms;
  std::set<GroundRule> rules;

  friend bool operator==(const Calculus& a, const Calculus& b) {
    return a.axioms == b.axioms && a.rules == b.rules;
  }
};

/// Theorems derivable in at most `depth` rule applications:
/// T_0 = axioms, T_{k+1} = T_k ∪ {conclusion : premises ⊆ T_k}.
AtomSet deduce(const Calculus& c, unsigned depth);

/// The deduction named set (A, d, T): support = axioms, reflector =
/// deduce(c, depth), and (a, t) related iff axiom a appears in at least one
/// derivation tree of t of height ≤ depth. Every axiom relates to itself.
NamedSet deduction_named_set(const Calculus& c, unsigned depth);

// ---------------------------------------------------------------------------
// Valuations (logical semantics as a partial function into truth values)

enum class TruthKind { Classical, UnitRational };

struct Valuation {
  Atom id;
  TruthKind truth_kind;
  PairSet assignment;  // sentence -> truth value; single-valuedness is checked, not assumed
};

struct ValuationReport {
  bool valid = false;
  std::string reason;             // empty when valid
  std::optional<Atom> offending;  // first offending sentence
};

/// Confirms single-valuedness and that every value is admitted by the truth
/// kind ({"1","0"} for classical, rationals in [0,1] for unit).
ValuationReport validate_valuation(const Valuation& v);

// ---------------------------------------------------------------------------
// Mealy automata

struct MealyAutomaton {
  Atom id;
  AtomSet inputs;
  AtomSet states;
  AtomSet outputs;
  Atom start;
  AtomSet finals;
  std::map<AtomPair, AtomPair> delta;  // (input, state) -> (state, output), total

  friend bool operator==(const MealyAutomaton& a, const MealyAutomaton& b) {
    return a.inputs == b.inputs && a.states == b.states && a.outputs == b.outputs &&
           a.start == b.start && a.finals == b.finals && a.delta == b.delta;
  }
};

/// Validates declaredness of every component and totality of delta on
/// inputs × states. Throws PartialMap / UnknownElement.
MealyAutomaton make_automaton(Atom id, AtomSet inputs, AtomSet states, AtomSet outputs,
                              Atom start, AtomSet finals, std::map<AtomPair, AtomPair> delta);

struct AutomatonRun {
  Word output;  // same length as the input
  Atom end;
  bool accepted;
};

/// Folds delta from the start state. Throws UnknownSymbol.
AutomatonRun run_automaton(const MealyAutomaton& a, const Word& input);

// ---------------------------------------------------------------------------
// Unrestricted grammars

struct Grammar {
  Atom id;
  AtomSet variables;
  AtomSet terminals;  // disjoint from variables
  Atom start;
  std::set<std::pair<Word, Word>> productions;  // every left side contains a variable

  friend bool operator==(const Grammar& a, const Grammar& b) {
    return a.variables == b.variables && a.terminals == b.terminals && a.start == b.start &&
           a.productions == b.productions;
  }
};

Grammar make_grammar(Atom id, AtomSet variables, AtomSet terminals, Atom start,
                     std::set<std::pair<Word, Word>> productions);

struct DerivationResult {
  /// Sentential forms from [start] to the target, when found within bounds.
  std::optional<std::vector<Word>> derivation;
  /// True when the search space below the bounds was exhausted (absence is
  /// proven up to max_len); false when a budget ran out first.
  bool frontier_exhausted = false;
};

/// Breadth-first search over sentential forms, one production applied at one
/// occurrence per step, pruning forms longer than max_len. Returns the
/// shortest derivation, ties broken lexicographically. Throws UnknownSymbol
/// if the target uses a symbol that is not a terminal.
DerivationResult derive_grammar(const Grammar& g, const Word& target, std::size_t max_steps,
                                std::size_t max_len);

/// True iff `next` follows from `current` by one production applied at one
/// occurrence. Independent of the search; used to audit derivations.
bool is_one_step_rewrite(const Grammar& g, const Word& current, const Word& next);

// ---------------------------------------------------------------------------
// Turing machines

enum class TmAction { Write, MoveLeft, MoveRight };

struct TmRule {
  Atom state;
  Atom symbol;
  TmAction action;
  std::optional<Atom> write;  // engaged iff action == Write
  Atom next;

  auto operator<=>(const TmRule&) const = default;
};

struct TuringMachine {
  Atom id;
  AtomSet alphabet;  // includes the blank
  Atom blank;
  AtomSet states;
  Atom start;
  AtomSet finals;
  std::set<TmRule> rules;

  friend bool operator==(const TuringMachine& a, const TuringMachine& b) {
    return a.alphabet == b.alphabet && a.blank == b.blank && a.states == b.states &&
           a.start == b.start && a.finals == b.finals && a.rules == b.rules;
  }
};

/// Validates declaredness of all rule parts, blank membership, start/finals.
/// Nondeterministic rule sets are allowed; only run_tm requires determinism.
TuringMachine make_turing_machine(Atom id, AtomSet alphabet, Atom blank, AtomSet states,
                                  Atom start, AtomSet finals, std::set<TmRule> rules);

struct DeterminismCheck {
  bool deterministic = false;
  PairSet duplicate_left_parts;  // every (state, symbol) with more than one rule
};

DeterminismCheck check_deterministic(const TuringMachine& t);

struct TmRun {
  Word tape;  // trimmed of leading and trailing blanks
  bool halted;
  std::size_t steps;
};

/// Runs a deterministic machine: two-way unbounded tape, input at position 0,
/// head at 0. Write rules replace the scanned symbol without moving; move
/// rules shift without writing. Halts on a final state or when no rule
/// matches. Throws NotDeterministic / UnknownSymbol.
TmRun run_tm(const TuringMachine& t, const Word& input, std::size_t max_steps);

// ---------------------------------------------------------------------------
// Triad decomposition

/// A three-child labeled tree rendering a structured object as nested triads.
/// Leaves carry an atom set, a named set, or a symbolic placeholder for a
/// component the description does not materialize as data.
struct TriadTree {
  enum class Kind { Triad, AtomSetLeaf, NamedSetLeaf, PlaceholderLeaf };

  Kind kind = Kind::PlaceholderLeaf;
  std::string role;                // tag assigned by the parent; root role is empty
  std::string label;               // triad label or placeholder symbol
  std::vector<TriadTree> children; // exactly three when kind == Triad
  AtomSet atoms;                   // AtomSetLeaf payload
  std::optional<NamedSet> named;   // NamedSetLeaf payload

  static TriadTree triad(std::string role, std::string label, TriadTree a, TriadTree b,
                         TriadTree c);
  static TriadTree atom_set(std::string role, AtomSet atoms);
  static TriadTree named_set(std::string role, NamedSet ns);
  static TriadTree placeholder(std::string role, std::string symbol);
};

TriadTree decompose(const TuringMachine& t);   // roles L, D, Q
TriadTree decompose(const MealyAutomaton& a);  // roles L, S, δ
TriadTree decompose(const Grammar& g);         // roles L, S, P
TriadTree decompose(const Calculus& c);        // roles A, R, T

/// Rendered left part of a rule, e.g. "q0 1" or "S" or a premise sentence.
std::string render_tm_rule_left(const TmRule& r);
std::string render_tm_rule_right(const TmRule& r);

NamedSet rule_as_named_set(const TmRule& r, Atom id);
NamedSet rule_as_named_set(const std::pair<Word, Word>& production, Atom id);
NamedSet rule_as_named_set(const GroundRule& r, Atom id);

}  // namespace triad
