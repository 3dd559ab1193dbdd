#include "triad/structures.hpp"

#include <algorithm>

namespace triad {

std::string render_word(const Word& word) {
  if (word.empty()) return "ε";
  std::string out;
  for (const Atom& symbol : word) {
    out += symbol.text();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Calculi

GroundRule make_ground_rule(AtomSet premises, Atom conclusion) {
  if (premises.empty()) {
    throw Error(ErrorKind::InvariantViolation,
                "rule deriving " + conclusion.text() + " has no premises; axioms belong in A");
  }
  return GroundRule{std::move(premises), std::move(conclusion)};
}

namespace {

bool premises_hold(const GroundRule& rule, const AtomSet& theorems) {
  return std::all_of(rule.premises.begin(), rule.premises.end(),
                     [&](const Atom& p) { return theorems.count(p) > 0; });
}

}  // namespace

AtomSet deduce(const Calculus& c, unsigned depth) {
  AtomSet theorems = c.axioms;
  for (unsigned k = 0; k < depth; ++k) {
    AtomSet next = theorems;
    for (const GroundRule& rule : c.rules) {
      if (premises_hold(rule, theorems)) next.insert(rule.conclusion);
    }
    if (next == theorems) break;  // fixpoint
    theorems = std::move(next);
  }
  return theorems;
}

NamedSet deduction_named_set(const Calculus& c, unsigned depth) {
  // deps[t] = axioms appearing in at least one derivation tree of t whose
  // height stays within the current round.
  AtomSet theorems = c.axioms;
  std::map<Atom, AtomSet> deps;
  for (const Atom& axiom : c.axioms) deps[axiom].insert(axiom);

  for (unsigned k = 0; k < depth; ++k) {
    AtomSet next_theorems = theorems;
    std::map<Atom, AtomSet> next_deps = deps;
    for (const GroundRule& rule : c.rules) {
      if (!premises_hold(rule, theorems)) continue;
      next_theorems.insert(rule.conclusion);
      AtomSet& into = next_deps[rule.conclusion];
      // A tree for the conclusion contains an axiom iff one of its premise
      // subtrees does; subtrees are chosen independently.
      for (const Atom& premise : rule.premises) {
        const AtomSet& from = deps.at(premise);
        into.insert(from.begin(), from.end());
      }
    }
    if (next_theorems == theorems && next_deps == deps) break;
    theorems = std::move(next_theorems);
    deps = std::move(next_deps);
  }

  PairSet relation;
  for (const auto& [theorem, axioms] : deps) {
    for (const Atom& axiom : axioms) relation.insert({axiom, theorem});
  }
  return NamedSet{c.id, c.axioms, std::move(theorems), std::move(relation)};
}

// ---------------------------------------------------------------------------
// Valuations

ValuationReport validate_valuation(const Valuation& v) {
  ValuationReport report;
  std::map<Atom, Atom> seen;
  for (const auto& [sentence, value] : v.assignment) {
    auto [it, inserted] = seen.emplace(sentence, value);
    if (!inserted && it->second != value) {
      report.reason = "not single-valued";
      report.offending = sentence;
      return report;
    }
  }
  for (const auto& [sentence, value] : v.assignment) {
    bool admitted = false;
    if (v.truth_kind == TruthKind::Classical) {
      admitted = value.text() == "1" || value.text() == "0";
    } else {
      const auto rational = Rational::parse(value.text());
      admitted = rational && *rational >= Rational::integer(0) &&
                 *rational <= Rational::integer(1);
    }
    if (!admitted) {
      report.reason = "value not admitted by the truth kind: " + value.text();
      report.offending = sentence;
      return report;
    }
  }
  report.valid = true;
  return report;
}

// ---------------------------------------------------------------------------
// Mealy automata

MealyAutomaton make_automaton(Atom id, AtomSet inputs, AtomSet states, AtomSet outputs,
                              Atom start, AtomSet finals, std::map<AtomPair, AtomPair> delta) {
  if (!states.count(start)) {
    throw Error(ErrorKind::UnknownElement, "start state " + start.text() + " is not declared");
  }
  for (const Atom& f : finals) {
    if (!states.count(f)) {
      throw Error(ErrorKind::UnknownElement, "final state " + f.text() + " is not declared");
    }
  }
  for (const auto& [key, value] : delta) {
    if (!inputs.count(key.first)) {
      throw Error(ErrorKind::UnknownElement, "transition on undeclared input " + key.first.text());
    }
    if (!states.count(key.second)) {
      throw Error(ErrorKind::UnknownElement, "transition from undeclared state " + key.second.text());
    }
    if (!states.count(value.first)) {
      throw Error(ErrorKind::UnknownElement, "transition to undeclared state " + value.first.text());
    }
    if (!outputs.count(value.second)) {
      throw Error(ErrorKind::UnknownElement, "transition emits undeclared output " + value.second.text());
    }
  }
  for (const Atom& input : inputs) {
    for (const Atom& state : states) {
      if (!delta.count({input, state})) {
        throw Error(ErrorKind::PartialMap,
                    "delta is undefined on (" + input.text() + ", " + state.text() + ")");
      }
    }
  }
  return MealyAutomaton{std::move(id),    std::move(inputs), std::move(states), std::move(outputs),
                        std::move(start), std::move(finals), std::move(delta)};
}

AutomatonRun run_automaton(const MealyAutomaton& a, const Word& input) {
  Atom state = a.start;
  Word output;
  output.reserve(input.size());
  for (const Atom& symbol : input) {
    if (!a.inputs.count(symbol)) {
      throw Error(ErrorKind::UnknownSymbol, symbol.text() + " is not an input symbol");
    }
    const auto& [next, emitted] = a.delta.at({symbol, state});
    output.push_back(emitted);
    state = next;
  }
  const bool accepted = a.finals.count(state) > 0;
  return AutomatonRun{std::move(output), std::move(state), accepted};
}

// ---------------------------------------------------------------------------
// Unrestricted grammars

Grammar make_grammar(Atom id, AtomSet variables, AtomSet terminals, Atom start,
                     std::set<std::pair<Word, Word>> productions) {
  for (const Atom& v : variables) {
    if (terminals.count(v)) {
      throw Error(ErrorKind::InvariantViolation,
                  v.text() + " is declared both variable and terminal");
    }
  }
  if (!variables.count(start)) {
    throw Error(ErrorKind::UnknownElement, "start symbol " + start.text() + " is not a variable");
  }
  auto declared = [&](const Atom& s) { return variables.count(s) || terminals.count(s); };
  for (const auto& [left, right] : productions) {
    for (const Atom& s : left) {
      if (!declared(s)) {
        throw Error(ErrorKind::UnknownSymbol, "production uses undeclared symbol " + s.text());
      }
    }
    for (const Atom& s : right) {
      if (!declared(s)) {
        throw Error(ErrorKind::UnknownSymbol, "production uses undeclared symbol " + s.text());
      }
    }
    const bool has_variable = std::any_of(left.begin(), left.end(),
                                          [&](const Atom& s) { return variables.count(s) > 0; });
    if (!has_variable) {
      throw Error(ErrorKind::InvariantViolation,
                  "production left side " + render_word(left) + " contains no variable");
    }
  }
  return Grammar{std::move(id), std::move(variables), std::move(terminals), std::move(start),
                 std::move(productions)};
}

namespace {

// All forms reachable from `form` by one production applied at one occurrence.
std::set<Word> one_step_rewrites(const Grammar& g, const Word& form, std::size_t max_len) {
  std::set<Word> out;
  for (const auto& [left, right] : g.productions) {
    if (left.size() > form.size()) continue;
    const std::size_t result_len = form.size() - left.size() + right.size();
    if (result_len > max_len) continue;
    for (std::size_t i = 0; i + left.size() <= form.size(); ++i) {
      if (!std::equal(left.begin(), left.end(), form.begin() + i)) continue;
      Word next;
      next.reserve(result_len);
      next.insert(next.end(), form.begin(), form.begin() + i);
      next.insert(next.end(), right.begin(), right.end());
      next.insert(next.end(), form.begin() + i + left.size(), form.end());
      out.insert(std::move(next));
    }
  }
  return out;
}

}  // namespace

bool is_one_step_rewrite(const Grammar& g, const Word& current, const Word& next) {
  const auto rewrites = one_step_rewrites(g, current, next.size() + current.size());
  return rewrites.count(next) > 0;
}

DerivationResult derive_grammar(const Grammar& g, const Word& target, std::size_t max_steps,
                                std::size_t max_len) {
  for (const Atom& s : target) {
    if (!g.terminals.count(s)) {
      throw Error(ErrorKind::UnknownSymbol, s.text() + " is not a terminal");
    }
  }

  DerivationResult result;
  const Word start{g.start};
  if (start.size() > max_len) {
    result.frontier_exhausted = true;
    return result;
  }
  if (start == target) {
    result.derivation = std::vector<Word>{start};
    return result;
  }

  // Forward search by levels; visited keeps the first (shortest) level only.
  std::vector<std::set<Word>> levels{{start}};
  std::set<Word> visited{start};
  std::size_t found_level = 0;
  for (std::size_t step = 1; step <= max_steps && found_level == 0; ++step) {
    std::set<Word> frontier;
    for (const Word& form : levels[step - 1]) {
      for (const Word& next : one_step_rewrites(g, form, max_len)) {
        if (visited.insert(next).second) frontier.insert(next);
      }
    }
    if (frontier.empty()) {
      result.frontier_exhausted = true;
      return result;
    }
    const bool found = frontier.count(target) > 0;
    levels.push_back(std::move(frontier));
    if (found) found_level = step;
  }
  if (found_level == 0) return result;  // budget ran out

  // Mark the forms that lie on some shortest derivation, back to front.
  std::vector<std::set<Word>> on_path(found_level + 1);
  on_path[found_level].insert(target);
  for (std::size_t i = found_level; i-- > 0;) {
    for (const Word& form : levels[i]) {
      for (const Word& next : one_step_rewrites(g, form, max_len)) {
        if (on_path[i + 1].count(next)) {
          on_path[i].insert(form);
          break;
        }
      }
    }
  }

  // Greedy front-to-back choice of the least usable successor gives the
  // lexicographically least shortest derivation.
  std::vector<Word> derivation{start};
  for (std::size_t i = 1; i <= found_level; ++i) {
    const auto successors = one_step_rewrites(g, derivation.back(), max_len);
    for (const Word& next : successors) {  // std::set iterates in order
      if (on_path[i].count(next)) {
        derivation.push_back(next);
        break;
      }
    }
  }
  result.derivation = std::move(derivation);
  return result;
}

// ---------------------------------------------------------------------------
// Turing machines

TuringMachine make_turing_machine(Atom id, AtomSet alphabet, Atom blank, AtomSet states,
                                  Atom start, AtomSet finals, std::set<TmRule> rules) {
  if (!alphabet.count(blank)) {
    throw Error(ErrorKind::UnknownSymbol, "blank " + blank.text() + " is not in the alphabet");
  }
  if (!states.count(start)) {
    throw Error(ErrorKind::UnknownElement, "start state " + start.text() + " is not declared");
  }
  for (const Atom& f : finals) {
    if (!states.count(f)) {
      throw Error(ErrorKind::UnknownElement, "final state " + f.text() + " is not declared");
    }
  }
  for (const TmRule& rule : rules) {
    if (!states.count(rule.state) || !states.count(rule.next)) {
      throw Error(ErrorKind::UnknownElement, "rule uses an undeclared state");
    }
    if (!alphabet.count(rule.symbol)) {
      throw Error(ErrorKind::UnknownSymbol, "rule scans undeclared symbol " + rule.symbol.text());
    }
    if (rule.action == TmAction::Write) {
      if (!rule.write || !alphabet.count(*rule.write)) {
        throw Error(ErrorKind::UnknownSymbol, "rule writes an undeclared symbol");
      }
    } else if (rule.write) {
      throw Error(ErrorKind::InvariantViolation, "move rule carries a written symbol");
    }
  }
  return TuringMachine{std::move(id),    std::move(alphabet), std::move(blank), std::move(states),
                       std::move(start), std::move(finals),   std::move(rules)};
}

DeterminismCheck check_deterministic(const TuringMachine& t) {
  std::map<AtomPair, std::size_t> left_parts;
  for (const TmRule& rule : t.rules) {
    ++left_parts[{rule.state, rule.symbol}];
  }
  DeterminismCheck check;
  for (const auto& [left, count] : left_parts) {
    if (count > 1) check.duplicate_left_parts.insert(left);
  }
  check.deterministic = check.duplicate_left_parts.empty();
  return check;
}

TmRun run_tm(const TuringMachine& t, const Word& input, std::size_t max_steps) {
  const DeterminismCheck determinism = check_deterministic(t);
  if (!determinism.deterministic) {
    const AtomPair& left = *determinism.duplicate_left_parts.begin();
    throw Error(ErrorKind::NotDeterministic,
                "two rules share the left part (" + left.first.text() + ", " +
                    left.second.text() + ")");
  }
  for (const Atom& symbol : input) {
    if (!t.alphabet.count(symbol)) {
      throw Error(ErrorKind::UnknownSymbol, symbol.text() + " is not in the alphabet");
    }
  }

  std::map<AtomPair, const TmRule*> program;
  for (const TmRule& rule : t.rules) {
    program.emplace(AtomPair{rule.state, rule.symbol}, &rule);
  }

  std::map<long long, Atom> tape;
  for (std::size_t i = 0; i < input.size(); ++i) {
    tape.emplace(static_cast<long long>(i), input[i]);
  }
  long long head = 0;
  Atom state = t.start;
  std::size_t steps = 0;
  bool halted = false;

  while (true) {
    if (t.finals.count(state)) {
      halted = true;
      break;
    }
    if (steps >= max_steps) break;
    const auto scanned_it = tape.find(head);
    const Atom scanned = scanned_it == tape.end() ? t.blank : scanned_it->second;
    const auto rule_it = program.find({state, scanned});
    if (rule_it == program.end()) {
      halted = true;
      break;
    }
    const TmRule& rule = *rule_it->second;
    switch (rule.action) {
      case TmAction::Write:
        tape.insert_or_assign(head, *rule.write);
        break;
      case TmAction::MoveRight:
        ++head;
        break;
      case TmAction::MoveLeft:
        --head;
        break;
    }
    state = rule.next;
    ++steps;
  }

  // Trim leading and trailing blanks; interior blanks stay.
  long long lo = 0, hi = -1;
  bool any = false;
  for (const auto& [pos, symbol] : tape) {
    if (symbol == t.blank) continue;
    if (!any) lo = pos;
    hi = pos;
    any = true;
  }
  Word out;
  if (any) {
    for (long long pos = lo; pos <= hi; ++pos) {
      const auto it = tape.find(pos);
      out.push_back(it == tape.end() ? t.blank : it->second);
    }
  }
  return TmRun{std::move(out), halted, steps};
}

// ---------------------------------------------------------------------------
// Triad decomposition

TriadTree TriadTree::triad(std::string role, std::string label, TriadTree a, TriadTree b,
                           TriadTree c) {
  TriadTree node;
  node.kind = Kind::Triad;
  node.role = std::move(role);
  node.label = std::move(label);
  node.children.push_back(std::move(a));
  node.children.push_back(std::move(b));
  node.children.push_back(std::move(c));
  return node;
}

TriadTree TriadTree::atom_set(std::string role, AtomSet atoms) {
  TriadTree node;
  node.kind = Kind::AtomSetLeaf;
  node.role = std::move(role);
  node.atoms = std::move(atoms);
  return node;
}

TriadTree TriadTree::named_set(std::string role, NamedSet ns) {
  TriadTree node;
  node.kind = Kind::NamedSetLeaf;
  node.role = std::move(role);
  node.named = std::move(ns);
  return node;
}

TriadTree TriadTree::placeholder(std::string role, std::string symbol) {
  TriadTree node;
  node.kind = Kind::PlaceholderLeaf;
  node.role = std::move(role);
  node.label = std::move(symbol);
  return node;
}

std::string render_tm_rule_left(const TmRule& r) {
  return r.state.text() + " " + r.symbol.text();
}

std::string render_tm_rule_right(const TmRule& r) {
  switch (r.action) {
    case TmAction::Write: return r.write->text() + " " + r.next.text();
    case TmAction::MoveRight: return "R " + r.next.text();
    case TmAction::MoveLeft: return "L " + r.next.text();
  }
  return "";
}

NamedSet rule_as_named_set(const TmRule& r, Atom id) {
  const Atom left(render_tm_rule_left(r));
  const Atom right(render_tm_rule_right(r));
  return NamedSet{std::move(id), {left}, {right}, {{left, right}}};
}

NamedSet rule_as_named_set(const std::pair<Word, Word>& production, Atom id) {
  const Atom left(render_word(production.first));
  const Atom right(render_word(production.second));
  return NamedSet{std::move(id), {left}, {right}, {{left, right}}};
}

NamedSet rule_as_named_set(const GroundRule& r, Atom id) {
  PairSet relation;
  for (const Atom& premise : r.premises) {
    relation.insert({premise, r.conclusion});
  }
  return NamedSet{std::move(id), r.premises, {r.conclusion}, std::move(relation)};
}

namespace {

NamedSet tm_rules_named_set(const TuringMachine& t) {
  AtomSet lefts, rights;
  PairSet relation;
  for (const TmRule& rule : t.rules) {
    const Atom left(render_tm_rule_left(rule));
    const Atom right(render_tm_rule_right(rule));
    lefts.insert(left);
    rights.insert(right);
    relation.insert({left, right});
  }
  return NamedSet{Atom("P"), std::move(lefts), std::move(rights), std::move(relation)};
}

NamedSet grammar_rules_named_set(const Grammar& g) {
  AtomSet lefts, rights;
  PairSet relation;
  for (const auto& production : g.productions) {
    const Atom left(render_word(production.first));
    const Atom right(render_word(production.second));
    lefts.insert(left);
    rights.insert(right);
    relation.insert({left, right});
  }
  return NamedSet{Atom("P"), std::move(lefts), std::move(rights), std::move(relation)};
}

NamedSet calculus_rules_named_set(const Calculus& c) {
  AtomSet lefts, rights;
  PairSet relation;
  for (const GroundRule& rule : c.rules) {
    rights.insert(rule.conclusion);
    for (const Atom& premise : rule.premises) {
      lefts.insert(premise);
      relation.insert({premise, rule.conclusion});
    }
  }
  return NamedSet{Atom("R"), std::move(lefts), std::move(rights), std::move(relation)};
}

NamedSet delta_named_set(const MealyAutomaton& a) {
  AtomSet lefts, rights;
  PairSet relation;
  for (const auto& [key, value] : a.delta) {
    const Atom left("(" + key.first.text() + "," + key.second.text() + ")");
    const Atom right("(" + value.first.text() + "," + value.second.text() + ")");
    lefts.insert(left);
    rights.insert(right);
    relation.insert({left, right});
  }
  return NamedSet{Atom("δ"), std::move(lefts), std::move(rights), std::move(relation)};
}

}  // namespace

TriadTree decompose(const TuringMachine& t) {
  AtomSet io_alphabet = t.alphabet;
  io_alphabet.erase(t.blank);
  TriadTree language = TriadTree::triad("L", "L", TriadTree::atom_set("L_I", io_alphabet),
                                        TriadTree::atom_set("L_W", t.alphabet),
                                        TriadTree::atom_set("L_O", io_alphabet));
  TriadTree device = TriadTree::triad("D", "D", TriadTree::placeholder("H", "head"),
                                      TriadTree::named_set("P", tm_rules_named_set(t)),
                                      TriadTree::placeholder("M", "tape"));
  TriadTree configuration = TriadTree::triad("Q", "Q", TriadTree::atom_set("q0", {t.start}),
                                             TriadTree::atom_set("Q", t.states),
                                             TriadTree::atom_set("F", t.finals));
  return TriadTree::triad("", t.id.text(), std::move(language), std::move(device),
                          std::move(configuration));
}

TriadTree decompose(const MealyAutomaton& a) {
  TriadTree linguistic = TriadTree::triad("L", "L", TriadTree::atom_set("Σ", a.inputs),
                                          TriadTree::atom_set("Q", a.states),
                                          TriadTree::atom_set("Ω", a.outputs));
  TriadTree state = TriadTree::triad("S", "S", TriadTree::atom_set("Q", a.states),
                                     TriadTree::atom_set("q0", {a.start}),
                                     TriadTree::atom_set("F", a.finals));
  return TriadTree::triad("", a.id.text(), std::move(linguistic), std::move(state),
                          TriadTree::named_set("δ", delta_named_set(a)));
}

TriadTree decompose(const Grammar& g) {
  TriadTree lexical = TriadTree::triad("L", "L", TriadTree::atom_set("V", g.variables),
                                       TriadTree::atom_set("Σ", g.terminals),
                                       TriadTree::placeholder("·", "·"));
  return TriadTree::triad("", g.id.text(), std::move(lexical),
                          TriadTree::atom_set("S", {g.start}),
                          TriadTree::named_set("P", grammar_rules_named_set(g)));
}

TriadTree decompose(const Calculus& c) {
  return TriadTree::triad("", c.id.text(), TriadTree::atom_set("A", c.axioms),
                          TriadTree::named_set("R", calculus_rules_named_set(c)),
                          TriadTree::placeholder("T", "theorems"));
}

}  // namespace triad
