#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triad/cli.hpp"
#include "triad/textio.hpp"

namespace triad {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kRuntime = 2;
constexpr int kParse = 3;
constexpr int kUsage = 4;

struct ExitWith {
  int code;
};

// Reports are deterministic key=value lines, sorted by key.
class Report {
 public:
  void add(std::string key, std::string value) {
    lines_.emplace_back(std::move(key), std::move(value));
  }

  // A const char* would otherwise convert to bool, not std::string.
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }

  void add(std::string key, bool value) {
    add(std::move(key), std::string(value ? "true" : "false"));
  }

  void print() const {
    auto sorted = lines_;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& [key, value] : sorted) {
      std::cout << key << "=" << value << "\n";
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

std::string atom_list_value(const AtomSet& set) {
  std::string out;
  bool first = true;
  for (const Atom& a : set) {
    if (!first) out += " ";
    first = false;
    out += quote_atom(a);
  }
  return out;
}

std::string pair_value(const AtomPair& pair) {
  return "(" + quote_atom(pair.first) + "," + quote_atom(pair.second) + ")";
}

std::string map_value(const std::map<Atom, Atom>& map) {
  std::string out;
  bool first = true;
  for (const auto& [from, to] : map) {
    if (!first) out += " ";
    first = false;
    out += quote_atom(from) + "->" + quote_atom(to);
  }
  return out;
}

void print_named_set(const NamedSet& x) {
  Report report;
  report.add("support", atom_list_value(x.support));
  report.add("names", atom_list_value(x.reflector));
  std::string rel;
  bool first = true;
  for (const auto& [from, to] : x.relation) {
    if (!first) rel += " ";
    first = false;
    rel += quote_atom(from) + "->" + quote_atom(to);
  }
  report.add("rel", rel);
  report.print();
}

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw ExitWith{kRuntime};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ParseResult result = parse_workspace(buffer.str());
  if (!result.ok()) {
    bool syntax = false;
    for (const Diagnostic& d : result.diagnostics) {
      if (d.category == Diagnostic::Category::Syntax) syntax = true;
      std::cerr << path << ": " << d.str() << "\n";
    }
    throw ExitWith{syntax ? kParse : kRuntime};
  }
  return std::move(*result.workspace);
}

template <typename T>
const T& find_in(const std::map<Atom, T>& map, const std::string& id, const char* kind) {
  const auto it = map.find(Atom(id));
  if (it == map.end()) {
    throw Error(ErrorKind::UnknownReference, std::string("no ") + kind + " named " + id);
  }
  return it->second;
}

// One symbol per character; every character must name a declared symbol.
Word word_from_arg(const std::string& text, const AtomSet& symbols, const char* what) {
  Word word;
  for (char c : text) {
    Atom symbol(std::string(1, c));
    if (!symbols.count(symbol)) {
      throw Error(ErrorKind::UnknownSymbol,
                  symbol.text() + std::string(" is not ") + what);
    }
    word.push_back(std::move(symbol));
  }
  return word;
}

NumeralScale scale_for_base(unsigned base) { return NumeralScale::for_base(base); }

Scale parse_scale_flag(const std::string& spec, const Workspace& ws) {
  if (spec == "unit") return Scale::unit();
  if (spec == "sym") return Scale::symmetric();
  if (spec == "real") return Scale::real_line();
  const std::string prefix = "lattice:";
  if (spec.rfind(prefix, 0) == 0) {
    const std::string id = spec.substr(prefix.size());
    return Scale::lattice(find_in(ws.lattices, id, "lattice"));
  }
  throw Error(ErrorKind::DegreeOutOfScale, "unknown scale " + spec);
}

// ---------------------------------------------------------------------------
// Subcommand bodies. Each returns the process exit code.

int cmd_validate(const std::string& file) {
  const Workspace ws = load_workspace(file);
  Report report;
  report.add("automaton", std::to_string(ws.automata.size()));
  report.add("calculus", std::to_string(ws.calculi.size()));
  report.add("fuzzyset", std::to_string(ws.fuzzy_sets.size()));
  report.add("grammar", std::to_string(ws.grammars.size()));
  report.add("lattice", std::to_string(ws.lattices.size()));
  report.add("morphism", std::to_string(ws.morphisms.size()));
  report.add("multiset", std::to_string(ws.multisets.size()));
  report.add("namedset", std::to_string(ws.named_sets.size()));
  report.add("property", std::to_string(ws.properties.size()));
  report.add("set", std::to_string(ws.sets.size()));
  report.add("tm", std::to_string(ws.turing_machines.size()));
  report.add("result", "ok");
  report.print();
  return kOk;
}

int cmd_classify(const std::string& file, const std::string& id) {
  const Workspace ws = load_workspace(file);
  const Classification c = classify(find_in(ws.named_sets, id, "namedset"));
  Report report;
  report.add("functional", c.functional);
  report.add("total", c.total);
  report.add("normalized", c.normalized);
  report.add("singlenamed", c.singlenamed);
  report.add("individuallyNamed", c.individually_named);
  report.print();
  return kOk;
}

int cmd_names(const std::string& file, const std::string& id, const std::string& elem) {
  const Workspace ws = load_workspace(file);
  const AtomSet names = names_of(find_in(ws.named_sets, id, "namedset"), Atom(elem));
  Report report;
  report.add("names", atom_list_value(names));
  report.print();
  return kOk;
}

int cmd_subset(const std::string& file, const std::string& inner, const std::string& outer,
               bool weak) {
  const Workspace ws = load_workspace(file);
  const bool result = is_named_subset(find_in(ws.named_sets, inner, "namedset"),
                                      find_in(ws.named_sets, outer, "namedset"), weak);
  Report report;
  report.add("result", result);
  report.print();
  return result ? kOk : kFalse;
}

int cmd_check_morphism(const std::string& file, const std::string& id) {
  const Workspace ws = load_workspace(file);
  const MorphismCheck check = check_morphism(find_in(ws.morphisms, id, "morphism"));
  Report report;
  report.add("commutes", check.commutes);
  if (check.witness) report.add("witness", pair_value(*check.witness));
  report.print();
  return check.commutes ? kOk : kFalse;
}

int cmd_compose(const std::string& file, const std::string& f, const std::string& g) {
  const Workspace ws = load_workspace(file);
  const Morphism composed = compose_morphisms(find_in(ws.morphisms, f, "morphism"),
                                              find_in(ws.morphisms, g, "morphism"));
  Report report;
  report.add("id", quote_atom(composed.id));
  report.add("source", quote_atom(composed.source.id));
  report.add("target", quote_atom(composed.target.id));
  report.add("f", map_value(composed.element_map));
  report.add("g", map_value(composed.name_map));
  report.print();
  return kOk;
}

int cmd_category_check(const std::string& file) {
  const Workspace ws = load_workspace(file);
  std::vector<NamedSet> objects;
  for (const auto& [id, x] : ws.named_sets) objects.push_back(x);
  std::vector<Morphism> morphisms;
  for (const auto& [id, m] : ws.morphisms) morphisms.push_back(m);
  const CategoryReport result = verify_category(objects, morphisms);

  Report report;
  for (const auto& s : result.morphisms) {
    std::string value = s.commutes ? "pass" : "fail";
    if (s.witness) value += " witness=" + pair_value(*s.witness);
    report.add("morphism." + quote_atom(s.id), value);
  }
  for (const auto& s : result.pairs) {
    report.add("pair." + quote_atom(s.first) + "." + quote_atom(s.second),
               s.composite_commutes ? "pass" : "fail");
  }
  for (const auto& s : result.triples) {
    report.add("triple." + quote_atom(s.first) + "." + quote_atom(s.second) + "." +
                   quote_atom(s.third),
               s.associative ? "pass" : "fail");
  }
  for (const auto& s : result.identities) {
    report.add("identity." + quote_atom(s.id),
               s.left_identity && s.right_identity ? "pass" : "fail");
  }
  report.add("result", result.all_pass() ? "pass" : "fail");
  report.print();
  return result.all_pass() ? kOk : kFalse;
}

int cmd_embed(const std::string& file, const std::string& set_id, const std::string& name) {
  const Workspace ws = load_workspace(file);
  print_named_set(embed_set(find_in(ws.sets, set_id, "set"), Atom(name)));
  return kOk;
}

int cmd_as_multiset(const std::string& file, const std::string& id, unsigned base) {
  const Workspace ws = load_workspace(file);
  const MultisetM m =
      named_set_as_multiset(find_in(ws.named_sets, id, "namedset"), scale_for_base(base));
  Report report;
  std::string items;
  bool first = true;
  for (const auto& [element, count] : m.multiplicity) {
    if (!first) items += " ";
    first = false;
    items += quote_atom(element) + ":" + std::to_string(count);
  }
  report.add("items", items);
  report.print();
  return kOk;
}

int cmd_as_fuzzy(const std::string& file, const std::string& id, const std::string& scale_spec) {
  const Workspace ws = load_workspace(file);
  const Scale scale = parse_scale_flag(scale_spec, ws);
  const FuzzySet f = named_set_as_fuzzy(find_in(ws.named_sets, id, "namedset"), scale);
  Report report;
  report.add("universe", atom_list_value(f.universe));
  report.add("scale", scale_spec);
  std::string degrees;
  bool first = true;
  for (const auto& [element, degree] : f.membership) {
    if (!first) degrees += " ";
    first = false;
    degrees += quote_atom(element) + ":" + quote_atom(degree.atom());
  }
  report.add("degrees", degrees);
  report.print();
  return kOk;
}

int cmd_to_namedset(const std::string& file, const std::string& id) {
  const Workspace ws = load_workspace(file);
  const bool is_multiset = ws.multisets.count(Atom(id)) > 0;
  const bool is_fuzzy = ws.fuzzy_sets.count(Atom(id)) > 0;
  if (is_multiset && is_fuzzy) {
    throw Error(ErrorKind::UnknownReference, id + " names both a multiset and a fuzzyset");
  }
  if (is_multiset) {
    print_named_set(multiset_as_named_set(ws.multisets.at(Atom(id)), NumeralScale::decimal()));
  } else if (is_fuzzy) {
    print_named_set(fuzzy_as_named_set(ws.fuzzy_sets.at(Atom(id))));
  } else {
    throw Error(ErrorKind::UnknownReference, "no multiset or fuzzyset named " + id);
  }
  return kOk;
}

int cmd_tokenize(const std::string& file, const std::string& id) {
  const Workspace ws = load_workspace(file);
  print_named_set(tokenize(find_in(ws.multisets, id, "multiset")));
  return kOk;
}

int cmd_lattice_check(const std::string& file, const std::string& id) {
  const Workspace ws = load_workspace(file);
  const LatticeReport result = validate_lattice(find_in(ws.lattices, id, "lattice"));
  Report report;
  report.add("result", result.valid ? "valid" : "invalid");
  if (!result.valid) report.add("reason", result.reason);
  if (result.offending) report.add("pair", pair_value(*result.offending));
  report.print();
  return result.valid ? kOk : kFalse;
}

int cmd_join_meet(const std::string& file, const std::string& id, const std::string& a,
                  const std::string& b, bool join) {
  const Workspace ws = load_workspace(file);
  const FiniteLattice& lattice = find_in(ws.lattices, id, "lattice");
  const LatticeReport validity = validate_lattice(lattice);
  if (!validity.valid) {
    throw Error(ErrorKind::InvalidLattice, id + ": " + validity.reason);
  }
  const JoinMeet result = lattice_join_meet(lattice, Atom(a), Atom(b));
  Report report;
  if (join) {
    report.add("join", quote_atom(result.join));
  } else {
    report.add("meet", quote_atom(result.meet));
  }
  report.print();
  return kOk;
}

int cmd_count(const std::string& file, const std::string& id, unsigned base) {
  const Workspace ws = load_workspace(file);
  const bool is_set = ws.sets.count(Atom(id)) > 0;
  const bool is_multiset = ws.multisets.count(Atom(id)) > 0;
  if (is_set && is_multiset) {
    throw Error(ErrorKind::UnknownReference, id + " names both a set and a multiset");
  }
  Atom numeral = [&] {
    if (is_set) return count_set(ws.sets.at(Atom(id)), scale_for_base(base));
    if (is_multiset) return count_multiset(ws.multisets.at(Atom(id)), scale_for_base(base));
    throw Error(ErrorKind::UnknownReference, "no set or multiset named " + id);
  }();
  Report report;
  report.add("numeral", quote_atom(numeral));
  report.print();
  return kOk;
}

int cmd_succ(const std::string& numeral, unsigned base) {
  Report report;
  report.add("numeral", quote_atom(successor_numeral(Atom(numeral), scale_for_base(base))));
  report.print();
  return kOk;
}

int cmd_apply_property(const std::string& file, const std::string& id, const std::string& u) {
  const Workspace ws = load_workspace(file);
  const auto value = apply_property(find_in(ws.properties, id, "property"), Atom(u));
  Report report;
  report.add("defined", value.has_value());
  if (value) report.add("value", quote_atom(*value));
  report.print();
  return value ? kOk : kFalse;
}

int cmd_deduce(const std::string& file, const std::string& id, unsigned depth) {
  const Workspace ws = load_workspace(file);
  const AtomSet theorems = deduce(find_in(ws.calculi, id, "calculus"), depth);
  Report report;
  report.add("theorems", atom_list_value(theorems));
  report.print();
  return kOk;
}

int cmd_deduction_set(const std::string& file, const std::string& id, unsigned depth) {
  const Workspace ws = load_workspace(file);
  print_named_set(deduction_named_set(find_in(ws.calculi, id, "calculus"), depth));
  return kOk;
}

int cmd_run_automaton(const std::string& file, const std::string& id, const std::string& word) {
  const Workspace ws = load_workspace(file);
  const MealyAutomaton& a = find_in(ws.automata, id, "automaton");
  const AutomatonRun run = run_automaton(a, word_from_arg(word, a.inputs, "an input symbol"));
  Report report;
  report.add("output", render_word(run.output));
  report.add("end", quote_atom(run.end));
  report.add("accepted", run.accepted);
  report.print();
  return run.accepted ? kOk : kFalse;
}

int cmd_derive(const std::string& file, const std::string& id, const std::string& word,
               std::size_t max_steps, std::size_t max_len) {
  const Workspace ws = load_workspace(file);
  const Grammar& g = find_in(ws.grammars, id, "grammar");
  const DerivationResult result =
      derive_grammar(g, word_from_arg(word, g.terminals, "a terminal"), max_steps, max_len);
  Report report;
  if (result.derivation) {
    std::string line;
    for (const Word& form : *result.derivation) {
      if (!line.empty()) line += " => ";
      line += render_word(form);
    }
    report.add("result", "found");
    report.add("derivation", line);
    report.add("steps", std::to_string(result.derivation->size() - 1));
  } else {
    report.add("result", "notfound");
    report.add("exhausted", result.frontier_exhausted);
  }
  report.print();
  return result.derivation ? kOk : kFalse;
}

int cmd_run_tm(const std::string& file, const std::string& id, const std::string& word,
               std::size_t max_steps) {
  const Workspace ws = load_workspace(file);
  const TuringMachine& t = find_in(ws.turing_machines, id, "tm");
  const TmRun run = run_tm(t, word_from_arg(word, t.alphabet, "in the alphabet"), max_steps);
  Report report;
  report.add("tape", render_word(run.tape));
  report.add("halted", run.halted);
  report.add("steps", std::to_string(run.steps));
  report.print();
  return run.halted ? kOk : kFalse;
}

int cmd_decompose(const std::string& file, const std::string& id) {
  const Workspace ws = load_workspace(file);
  const Atom key(id);
  std::vector<std::string> matches;
  if (ws.turing_machines.count(key)) matches.push_back("tm");
  if (ws.automata.count(key)) matches.push_back("automaton");
  if (ws.grammars.count(key)) matches.push_back("grammar");
  if (ws.calculi.count(key)) matches.push_back("calculus");
  if (matches.empty()) {
    throw Error(ErrorKind::UnknownReference, "no tm, automaton, grammar, or calculus named " + id);
  }
  if (matches.size() > 1) {
    throw Error(ErrorKind::UnknownReference, id + " is declared by more than one kind");
  }
  if (matches[0] == "tm") {
    std::cout << render_triad_tree(decompose(ws.turing_machines.at(key)));
  } else if (matches[0] == "automaton") {
    std::cout << render_triad_tree(decompose(ws.automata.at(key)));
  } else if (matches[0] == "grammar") {
    std::cout << render_triad_tree(decompose(ws.grammars.at(key)));
  } else {
    std::cout << render_triad_tree(decompose(ws.calculi.at(key)));
  }
  return kOk;
}

int cmd_rule_as_namedset(const std::string& file, const std::string& id, std::size_t index) {
  const Workspace ws = load_workspace(file);
  const Atom key(id);
  const Atom rule_id(id + ".rule" + std::to_string(index));
  int matches = 0;
  matches += ws.turing_machines.count(key) ? 1 : 0;
  matches += ws.grammars.count(key) ? 1 : 0;
  matches += ws.calculi.count(key) ? 1 : 0;
  if (matches > 1) {
    throw Error(ErrorKind::UnknownReference, id + " is declared by more than one kind");
  }
  auto out_of_range = [&](std::size_t size) {
    return Error(ErrorKind::UnknownReference,
                 "rule index " + std::to_string(index) + " out of range; " + id + " has " +
                     std::to_string(size) + " rules");
  };
  if (ws.turing_machines.count(key)) {
    const auto& rules = ws.turing_machines.at(key).rules;
    if (index >= rules.size()) throw out_of_range(rules.size());
    print_named_set(rule_as_named_set(*std::next(rules.begin(), static_cast<long>(index)), rule_id));
  } else if (ws.grammars.count(key)) {
    const auto& rules = ws.grammars.at(key).productions;
    if (index >= rules.size()) throw out_of_range(rules.size());
    print_named_set(rule_as_named_set(*std::next(rules.begin(), static_cast<long>(index)), rule_id));
  } else if (ws.calculi.count(key)) {
    const auto& rules = ws.calculi.at(key).rules;
    if (index >= rules.size()) throw out_of_range(rules.size());
    print_named_set(rule_as_named_set(*std::next(rules.begin(), static_cast<long>(index)), rule_id));
  } else {
    throw Error(ErrorKind::UnknownReference, "no tm, grammar, or calculus named " + id);
  }
  return kOk;
}

int cmd_fmt(const std::string& file, bool in_place) {
  const Workspace ws = load_workspace(file);
  const std::string canonical = serialize_workspace(ws);
  if (in_place) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "error: cannot write " << file << "\n";
      return kRuntime;
    }
    out << canonical;
  } else {
    std::cout << canonical;
  }
  return kOk;
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv) {
  CLI::App app{"Finite named sets: morphisms, category checks, and reductions of classical "
               "structures to named-set form"};
  app.require_subcommand(1);

  std::string file, id, id2, elem, word_arg, numeral, scale_spec = "unit";
  unsigned base = 10, depth = 0;
  std::size_t max_steps = 0, max_len = 0, index = 0;
  bool weak = false, in_place = false;

  int result = kUsage;
  auto run = [&](auto body) {
    return [&, body]() {
      try {
        result = body();
      } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        result = kRuntime;
      } catch (const ExitWith& e) {
        result = e.code;
      }
    };
  };

  auto* validate = app.add_subcommand("validate", "Parse a workspace and report its contents");
  validate->add_option("FILE", file)->required();
  validate->callback(run([&] { return cmd_validate(file); }));

  auto* classify_cmd = app.add_subcommand("classify", "Classify a named set");
  classify_cmd->add_option("FILE", file)->required();
  classify_cmd->add_option("ID", id)->required();
  classify_cmd->callback(run([&] { return cmd_classify(file, id); }));

  auto* names = app.add_subcommand("names", "Complete name of a support element");
  names->add_option("FILE", file)->required();
  names->add_option("ID", id)->required();
  names->add_option("ELEM", elem)->required();
  names->callback(run([&] { return cmd_names(file, id, elem); }));

  auto* subset = app.add_subcommand("subset", "Is Y a named subset of X?");
  subset->add_option("FILE", file)->required();
  subset->add_option("Y", id)->required();
  subset->add_option("X", id2)->required();
  subset->add_flag("--weak", weak, "Weak inclusion");
  subset->callback(run([&] { return cmd_subset(file, id, id2, weak); }));

  auto* checkm = app.add_subcommand("check-morphism", "Check the commuting square");
  checkm->add_option("FILE", file)->required();
  checkm->add_option("F", id)->required();
  checkm->callback(run([&] { return cmd_check_morphism(file, id); }));

  auto* compose = app.add_subcommand("compose", "Compose two morphisms (F then G)");
  compose->add_option("FILE", file)->required();
  compose->add_option("F", id)->required();
  compose->add_option("G", id2)->required();
  compose->callback(run([&] { return cmd_compose(file, id, id2); }));

  auto* category = app.add_subcommand("category-check", "Category laws over the whole workspace");
  category->add_option("FILE", file)->required();
  category->callback(run([&] { return cmd_category_check(file); }));

  auto* embed = app.add_subcommand("embed", "Embed a plain set as a singlenamed set");
  embed->add_option("FILE", file)->required();
  embed->add_option("SET", id)->required();
  embed->add_option("NAME", elem)->required();
  embed->callback(run([&] { return cmd_embed(file, id, elem); }));

  auto* asm_cmd = app.add_subcommand("as-multiset", "Read a named set as a multiset");
  asm_cmd->add_option("FILE", file)->required();
  asm_cmd->add_option("ID", id)->required();
  asm_cmd->add_option("--base", base, "Numeral base")->default_val(10);
  asm_cmd->callback(run([&] { return cmd_as_multiset(file, id, base); }));

  auto* asf_cmd = app.add_subcommand("as-fuzzy", "Read a named set as a fuzzy set");
  asf_cmd->add_option("FILE", file)->required();
  asf_cmd->add_option("ID", id)->required();
  asf_cmd->add_option("--scale", scale_spec, "unit|sym|real|lattice:L")->required();
  asf_cmd->callback(run([&] { return cmd_as_fuzzy(file, id, scale_spec); }));

  auto* tons = app.add_subcommand("to-namedset", "Render a multiset or fuzzy set as a named set");
  tons->add_option("FILE", file)->required();
  tons->add_option("ID", id)->required();
  tons->callback(run([&] { return cmd_to_namedset(file, id); }));

  auto* tok = app.add_subcommand("tokenize", "Token form of a multiset");
  tok->add_option("FILE", file)->required();
  tok->add_option("ID", id)->required();
  tok->callback(run([&] { return cmd_tokenize(file, id); }));

  auto* lat = app.add_subcommand("lattice-check", "Validate the lattice axioms");
  lat->add_option("FILE", file)->required();
  lat->add_option("L", id)->required();
  lat->callback(run([&] { return cmd_lattice_check(file, id); }));

  auto* join = app.add_subcommand("join", "Least upper bound in a lattice");
  join->add_option("FILE", file)->required();
  join->add_option("L", id)->required();
  join->add_option("a", elem)->required();
  join->add_option("b", id2)->required();
  join->callback(run([&] { return cmd_join_meet(file, id, elem, id2, true); }));

  auto* meet = app.add_subcommand("meet", "Greatest lower bound in a lattice");
  meet->add_option("FILE", file)->required();
  meet->add_option("L", id)->required();
  meet->add_option("a", elem)->required();
  meet->add_option("b", id2)->required();
  meet->callback(run([&] { return cmd_join_meet(file, id, elem, id2, false); }));

  auto* count = app.add_subcommand("count", "Numeral of a set's or multiset's size");
  count->add_option("FILE", file)->required();
  count->add_option("ID", id)->required();
  count->add_option("--base", base, "Numeral base")->default_val(10);
  count->callback(run([&] { return cmd_count(file, id, base); }));

  auto* succ = app.add_subcommand("succ", "Successor of a canonical numeral");
  succ->add_option("NUMERAL", numeral)->required();
  succ->add_option("--base", base, "Numeral base")->default_val(10);
  succ->callback(run([&] { return cmd_succ(numeral, base); }));

  auto* apply = app.add_subcommand("apply-property", "Look up a property valuation");
  apply->add_option("FILE", file)->required();
  apply->add_option("P", id)->required();
  apply->add_option("u", elem)->required();
  apply->callback(run([&] { return cmd_apply_property(file, id, elem); }));

  auto* deduce_cmd = app.add_subcommand("deduce", "Theorems derivable within a depth");
  deduce_cmd->add_option("FILE", file)->required();
  deduce_cmd->add_option("C", id)->required();
  deduce_cmd->add_option("--depth", depth, "Closure depth")->required();
  deduce_cmd->callback(run([&] { return cmd_deduce(file, id, depth); }));

  auto* dset = app.add_subcommand("deduction-set", "Deduction named set of a calculus");
  dset->add_option("FILE", file)->required();
  dset->add_option("C", id)->required();
  dset->add_option("--depth", depth, "Closure depth")->required();
  dset->callback(run([&] { return cmd_deduction_set(file, id, depth); }));

  auto* runa = app.add_subcommand("run-automaton", "Run a Mealy automaton on a word");
  runa->add_option("FILE", file)->required();
  runa->add_option("A", id)->required();
  runa->add_option("WORD", word_arg);
  runa->callback(run([&] { return cmd_run_automaton(file, id, word_arg); }));

  auto* derive = app.add_subcommand("derive", "Search for a derivation of a terminal word");
  derive->add_option("FILE", file)->required();
  derive->add_option("G", id)->required();
  derive->add_option("WORD", word_arg);
  derive->add_option("--max-steps", max_steps, "Derivation length bound")->required();
  derive->add_option("--max-len", max_len, "Sentential form length bound")->required();
  derive->callback(run([&] { return cmd_derive(file, id, word_arg, max_steps, max_len); }));

  auto* runtm = app.add_subcommand("run-tm", "Run a deterministic Turing machine");
  runtm->add_option("FILE", file)->required();
  runtm->add_option("T", id)->required();
  runtm->add_option("WORD", word_arg);
  runtm->add_option("--max-steps", max_steps, "Step budget")->required();
  runtm->callback(run([&] { return cmd_run_tm(file, id, word_arg, max_steps); }));

  auto* dec = app.add_subcommand("decompose", "Triad-tree decomposition of a structure");
  dec->add_option("FILE", file)->required();
  dec->add_option("ID", id)->required();
  dec->callback(run([&] { return cmd_decompose(file, id); }));

  auto* rulens = app.add_subcommand("rule-as-namedset", "One rule as a named set");
  rulens->add_option("FILE", file)->required();
  rulens->add_option("ID", id)->required();
  rulens->add_option("INDEX", index)->required();
  rulens->callback(run([&] { return cmd_rule_as_namedset(file, id, index); }));

  auto* fmt = app.add_subcommand("fmt", "Canonicalize a workspace file");
  fmt->add_option("FILE", file)->required();
  fmt->add_flag("-i,--in-place", in_place, "Rewrite the file instead of printing");
  fmt->callback(run([&] { return cmd_fmt(file, in_place); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return result;
}

}  // namespace triad
