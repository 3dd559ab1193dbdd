#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "triad/textio.hpp"

// Workspace block format:
//
//   # comment to end of line
//   kind Id { key: items ; ... }
//
// Atoms are bare [A-Za-z0-9_.+-]+ or double-quoted with \" and \\ escapes.
// Item syntaxes: pairs a->n, counted entries a:2, degrees a:1/2 or a:elem,
// order generators x<=y, transitions (s,q)->(q2,o), productions S -> a S b
// (comma-separated), TM rules q 1 -> R q2, calculus rules "p" "q" => "r".
// Commas are accepted as separators in any item list.

namespace triad {

namespace {

enum class Tok {
  Ident,
  Quoted,
  LBrace,
  RBrace,
  Colon,
  Semi,
  Arrow,    // ->
  Implies,  // =>
  Leq,      // <=
  LParen,
  RParen,
  Comma,
  Slash,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int line = 0;
  int col = 0;

  bool is_atom() const { return kind == Tok::Ident || kind == Tok::Quoted; }
};

struct SyntaxError {
  int line;
  int col;
  std::string message;
};

bool is_bare_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '+' ||
         c == '-';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_blank();
      Token token;
      token.line = line_;
      token.col = col_;
      if (pos_ >= text_.size()) {
        token.kind = Tok::End;
        tokens.push_back(token);
        return tokens;
      }
      const char c = text_[pos_];
      if (c == '"') {
        token.kind = Tok::Quoted;
        token.text = quoted();
      } else if (is_bare_char(c)) {
        token.kind = Tok::Ident;
        token.text = bare();
        if (token.text.empty()) {
          // A lone '-' directly before '>' is the arrow operator.
          token.kind = Tok::Arrow;
          advance();
          advance();
        }
      } else {
        switch (c) {
          case '{': token.kind = Tok::LBrace; advance(); break;
          case '}': token.kind = Tok::RBrace; advance(); break;
          case ':': token.kind = Tok::Colon; advance(); break;
          case ';': token.kind = Tok::Semi; advance(); break;
          case '(': token.kind = Tok::LParen; advance(); break;
          case ')': token.kind = Tok::RParen; advance(); break;
          case ',': token.kind = Tok::Comma; advance(); break;
          case '/': token.kind = Tok::Slash; advance(); break;
          case '=':
            if (peek(1) == '>') {
              token.kind = Tok::Implies;
              advance();
              advance();
            } else {
              fail("expected '>' after '='");
            }
            break;
          case '<':
            if (peek(1) == '=') {
              token.kind = Tok::Leq;
              advance();
              advance();
            } else {
              fail("expected '=' after '<'");
            }
            break;
          default:
            fail(std::string("unexpected character '") + c + "'");
        }
      }
      tokens.push_back(std::move(token));
    }
  }

 private:
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        return;
      }
    }
  }

  // Bare atom text; stops before "->" so pairs like a->n lex apart. Returns
  // empty when the position starts directly at "->".
  std::string bare() {
    std::string out;
    while (pos_ < text_.size() && is_bare_char(text_[pos_])) {
      if (text_[pos_] == '-' && peek(1) == '>') break;
      out.push_back(text_[pos_]);
      advance();
    }
    return out;
  }

  std::string quoted() {
    const int line = line_;
    const int col = col_;
    advance();  // opening quote
    std::string out;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n') {
        throw SyntaxError{line, col, "unterminated string"};
      }
      const char c = text_[pos_];
      if (c == '"') {
        advance();
        if (out.empty()) throw SyntaxError{line, col, "empty atom"};
        return out;
      }
      if (c == '\\') {
        const char escaped = peek(1);
        if (escaped != '"' && escaped != '\\') {
          throw SyntaxError{line_, col_, "unknown escape in string"};
        }
        out.push_back(escaped);
        advance();
        advance();
      } else if (static_cast<unsigned char>(c) < 0x20 || c == 0x7f) {
        throw SyntaxError{line_, col_, "control character in string"};
      } else {
        out.push_back(c);
        advance();
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError{line_, col_, message};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// ---------------------------------------------------------------------------

struct Located {
  Atom atom;
  int line;
  int col;
};

Diagnostic error_at(Diagnostic::Category category, int line, int col, std::string message) {
  return Diagnostic{Diagnostic::Severity::Error, category, line, col, std::move(message)};
}

// Raw morphism and fuzzy-set blocks wait for cross-reference resolution.
struct RawMorphism {
  Located id;
  std::optional<Located> source;
  std::optional<Located> target;
  std::vector<std::pair<Located, Located>> element_map;
  std::vector<std::pair<Located, Located>> name_map;
};

struct RawFuzzy {
  Located id;
  AtomSet universe;
  std::string scale_kind;  // unit | sym | real | lattice
  std::optional<Located> scale_lattice;
  int scale_line = 0, scale_col = 0;
  int degrees_line = 0, degrees_col = 0;
  std::vector<std::pair<Located, Located>> degrees;  // element -> raw degree text
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ParseResult run() {
    ParseResult result;
    bool syntax_failed = false;
    try {
      while (peek().kind != Tok::End) {
        block();
      }
    } catch (const SyntaxError& e) {
      diagnostics_.push_back(
          error_at(Diagnostic::Category::Syntax, e.line, e.col, e.message));
      syntax_failed = true;
    }
    if (!syntax_failed) {
      resolve_morphisms();
      resolve_fuzzy_sets();
    }
    result.diagnostics = std::move(diagnostics_);
    const bool failed =
        std::any_of(result.diagnostics.begin(), result.diagnostics.end(),
                    [](const Diagnostic& d) { return d.severity == Diagnostic::Severity::Error; });
    if (!failed) result.workspace = std::move(workspace_);
    return result;
  }

 private:
  // --- token plumbing ------------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t i = std::min(index_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  Token next() {
    Token t = peek();
    if (index_ + 1 < tokens_.size()) ++index_;
    return t;
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw SyntaxError{peek().line, peek().col, std::string("expected ") + what};
    }
    return next();
  }

  Located atom(const char* what) {
    if (!peek().is_atom()) {
      throw SyntaxError{peek().line, peek().col, std::string("expected ") + what};
    }
    Token t = next();
    return Located{Atom(t.text), t.line, t.col};
  }

  void skip_commas() {
    while (peek().kind == Tok::Comma) next();
  }

  bool at_item() { return peek().kind != Tok::Semi && peek().kind != Tok::End; }

  void invariant(int line, int col, std::string message) {
    diagnostics_.push_back(error_at(Diagnostic::Category::Invariant, line, col,
                                    std::move(message)));
  }

  void reference(int line, int col, std::string message) {
    diagnostics_.push_back(error_at(Diagnostic::Category::Reference, line, col,
                                    std::move(message)));
  }

  // --- generic item lists --------------------------------------------------

  AtomSet atom_list() {
    AtomSet out;
    skip_commas();
    while (at_item()) {
      out.insert(atom("an atom").atom);
      skip_commas();
    }
    return out;
  }

  std::vector<Located> located_list() {
    std::vector<Located> out;
    skip_commas();
    while (at_item()) {
      out.push_back(atom("an atom"));
      skip_commas();
    }
    return out;
  }

  std::vector<std::pair<Located, Located>> pair_list() {
    std::vector<std::pair<Located, Located>> out;
    skip_commas();
    while (at_item()) {
      Located from = atom("an atom");
      expect(Tok::Arrow, "'->'");
      Located to = atom("an atom");
      out.emplace_back(std::move(from), std::move(to));
      skip_commas();
    }
    return out;
  }

  std::vector<std::pair<Located, Located>> colon_list() {
    std::vector<std::pair<Located, Located>> out;
    skip_commas();
    while (at_item()) {
      Located key = atom("an atom");
      expect(Tok::Colon, "':'");
      Located value = atom("an atom");
      out.emplace_back(std::move(key), std::move(value));
      skip_commas();
    }
    return out;
  }

  // --- block dispatch ------------------------------------------------------

  struct BlockBody {
    Located id;
    std::map<std::string, Token> keys;  // key name -> key token (for locations)
  };

  void block() {
    const Token kind = expect(Tok::Ident, "a block kind");
    Located id = atom("a block id");
    expect(Tok::LBrace, "'{'");
    if (kind.text == "namedset") {
      named_set_block(id);
    } else if (kind.text == "set") {
      set_block(id);
    } else if (kind.text == "multiset") {
      multiset_block(id);
    } else if (kind.text == "lattice") {
      lattice_block(id);
    } else if (kind.text == "fuzzyset") {
      fuzzy_block(id);
    } else if (kind.text == "morphism") {
      morphism_block(id);
    } else if (kind.text == "property") {
      property_block(id);
    } else if (kind.text == "calculus") {
      calculus_block(id);
    } else if (kind.text == "automaton") {
      automaton_block(id);
    } else if (kind.text == "grammar") {
      grammar_block(id);
    } else if (kind.text == "tm") {
      tm_block(id);
    } else {
      throw SyntaxError{kind.line, kind.col, "unknown block kind '" + kind.text + "'"};
    }
    expect(Tok::RBrace, "'}'");
  }

  // Reads `key:` and dispatches on the key name; rejects unknown/duplicate keys.
  void entries(const std::vector<std::string>& allowed,
               const std::function<void(const std::string&, const Token&)>& handle) {
    std::set<std::string> seen;
    while (peek().kind != Tok::RBrace && peek().kind != Tok::End) {
      const Token key = expect(Tok::Ident, "a key");
      expect(Tok::Colon, "':'");
      if (std::find(allowed.begin(), allowed.end(), key.text) == allowed.end()) {
        throw SyntaxError{key.line, key.col, "unknown key '" + key.text + "'"};
      }
      if (!seen.insert(key.text).second) {
        throw SyntaxError{key.line, key.col, "duplicate key '" + key.text + "'"};
      }
      handle(key.text, key);
      expect(Tok::Semi, "';'");
    }
  }

  template <typename T>
  void store(std::map<Atom, T>& into, const Located& id, T value) {
    if (!into.emplace(id.atom, std::move(value)).second) {
      invariant(id.line, id.col, "duplicate id " + id.atom.text());
    }
  }

  // --- per-kind blocks -----------------------------------------------------

  void named_set_block(const Located& id) {
    AtomSet support, names;
    std::vector<std::pair<Located, Located>> rel;
    entries({"support", "names", "rel"}, [&](const std::string& key, const Token&) {
      if (key == "support") support = atom_list();
      else if (key == "names") names = atom_list();
      else rel = pair_list();
    });
    PairSet relation;
    for (const auto& [from, to] : rel) {
      if (!support.count(from.atom)) {
        invariant(from.line, from.col,
                  "relation pair references element outside the support: " + from.atom.text());
        continue;
      }
      if (!names.count(to.atom)) {
        invariant(to.line, to.col,
                  "relation pair references name outside the reflector: " + to.atom.text());
        continue;
      }
      relation.insert({from.atom, to.atom});
    }
    store(workspace_.named_sets, id,
          NamedSet{id.atom, std::move(support), std::move(names), std::move(relation)});
  }

  void set_block(const Located& id) {
    AtomSet elements;
    entries({"elements"}, [&](const std::string&, const Token&) { elements = atom_list(); });
    store(workspace_.sets, id, PlainSet{id.atom, std::move(elements)});
  }

  void multiset_block(const Located& id) {
    std::map<Atom, std::uint64_t> multiplicity;
    entries({"items"}, [&](const std::string&, const Token&) {
      for (const auto& [key, value] : colon_list()) {
        const auto count = NumeralScale::decimal().parse(value.atom.text());
        if (!count) {
          invariant(value.line, value.col, "multiplicity is not a decimal numeral: " +
                                               value.atom.text());
          continue;
        }
        if (*count == 0) {
          invariant(value.line, value.col, "zero multiplicity for " + key.atom.text());
          continue;
        }
        auto [it, inserted] = multiplicity.emplace(key.atom, *count);
        if (!inserted && it->second != *count) {
          invariant(key.line, key.col, "conflicting multiplicities for " + key.atom.text());
        }
      }
    });
    store(workspace_.multisets, id, MultisetM{id.atom, std::move(multiplicity)});
  }

  void lattice_block(const Located& id) {
    AtomSet carrier;
    std::vector<std::pair<Located, Located>> generators;
    entries({"carrier", "order"}, [&](const std::string& key, const Token&) {
      if (key == "carrier") {
        carrier = atom_list();
      } else {
        skip_commas();
        while (at_item()) {
          Located lo = atom("an atom");
          expect(Tok::Leq, "'<='");
          Located hi = atom("an atom");
          generators.emplace_back(std::move(lo), std::move(hi));
          skip_commas();
        }
      }
    });
    PairSet pairs;
    for (const auto& [lo, hi] : generators) {
      bool ok = true;
      if (!carrier.count(lo.atom)) {
        invariant(lo.line, lo.col, "order pair references " + lo.atom.text());
        ok = false;
      }
      if (!carrier.count(hi.atom)) {
        invariant(hi.line, hi.col, "order pair references " + hi.atom.text());
        ok = false;
      }
      if (ok) pairs.insert({lo.atom, hi.atom});
    }
    store(workspace_.lattices, id, make_lattice(id.atom, std::move(carrier), std::move(pairs)));
  }

  void fuzzy_block(const Located& id) {
    RawFuzzy raw{id, {}, {}, {}, 0, 0, 0, 0, {}};
    bool have_scale = false;
    entries({"universe", "scale", "degrees"}, [&](const std::string& key, const Token& at) {
      if (key == "universe") {
        raw.universe = atom_list();
      } else if (key == "scale") {
        have_scale = true;
        raw.scale_line = at.line;
        raw.scale_col = at.col;
        const Token kind = expect(Tok::Ident, "a scale kind");
        raw.scale_kind = kind.text;
        if (kind.text == "lattice") {
          expect(Tok::Colon, "':'");
          raw.scale_lattice = atom("a lattice id");
        } else if (kind.text != "unit" && kind.text != "sym" && kind.text != "real") {
          throw SyntaxError{kind.line, kind.col, "unknown scale '" + kind.text + "'"};
        }
      } else {
        raw.degrees_line = at.line;
        raw.degrees_col = at.col;
        skip_commas();
        while (at_item()) {
          Located element = atom("an atom");
          expect(Tok::Colon, "':'");
          Located value = atom("a degree");
          if (peek().kind == Tok::Slash) {
            next();
            Located den = atom("a denominator");
            value.atom = Atom(value.atom.text() + "/" + den.atom.text());
          }
          raw.degrees.emplace_back(std::move(element), std::move(value));
          skip_commas();
        }
      }
    });
    if (!have_scale) {
      throw SyntaxError{peek().line, peek().col,
                        "fuzzyset " + id.atom.text() + " declares no scale"};
    }
    raw_fuzzy_.push_back(std::move(raw));
  }

  void morphism_block(const Located& id) {
    RawMorphism raw{id, {}, {}, {}, {}};
    entries({"source", "target", "f", "g"}, [&](const std::string& key, const Token&) {
      if (key == "source") raw.source = atom("a named set id");
      else if (key == "target") raw.target = atom("a named set id");
      else if (key == "f") raw.element_map = pair_list();
      else raw.name_map = pair_list();
    });
    if (!raw.source || !raw.target) {
      throw SyntaxError{id.line, id.col,
                        "morphism " + id.atom.text() + " needs both source and target"};
    }
    raw_morphisms_.push_back(std::move(raw));
  }

  void property_block(const Located& id) {
    std::optional<Located> universe, scale;
    std::map<Atom, Atom> valuation;
    entries({"universe", "scale", "values"}, [&](const std::string& key, const Token&) {
      if (key == "universe") {
        universe = atom("a universe label");
      } else if (key == "scale") {
        scale = atom("a scale label");
      } else {
        for (const auto& [u, v] : colon_list()) {
          auto [it, inserted] = valuation.emplace(u.atom, v.atom);
          if (!inserted && it->second != v.atom) {
            invariant(u.line, u.col, "conflicting values for " + u.atom.text());
          }
        }
      }
    });
    if (!universe || !scale) {
      throw SyntaxError{id.line, id.col,
                        "property " + id.atom.text() + " needs universe and scale labels"};
    }
    store(workspace_.properties, id,
          Property{id.atom, universe->atom, std::move(valuation), scale->atom});
  }

  void calculus_block(const Located& id) {
    AtomSet axioms;
    std::set<GroundRule> rules;
    entries({"axioms", "rules"}, [&](const std::string& key, const Token&) {
      if (key == "axioms") {
        axioms = atom_list();
        return;
      }
      skip_commas();
      while (at_item()) {
        std::vector<Located> premises;
        while (peek().is_atom()) {
          premises.push_back(atom("a sentence"));
          skip_commas();
        }
        const Token arrow = expect(Tok::Implies, "'=>'");
        Located conclusion = atom("a sentence");
        if (premises.empty()) {
          invariant(arrow.line, arrow.col, "rule has no premises; axioms belong in axioms:");
        } else {
          AtomSet premise_set;
          for (const Located& p : premises) premise_set.insert(p.atom);
          rules.insert(GroundRule{std::move(premise_set), conclusion.atom});
        }
        skip_commas();
      }
    });
    store(workspace_.calculi, id, Calculus{id.atom, std::move(axioms), std::move(rules)});
  }

  void automaton_block(const Located& id) {
    AtomSet inputs, states, outputs, finals;
    std::optional<Located> start;
    std::vector<std::pair<std::pair<Located, Located>, std::pair<Located, Located>>> delta;
    Token delta_key;
    entries({"inputs", "states", "outputs", "start", "finals", "delta"},
            [&](const std::string& key, const Token& at) {
              if (key == "inputs") inputs = atom_list();
              else if (key == "states") states = atom_list();
              else if (key == "outputs") outputs = atom_list();
              else if (key == "start") start = atom("a state");
              else if (key == "finals") finals = atom_list();
              else {
                delta_key = at;
                skip_commas();
                while (at_item()) {
                  expect(Tok::LParen, "'('");
                  Located in = atom("an input symbol");
                  expect(Tok::Comma, "','");
                  Located from = atom("a state");
                  expect(Tok::RParen, "')'");
                  expect(Tok::Arrow, "'->'");
                  expect(Tok::LParen, "'('");
                  Located to = atom("a state");
                  expect(Tok::Comma, "','");
                  Located out = atom("an output symbol");
                  expect(Tok::RParen, "')'");
                  delta.push_back({{in, from}, {to, out}});
                  skip_commas();
                }
              }
            });
    if (!start) {
      throw SyntaxError{id.line, id.col, "automaton " + id.atom.text() + " needs a start state"};
    }

    bool ok = true;
    if (!states.count(start->atom)) {
      invariant(start->line, start->col, "start state is not declared: " + start->atom.text());
      ok = false;
    }
    for (const Atom& f : finals) {
      if (!states.count(f)) {
        invariant(id.line, id.col, "final state is not declared: " + f.text());
        ok = false;
      }
    }
    std::map<AtomPair, AtomPair> transition;
    for (const auto& [key, value] : delta) {
      const auto& [in, from] = key;
      const auto& [to, out] = value;
      bool entry_ok = true;
      if (!inputs.count(in.atom)) {
        invariant(in.line, in.col, "undeclared input symbol: " + in.atom.text());
        entry_ok = false;
      }
      if (!states.count(from.atom)) {
        invariant(from.line, from.col, "undeclared state: " + from.atom.text());
        entry_ok = false;
      }
      if (!states.count(to.atom)) {
        invariant(to.line, to.col, "undeclared state: " + to.atom.text());
        entry_ok = false;
      }
      if (!outputs.count(out.atom)) {
        invariant(out.line, out.col, "undeclared output symbol: " + out.atom.text());
        entry_ok = false;
      }
      if (!entry_ok) {
        ok = false;
        continue;
      }
      auto [it, inserted] =
          transition.emplace(AtomPair{in.atom, from.atom}, AtomPair{to.atom, out.atom});
      if (!inserted && it->second != AtomPair{to.atom, out.atom}) {
        invariant(in.line, in.col, "conflicting transitions on (" + in.atom.text() + ", " +
                                       from.atom.text() + ")");
        ok = false;
      }
    }
    const int gap_line = delta_key.line ? delta_key.line : id.line;
    const int gap_col = delta_key.line ? delta_key.col : id.col;
    for (const Atom& in : inputs) {
      for (const Atom& state : states) {
        if (!transition.count({in, state})) {
          invariant(gap_line, gap_col,
                    "delta is undefined on (" + in.text() + ", " + state.text() + ")");
          ok = false;
        }
      }
    }
    if (!ok) return;  // diagnostics already recorded; skip the malformed machine
    store(workspace_.automata, id,
          MealyAutomaton{id.atom, std::move(inputs), std::move(states), std::move(outputs),
                         start->atom, std::move(finals), std::move(transition)});
  }

  void grammar_block(const Located& id) {
    AtomSet variables, terminals;
    std::optional<Located> start;
    std::vector<std::pair<std::vector<Located>, std::vector<Located>>> productions;
    entries({"variables", "terminals", "start", "productions"},
            [&](const std::string& key, const Token&) {
              if (key == "variables") variables = atom_list();
              else if (key == "terminals") terminals = atom_list();
              else if (key == "start") start = atom("a variable");
              else {
                skip_commas();
                while (at_item()) {
                  std::vector<Located> left;
                  while (peek().is_atom()) left.push_back(atom("a symbol"));
                  expect(Tok::Arrow, "'->'");
                  std::vector<Located> right;
                  while (peek().is_atom()) right.push_back(atom("a symbol"));
                  productions.push_back({std::move(left), std::move(right)});
                  skip_commas();
                }
              }
            });
    if (!start) {
      throw SyntaxError{id.line, id.col, "grammar " + id.atom.text() + " needs a start symbol"};
    }

    bool ok = true;
    for (const Atom& v : variables) {
      if (terminals.count(v)) {
        invariant(id.line, id.col, v.text() + " is declared both variable and terminal");
        ok = false;
      }
    }
    if (!variables.count(start->atom)) {
      invariant(start->line, start->col, "start symbol is not a variable: " + start->atom.text());
      ok = false;
    }
    auto declared = [&](const Atom& s) { return variables.count(s) || terminals.count(s); };
    std::set<std::pair<Word, Word>> rules;
    for (const auto& [left, right] : productions) {
      bool entry_ok = true;
      bool has_variable = false;
      Word lword, rword;
      for (const Located& s : left) {
        if (!declared(s.atom)) {
          invariant(s.line, s.col, "undeclared symbol: " + s.atom.text());
          entry_ok = false;
        }
        if (variables.count(s.atom)) has_variable = true;
        lword.push_back(s.atom);
      }
      for (const Located& s : right) {
        if (!declared(s.atom)) {
          invariant(s.line, s.col, "undeclared symbol: " + s.atom.text());
          entry_ok = false;
        }
        rword.push_back(s.atom);
      }
      if (entry_ok && !has_variable) {
        const int line = left.empty() ? id.line : left.front().line;
        const int col = left.empty() ? id.col : left.front().col;
        invariant(line, col, "production left side contains no variable");
        entry_ok = false;
      }
      if (!entry_ok) {
        ok = false;
        continue;
      }
      rules.insert({std::move(lword), std::move(rword)});
    }
    if (!ok) return;
    store(workspace_.grammars, id,
          Grammar{id.atom, std::move(variables), std::move(terminals), start->atom,
                  std::move(rules)});
  }

  void tm_block(const Located& id) {
    AtomSet alphabet, states, finals;
    std::optional<Located> blank, start;
    struct RawRule {
      Located state, symbol;
      TmAction action;
      std::optional<Located> write;
      Located next;
    };
    std::vector<RawRule> raw_rules;
    entries({"alphabet", "blank", "states", "start", "finals", "rules"},
            [&](const std::string& key, const Token&) {
              if (key == "alphabet") alphabet = atom_list();
              else if (key == "blank") blank = atom("a symbol");
              else if (key == "states") states = atom_list();
              else if (key == "start") start = atom("a state");
              else if (key == "finals") finals = atom_list();
              else {
                skip_commas();
                while (at_item()) {
                  Located state = atom("a state");
                  Located symbol = atom("a symbol");
                  expect(Tok::Arrow, "'->'");
                  // Unquoted R/L is a move; anything else (including quoted
                  // "R"/"L") writes that symbol without moving.
                  RawRule rule{state, symbol, TmAction::Write, std::nullopt, state};
                  if (peek().kind == Tok::Ident && (peek().text == "R" || peek().text == "L")) {
                    rule.action = peek().text == "R" ? TmAction::MoveRight : TmAction::MoveLeft;
                    next();
                  } else {
                    rule.write = atom("a symbol");
                  }
                  rule.next = atom("a state");
                  raw_rules.push_back(std::move(rule));
                  skip_commas();
                }
              }
            });
    if (!blank || !start) {
      throw SyntaxError{id.line, id.col,
                        "tm " + id.atom.text() + " needs blank and start declarations"};
    }

    bool ok = true;
    if (!alphabet.count(blank->atom)) {
      invariant(blank->line, blank->col, "blank is not in the alphabet: " + blank->atom.text());
      ok = false;
    }
    if (!states.count(start->atom)) {
      invariant(start->line, start->col, "start state is not declared: " + start->atom.text());
      ok = false;
    }
    for (const Atom& f : finals) {
      if (!states.count(f)) {
        invariant(id.line, id.col, "final state is not declared: " + f.text());
        ok = false;
      }
    }
    std::set<TmRule> rules;
    for (const RawRule& raw : raw_rules) {
      bool entry_ok = true;
      if (!states.count(raw.state.atom)) {
        invariant(raw.state.line, raw.state.col, "undeclared state: " + raw.state.atom.text());
        entry_ok = false;
      }
      if (!alphabet.count(raw.symbol.atom)) {
        invariant(raw.symbol.line, raw.symbol.col,
                  "undeclared symbol: " + raw.symbol.atom.text());
        entry_ok = false;
      }
      if (raw.write && !alphabet.count(raw.write->atom)) {
        invariant(raw.write->line, raw.write->col,
                  "undeclared symbol: " + raw.write->atom.text());
        entry_ok = false;
      }
      if (!states.count(raw.next.atom)) {
        invariant(raw.next.line, raw.next.col, "undeclared state: " + raw.next.atom.text());
        entry_ok = false;
      }
      if (!entry_ok) {
        ok = false;
        continue;
      }
      rules.insert(TmRule{raw.state.atom, raw.symbol.atom, raw.action,
                          raw.write ? std::optional<Atom>(raw.write->atom) : std::nullopt,
                          raw.next.atom});
    }
    if (!ok) return;
    store(workspace_.turing_machines, id,
          TuringMachine{id.atom, std::move(alphabet), blank->atom, std::move(states),
                        start->atom, std::move(finals), std::move(rules)});
  }

  // --- cross-reference resolution -----------------------------------------

  void resolve_morphisms() {
    for (const RawMorphism& raw : raw_morphisms_) {
      const auto source_it = workspace_.named_sets.find(raw.source->atom);
      if (source_it == workspace_.named_sets.end()) {
        reference(raw.source->line, raw.source->col,
                  "unknown named set: " + raw.source->atom.text());
        continue;
      }
      const auto target_it = workspace_.named_sets.find(raw.target->atom);
      if (target_it == workspace_.named_sets.end()) {
        reference(raw.target->line, raw.target->col,
                  "unknown named set: " + raw.target->atom.text());
        continue;
      }
      const NamedSet& source = source_it->second;
      const NamedSet& target = target_it->second;

      bool ok = true;
      auto build = [&](const std::vector<std::pair<Located, Located>>& pairs,
                       const AtomSet& domain, const AtomSet& codomain,
                       const char* which) {
        std::map<Atom, Atom> map;
        for (const auto& [from, to] : pairs) {
          if (!domain.count(from.atom)) {
            invariant(from.line, from.col, std::string(which) + " is defined outside its domain: " +
                                               from.atom.text());
            ok = false;
            continue;
          }
          if (!codomain.count(to.atom)) {
            invariant(to.line, to.col, std::string(which) + " maps into an undeclared element: " +
                                           to.atom.text());
            ok = false;
            continue;
          }
          auto [it, inserted] = map.emplace(from.atom, to.atom);
          if (!inserted && it->second != to.atom) {
            invariant(from.line, from.col,
                      std::string(which) + " maps " + from.atom.text() + " twice");
            ok = false;
          }
        }
        for (const Atom& d : domain) {
          if (!map.count(d)) {
            invariant(raw.id.line, raw.id.col,
                      std::string(which) + " is undefined on " + d.text());
            ok = false;
          }
        }
        return map;
      };
      std::map<Atom, Atom> f = build(raw.element_map, source.support, target.support, "f");
      std::map<Atom, Atom> g = build(raw.name_map, source.reflector, target.reflector, "g");
      if (!ok) continue;
      store(workspace_.morphisms, raw.id,
            Morphism{raw.id.atom, source, target, std::move(f), std::move(g)});
    }
  }

  void resolve_fuzzy_sets() {
    for (const RawFuzzy& raw : raw_fuzzy_) {
      std::optional<Scale> scale;
      if (raw.scale_kind == "unit") {
        scale = Scale::unit();
      } else if (raw.scale_kind == "sym") {
        scale = Scale::symmetric();
      } else if (raw.scale_kind == "real") {
        scale = Scale::real_line();
      } else {
        const auto it = workspace_.lattices.find(raw.scale_lattice->atom);
        if (it == workspace_.lattices.end()) {
          reference(raw.scale_lattice->line, raw.scale_lattice->col,
                    "unknown lattice: " + raw.scale_lattice->atom.text());
          continue;
        }
        const LatticeReport report = validate_lattice(it->second);
        if (!report.valid) {
          invariant(raw.scale_lattice->line, raw.scale_lattice->col,
                    "not a valid lattice: " + report.reason);
          continue;
        }
        scale = Scale::lattice(it->second);
      }

      bool ok = true;
      std::map<Atom, Degree> membership;
      for (const auto& [element, value] : raw.degrees) {
        if (!raw.universe.count(element.atom)) {
          invariant(element.line, element.col,
                    "degree given outside the universe: " + element.atom.text());
          ok = false;
          continue;
        }
        const auto degree = scale->parse_degree(value.atom);
        if (!degree) {
          invariant(value.line, value.col,
                    "degree not admitted by the scale: " + value.atom.text());
          ok = false;
          continue;
        }
        auto [it, inserted] = membership.emplace(element.atom, *degree);
        if (!inserted && it->second != *degree) {
          invariant(element.line, element.col,
                    "conflicting degrees for " + element.atom.text());
          ok = false;
        }
      }
      for (const Atom& u : raw.universe) {
        if (!membership.count(u)) {
          invariant(raw.degrees_line ? raw.degrees_line : raw.id.line,
                    raw.degrees_col ? raw.degrees_col : raw.id.col,
                    "membership is undefined on " + u.text());
          ok = false;
        }
      }
      if (!ok) continue;
      store(workspace_.fuzzy_sets, raw.id,
            FuzzySet{raw.id.atom, raw.universe, std::move(*scale), std::move(membership)});
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  Workspace workspace_;
  std::vector<Diagnostic> diagnostics_;
  std::vector<RawMorphism> raw_morphisms_;
  std::vector<RawFuzzy> raw_fuzzy_;
};

}  // namespace

std::string Diagnostic::str() const {
  const char* severity_name = severity == Severity::Error ? "error" : "warning";
  return "line " + std::to_string(line) + " col " + std::to_string(col) + ": " + severity_name +
         ": " + message;
}

ParseResult parse_workspace(std::string_view text) {
  try {
    Lexer lexer(text);
    Parser parser(lexer.run());
    return parser.run();
  } catch (const SyntaxError& e) {
    ParseResult result;
    result.diagnostics.push_back(
        error_at(Diagnostic::Category::Syntax, e.line, e.col, e.message));
    return result;
  }
}

}  // namespace triad
