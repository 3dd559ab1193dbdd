#include <doctest.h>

#include <string>

#include "triad/textio.hpp"

using namespace triad;

namespace {

Atom a(const std::string& text) { return Atom(text); }

Workspace parse_ok(const std::string& text) {
  ParseResult result = parse_workspace(text);
  for (const Diagnostic& d : result.diagnostics) {
    INFO(d.str());
    CHECK(d.severity != Diagnostic::Severity::Error);
  }
  REQUIRE(result.ok());
  return std::move(*result.workspace);
}

const Diagnostic& first_error(const ParseResult& result) {
  REQUIRE_FALSE(result.ok());
  REQUIRE_FALSE(result.diagnostics.empty());
  return result.diagnostics.front();
}

}  // namespace

TEST_CASE("parsing the basic named set block") {
  Workspace ws = parse_ok("namedset X { support: a b; names: n; rel: a->n b->n; }");
  REQUIRE(ws.named_sets.count(a("X")));
  const NamedSet& x = ws.named_sets.at(a("X"));
  CHECK(x.support == AtomSet{a("a"), a("b")});
  CHECK(x.reflector == AtomSet{a("n")});
  CHECK(x.relation == PairSet{{a("a"), a("n")}, {a("b"), a("n")}});
  CHECK(classify(x).singlenamed);
}

TEST_CASE("an empty file is an empty workspace") {
  Workspace ws = parse_ok("");
  CHECK(ws == Workspace{});
  CHECK(serialize_workspace(ws).empty());
}

TEST_CASE("dangling pairs are located invariant violations") {
  ParseResult result = parse_workspace("namedset X {\n  support: a b;\n  names: n;\n  rel: c->n;\n}");
  const Diagnostic& d = first_error(result);
  CHECK(d.category == Diagnostic::Category::Invariant);
  CHECK(d.line == 4);
  CHECK(d.message.find("c") != std::string::npos);
}

TEST_CASE("syntax errors carry positions and stop the parse") {
  ParseResult result = parse_workspace("namedset X { support a; }");
  const Diagnostic& d = first_error(result);
  CHECK(d.category == Diagnostic::Category::Syntax);
  CHECK(d.line == 1);

  CHECK_FALSE(parse_workspace("namedset X { support: a;").ok());
  CHECK_FALSE(parse_workspace("widget X { }").ok());
  CHECK_FALSE(parse_workspace("namedset X { support: \"a\\q\"; }").ok());
  CHECK_FALSE(parse_workspace("namedset X { support: \"\"; }").ok());
  CHECK_FALSE(parse_workspace("namedset X { support: a; support: b; }").ok());
}

TEST_CASE("unknown references and duplicate ids") {
  ParseResult missing = parse_workspace(
      "morphism F { source: X; target: Y; f: ; g: ; }");
  CHECK(first_error(missing).category == Diagnostic::Category::Reference);

  ParseResult dup = parse_workspace("set S { elements: a; }\nset S { elements: b; }");
  CHECK(first_error(dup).category == Diagnostic::Category::Invariant);
  CHECK(first_error(dup).message.find("duplicate") != std::string::npos);
}

TEST_CASE("all-or-nothing loading") {
  ParseResult result = parse_workspace(
      "set GOOD { elements: a b; }\n"
      "namedset X { support: a; names: n; rel: b->n; }");
  CHECK_FALSE(result.ok());
  CHECK_FALSE(result.workspace.has_value());
}

TEST_CASE("every block kind parses and resolves") {
  const std::string text = R"(
# a workspace exercising each kind
set S { elements: a b c; }
multiset M { items: a:2 b:3; }
namedset X { support: a b; names: n; rel: a->n b->n; }
namedset Y { support: u; names: m; rel: u->m; }
morphism F { source: X; target: Y; f: a->u b->u; g: n->m; }
lattice D { carrier: 0 x y 1; order: 0<=x 0<=y x<=1 y<=1; }
fuzzyset FZ { universe: a b; scale: unit; degrees: a:1/2 b:1; }
fuzzyset FL { universe: a; scale: lattice:D; degrees: a:x; }
property P { universe: W; scale: N; values: S:3; }
calculus C { axioms: "p"; rules: "p" => "q", "q" "p" => "r"; }
automaton A { inputs: 0 1; states: q0 q1; outputs: z o; start: q0; finals: q0;
  delta: (0,q0)->(q0,z) (1,q0)->(q1,o) (0,q1)->(q1,z) (1,q1)->(q0,o); }
grammar G { variables: S; terminals: a b; start: S; productions: S -> a S b, S -> ; }
tm U { alphabet: 1 _; blank: _; states: q0 qh; start: q0; finals: qh;
  rules: q0 1 -> R q0, q0 _ -> 1 qh; }
)";
  Workspace ws = parse_ok(text);
  CHECK(ws.sets.size() == 1);
  CHECK(ws.multisets.size() == 1);
  CHECK(ws.named_sets.size() == 2);
  CHECK(ws.morphisms.size() == 1);
  CHECK(ws.lattices.size() == 1);
  CHECK(ws.fuzzy_sets.size() == 2);
  CHECK(ws.properties.size() == 1);
  CHECK(ws.calculi.size() == 1);
  CHECK(ws.automata.size() == 1);
  CHECK(ws.grammars.size() == 1);
  CHECK(ws.turing_machines.size() == 1);

  CHECK(check_morphism(ws.morphisms.at(a("F"))).commutes);
  CHECK(ws.calculi.at(a("C")).rules.size() == 2);
  CHECK(ws.grammars.at(a("G")).productions.size() == 2);
  CHECK(ws.turing_machines.at(a("U")).rules.size() == 2);
  CHECK(validate_lattice(ws.lattices.at(a("D"))).valid);
}

TEST_CASE("morphism map defects are invariant violations") {
  const std::string prefix =
      "namedset X { support: a b; names: n; rel: a->n; }\n"
      "namedset Y { support: u; names: m; rel: u->m; }\n";
  CHECK_FALSE(parse_workspace(prefix + "morphism F { source: X; target: Y; f: a->u; g: n->m; }")
                  .ok());  // f misses b
  CHECK_FALSE(
      parse_workspace(prefix + "morphism F { source: X; target: Y; f: a->u b->u c->u; g: n->m; }")
          .ok());  // f defined outside the support
  CHECK_FALSE(
      parse_workspace(prefix + "morphism F { source: X; target: Y; f: a->u b->w; g: n->m; }")
          .ok());  // w is not in the target support
  // Non-commuting morphisms still load; only the maps are checked here.
  const std::string prefix2 =
      "namedset X { support: a; names: n; rel: a->n; }\n"
      "namedset Y { support: u; names: m w; rel: u->m; }\n";
  Workspace ws = parse_ok(prefix2 + "morphism F { source: X; target: Y; f: a->u; g: n->w; }");
  CHECK_FALSE(check_morphism(ws.morphisms.at(a("F"))).commutes);
}

TEST_CASE("fuzzy blocks validate scale membership and totality") {
  CHECK_FALSE(parse_workspace("fuzzyset F { universe: a; scale: unit; degrees: a:3/2; }").ok());
  CHECK_FALSE(parse_workspace("fuzzyset F { universe: a b; scale: unit; degrees: a:1/2; }").ok());
  CHECK_FALSE(parse_workspace("fuzzyset F { universe: a; scale: lattice:L; degrees: a:x; }").ok());
  CHECK_FALSE(parse_workspace("lattice L { carrier: x y; order: ; }\n"
                              "fuzzyset F { universe: a; scale: lattice:L; degrees: a:x; }")
                  .ok());  // L is not a lattice
  Workspace ws = parse_ok("fuzzyset F { universe: a; scale: sym; degrees: a:-1/2; }");
  CHECK(ws.fuzzy_sets.at(a("F")).membership.at(a("a")) == Degree(Rational(-1, 2)));
}

TEST_CASE("multiset blocks reject zero and conflicting multiplicities") {
  CHECK_FALSE(parse_workspace("multiset M { items: a:0; }").ok());
  CHECK_FALSE(parse_workspace("multiset M { items: a:2 a:3; }").ok());
  CHECK(parse_ok("multiset M { items: a:2 a:2; }").multisets.at(a("M")).multiplicity.at(a("a")) ==
        2);
}

TEST_CASE("quoted atoms round-trip through escapes") {
  Workspace ws = parse_ok(R"(set S { elements: "a b" "say \"hi\"" "back\\slash"; })");
  const AtomSet& elements = ws.sets.at(a("S")).elements;
  CHECK(elements.count(a("a b")));
  CHECK(elements.count(a("say \"hi\"")));
  CHECK(elements.count(a("back\\slash")));

  const std::string canonical = serialize_workspace(ws);
  Workspace again = parse_ok(canonical);
  CHECK(again == ws);
}

TEST_CASE("serialization is canonical") {
  SUBCASE("parse-serialize-parse is a fixpoint") {
    const std::string text =
        "tm U { alphabet: 1 _; blank: _; states: q0 qh; start: q0; finals: qh;\n"
        "  rules: q0 1 -> R q0, q0 _ -> 1 qh; }\n"
        "namedset X { support: a b; names: n; rel: a->n b->n; }";
    Workspace first = parse_ok(text);
    const std::string canonical = serialize_workspace(first);
    Workspace second = parse_ok(canonical);
    CHECK(second == first);
    CHECK(serialize_workspace(second) == canonical);
  }
  SUBCASE("structurally equal inputs canonicalize identically") {
    // Same content, different order, spacing, comments, and quoting.
    Workspace one = parse_ok("namedset X { support: b a; names: n; rel: b->n a->n; }\n"
                             "set S { elements: q p; }");
    Workspace two = parse_ok("set \"S\" { elements: p q; }   # comment\n"
                             "namedset \"X\" { rel: a->n, b->n; names: n; support: a b; }");
    CHECK(one == two);
    CHECK(serialize_workspace(one) == serialize_workspace(two));
  }
  SUBCASE("a machine that writes the letter R survives the round trip") {
    Workspace ws = parse_ok(
        "tm W { alphabet: R _; blank: _; states: q0 qh; start: q0; finals: qh;\n"
        "  rules: q0 _ -> \"R\" qh, q0 R -> R q0; }");
    const TuringMachine& machine = ws.turing_machines.at(a("W"));
    REQUIRE(machine.rules.size() == 2);
    bool saw_write = false, saw_move = false;
    for (const TmRule& rule : machine.rules) {
      if (rule.action == TmAction::Write) {
        saw_write = true;
        CHECK(*rule.write == a("R"));
      }
      if (rule.action == TmAction::MoveRight) saw_move = true;
    }
    CHECK(saw_write);
    CHECK(saw_move);
    CHECK(parse_ok(serialize_workspace(ws)) == ws);
  }
  SUBCASE("lattice order serializes without reflexive pairs but reparses closed") {
    Workspace ws = parse_ok("lattice C { carrier: 0 1; order: 0<=1; }");
    const std::string canonical = serialize_workspace(ws);
    CHECK(canonical.find("0<=0") == std::string::npos);
    CHECK(parse_ok(canonical).lattices.at(a("C")).order ==
          PairSet{{a("0"), a("0")}, {a("0"), a("1")}, {a("1"), a("1")}});
  }
}

TEST_CASE("triad trees render as indented three-branch outlines") {
  Workspace ws = parse_ok(
      "tm U { alphabet: 1 _; blank: _; states: q0 qh; start: q0; finals: qh;\n"
      "  rules: q0 1 -> R q0, q0 _ -> 1 qh; }");
  const std::string rendered = render_triad_tree(decompose(ws.turing_machines.at(a("U"))));
  CHECK(rendered.find("U\n") == 0);
  CHECK(rendered.find("  L: L\n") != std::string::npos);
  CHECK(rendered.find("    L_W: {1 _}") != std::string::npos);
  CHECK(rendered.find("  D: D\n") != std::string::npos);
  CHECK(rendered.find("    H: <head>") != std::string::npos);
  CHECK(rendered.find("    P: namedset support={\"q0 1\" \"q0 _\"}") != std::string::npos);
  CHECK(rendered.find("  Q: Q\n") != std::string::npos);
  CHECK(rendered.find("    F: {qh}") != std::string::npos);
}
