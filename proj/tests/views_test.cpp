#include <doctest.h>

#include <random>
#include <vector>

#include "generators.hpp"
#include "triad/views.hpp"

using namespace triad;

namespace {

Atom a(const std::string& text) { return Atom(text); }

// Independent lattice oracle: closure by iterating the boolean relation
// matrix, least bounds by scanning candidate sets. Deliberately a different
// code path from the library.
struct OrderOracle {
  std::vector<Atom> atoms;
  std::vector<std::vector<bool>> leq;

  explicit OrderOracle(const AtomSet& carrier, const PairSet& generators)
      : atoms(carrier.begin(), carrier.end()),
        leq(atoms.size(), std::vector<bool>(atoms.size(), false)) {
    for (std::size_t i = 0; i < atoms.size(); ++i) leq[i][i] = true;
    for (const auto& [lo, hi] : generators) leq[at(lo)][at(hi)] = true;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        for (std::size_t j = 0; j < atoms.size(); ++j) {
          if (leq[i][j]) continue;
          for (std::size_t k = 0; k < atoms.size(); ++k) {
            if (leq[i][k] && leq[k][j]) {
              leq[i][j] = true;
              changed = true;
              break;
            }
          }
        }
      }
    }
  }

  std::size_t at(const Atom& x) const {
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      if (atoms[i] == x) return i;
    }
    REQUIRE(false);
    return 0;
  }

  std::optional<std::size_t> lub(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> uppers;
    for (std::size_t c = 0; c < atoms.size(); ++c) {
      if (leq[x][c] && leq[y][c]) uppers.push_back(c);
    }
    for (std::size_t u : uppers) {
      bool below_all = true;
      for (std::size_t v : uppers) below_all = below_all && leq[u][v];
      if (below_all) return u;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> glb(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> lowers;
    for (std::size_t c = 0; c < atoms.size(); ++c) {
      if (leq[c][x] && leq[c][y]) lowers.push_back(c);
    }
    for (std::size_t u : lowers) {
      bool above_all = true;
      for (std::size_t v : lowers) above_all = above_all && leq[v][u];
      if (above_all) return u;
    }
    return std::nullopt;
  }

  bool is_lattice() const {
    if (atoms.empty()) return false;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (i != j && leq[i][j] && leq[j][i]) return false;  // antisymmetry
      }
    }
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (!lub(i, j) || !glb(i, j)) return false;
      }
    }
    return true;
  }
};

FiniteLattice diamond() {
  return make_lattice(a("D"), {a("0"), a("x"), a("y"), a("1")},
                      {{a("0"), a("x")}, {a("0"), a("y")}, {a("x"), a("1")}, {a("y"), a("1")}});
}

// Independent base conversion for the numeral oracle: recursive, unlike the
// library's loop.
std::string to_base(std::uint64_t n, const std::string& digits) {
  if (n < digits.size()) return std::string(1, digits[n]);
  return to_base(n / digits.size(), digits) + digits[n % digits.size()];
}

}  // namespace

TEST_CASE("rationals are canonical and ordered exactly") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0, 1));
  CHECK(Rational::parse("7/3").value() == Rational(7, 3));
  CHECK(Rational::parse("-1").value() == Rational(-1, 1));
  CHECK_FALSE(Rational::parse("x7").has_value());
  CHECK_FALSE(Rational::parse("1/").has_value());
  CHECK_FALSE(Rational::parse("1/0").has_value());
  CHECK_FALSE(Rational::parse("").has_value());

  // Canonical text round-trips.
  std::mt19937 rng(11000);
  for (int i = 0; i < 500; ++i) {
    const auto num = std::uniform_int_distribution<std::int64_t>(-40, 40)(rng);
    const auto den = std::uniform_int_distribution<std::int64_t>(1, 40)(rng);
    const Rational r(num, den);
    CHECK(Rational::parse(r.str()).value() == r);
  }
}

TEST_CASE("degree canonicalization is injective on rationals") {
  std::vector<Rational> degrees;
  for (int num = -8; num <= 8; ++num) {
    for (int den = 1; den <= 8; ++den) degrees.emplace_back(num, den);
  }
  for (const Rational& r1 : degrees) {
    for (const Rational& r2 : degrees) {
      if (!(r1 == r2)) CHECK(Degree(r1).atom() != Degree(r2).atom());
    }
  }
}

TEST_CASE("embed_set produces the singlenamed rendering") {
  NamedSet x = embed_set(PlainSet{a("S"), {a("a"), a("b")}}, a("e"));
  CHECK(x.support == AtomSet{a("a"), a("b")});
  CHECK(x.reflector == AtomSet{a("e")});
  CHECK(x.relation == PairSet{{a("a"), a("e")}, {a("b"), a("e")}});
  Classification c = classify(x);
  CHECK(c.singlenamed);
  CHECK(c.normalized);
  CHECK(c.functional);
  CHECK(c.total);

  SUBCASE("empty set embeds with a void name") {
    NamedSet e = embed_set(PlainSet{a("S"), {}}, a("e"));
    CHECK(e.reflector == AtomSet{a("e")});
    CHECK(e.relation.empty());
    CHECK_FALSE(classify(e).singlenamed);
  }
  SUBCASE("singleton embedding is individually named") {
    CHECK(classify(embed_set(PlainSet{a("S"), {a("a")}}, a("e"))).individually_named);
  }
}

TEST_CASE("project_set inverts embed_set on nonempty sets") {
  PlainSet s{a("S"), {a("a"), a("b")}};
  CHECK(project_set(embed_set(s, a("e"))) == s);
  CHECK(project_set(embed_set(PlainSet{a("S"), {a("a")}}, a("e"))).elements == AtomSet{a("a")});

  NamedSet two_names = make_named_set(a("X"), {a("u"), a("v")}, {a("p"), a("q")},
                                      {{a("u"), a("p")}, {a("v"), a("q")}});
  CHECK_THROWS_AS(project_set(two_names), Error);
}

TEST_CASE("is_function requires exactly one name per element") {
  CHECK(is_function(make_named_set(a("X"), {a("a"), a("b")}, {a("1"), a("2")},
                                   {{a("a"), a("1")}, {a("b"), a("2")}})));
  CHECK_FALSE(is_function(make_named_set(a("X"), {a("a")}, {a("1"), a("2")},
                                         {{a("a"), a("1")}, {a("a"), a("2")}})));
  CHECK_FALSE(is_function(make_named_set(a("X"), {a("a"), a("b")}, {a("1")}, {{a("a"), a("1")}})));
}

TEST_CASE("multiset to named set and back") {
  MultisetM m = make_multiset(a("M"), {{a("a"), 2}, {a("b"), 3}});

  SUBCASE("decimal relation") {
    NamedSet x = multiset_as_named_set(m, NumeralScale::decimal());
    CHECK(x.relation == PairSet{{a("a"), a("2")}, {a("b"), a("3")}});
    CHECK(is_function(x));
  }
  SUBCASE("binary relation against the base-conversion oracle") {
    NamedSet x = multiset_as_named_set(m, NumeralScale::binary());
    CHECK(to_base(2, "01") == "10");
    CHECK(to_base(3, "01") == "11");
    CHECK(x.relation == PairSet{{a("a"), a("10")}, {a("b"), a("11")}});
  }
  SUBCASE("empty multiset gives the empty named set") {
    NamedSet x = multiset_as_named_set(MultisetM{a("M"), {}}, NumeralScale::decimal());
    CHECK(x.support.empty());
    CHECK(x.reflector.empty());
    CHECK(x.relation.empty());
  }
  SUBCASE("round trip is the identity") {
    CHECK(named_set_as_multiset(multiset_as_named_set(m, NumeralScale::decimal()),
                                NumeralScale::decimal()) == m);
  }
  SUBCASE("non-numeral names are rejected") {
    NamedSet x = make_named_set(a("X"), {a("a")}, {a("x7")}, {{a("a"), a("x7")}});
    CHECK_THROWS_AS(named_set_as_multiset(x, NumeralScale::decimal()), Error);
  }
  SUBCASE("multivalued relations are rejected") {
    NamedSet x = make_named_set(a("X"), {a("a")}, {a("1"), a("2")},
                                {{a("a"), a("1")}, {a("a"), a("2")}});
    CHECK_THROWS_AS(named_set_as_multiset(x, NumeralScale::decimal()), Error);
  }
  SUBCASE("zero entries are dropped, not errors") {
    NamedSet x = make_named_set(a("X"), {a("a"), a("b")}, {a("0"), a("2")},
                                {{a("a"), a("0")}, {a("b"), a("2")}});
    MultisetM converted = named_set_as_multiset(x, NumeralScale::decimal());
    CHECK(converted.multiplicity == std::map<Atom, std::uint64_t>{{a("b"), 2}});
  }
}

TEST_CASE("tokenize and multiplicity_from_tokens") {
  MultisetM m = make_multiset(a("M"), {{a("a"), 2}, {a("b"), 3}});
  NamedSet tokens = tokenize(m);
  CHECK(tokens.support == AtomSet{a("a#1"), a("a#2"), a("b#1"), a("b#2"), a("b#3")});
  CHECK(tokens.reflector == AtomSet{a("a"), a("b")});
  Classification c = classify(tokens);
  CHECK(c.functional);
  CHECK(c.total);
  CHECK(c.normalized);

  SUBCASE("single occurrence") {
    CHECK(tokenize(make_multiset(a("M"), {{a("a"), 1}})).support == AtomSet{a("a#1")});
  }
  SUBCASE("round trip against a counting oracle") {
    // Oracle: count relation pairs per name directly.
    std::map<Atom, std::uint64_t> counted;
    for (const auto& [token, element] : tokens.relation) ++counted[element];
    CHECK(counted == m.multiplicity);
    CHECK(multiplicity_from_tokens(tokens) == m);
  }
  SUBCASE("random multisets round-trip both ways") {
    std::mt19937 rng(11001);
    for (int i = 0; i < 200; ++i) {
      MultisetM random = testgen::random_multiset(rng, "M");
      CHECK(multiplicity_from_tokens(tokenize(random)) == random);
      CHECK(named_set_as_multiset(multiset_as_named_set(random, NumeralScale::binary()),
                                  NumeralScale::binary()) == random);
    }
  }
  SUBCASE("token separator clash") {
    CHECK_THROWS_AS(tokenize(make_multiset(a("M"), {{a("a#1"), 1}})), Error);
  }
  SUBCASE("any functional total named set counts as tokens") {
    NamedSet embedded = embed_set(PlainSet{a("S"), {a("x"), a("y")}}, a("e"));
    CHECK(multiplicity_from_tokens(embedded).multiplicity ==
          std::map<Atom, std::uint64_t>{{a("e"), 2}});
    CHECK(multiplicity_from_tokens(make_named_set(a("E"), {}, {}, {})).multiplicity.empty());
  }
}

TEST_CASE("lattice validation") {
  SUBCASE("chains are lattices") {
    FiniteLattice chain =
        make_lattice(a("C"), {a("0"), a("x"), a("1")}, {{a("0"), a("x")}, {a("x"), a("1")}});
    CHECK(validate_lattice(chain).valid);
    JoinMeet jm = lattice_join_meet(chain, a("0"), a("x"));
    CHECK(jm.join == a("x"));
    CHECK(jm.meet == a("0"));
  }
  SUBCASE("diamond: incomparable pair joins at top, checked by oracle") {
    FiniteLattice d = diamond();
    CHECK(validate_lattice(d).valid);
    OrderOracle oracle(d.carrier, d.order);
    CHECK(oracle.atoms[*oracle.lub(oracle.at(a("x")), oracle.at(a("y")))] == a("1"));
    JoinMeet jm = lattice_join_meet(d, a("x"), a("y"));
    CHECK(jm.join == a("1"));
    CHECK(jm.meet == a("0"));
  }
  SUBCASE("two maximal elements admit no join") {
    FiniteLattice bad =
        make_lattice(a("B"), {a("0"), a("x"), a("y")}, {{a("0"), a("x")}, {a("0"), a("y")}});
    LatticeReport report = validate_lattice(bad);
    CHECK_FALSE(report.valid);
    REQUIRE(report.offending.has_value());
    CHECK(*report.offending == AtomPair{a("x"), a("y")});
  }
  SUBCASE("cycles break antisymmetry") {
    FiniteLattice cyclic =
        make_lattice(a("B"), {a("x"), a("y")}, {{a("x"), a("y")}, {a("y"), a("x")}});
    CHECK_FALSE(validate_lattice(cyclic).valid);
  }
  SUBCASE("the empty carrier is not a lattice") {
    CHECK_FALSE(validate_lattice(make_lattice(a("B"), {}, {})).valid);
  }
  SUBCASE("unknown elements are rejected") {
    CHECK_THROWS_AS(lattice_join_meet(diamond(), a("x"), a("z")), Error);
    CHECK_THROWS_AS(make_lattice(a("B"), {a("x")}, {{a("x"), a("z")}}), Error);
  }
  SUBCASE("laws hold on a six-element carrier, against the oracle") {
    // Diamond over x,y with mid m, plus an incomparable w between 0 and 1.
    FiniteLattice six = make_lattice(a("SIX"), {a("0"), a("x"), a("y"), a("m"), a("w"), a("1")},
                                     {{a("0"), a("x")},
                                      {a("0"), a("y")},
                                      {a("x"), a("m")},
                                      {a("y"), a("m")},
                                      {a("m"), a("1")},
                                      {a("0"), a("w")},
                                      {a("w"), a("1")}});
    REQUIRE(validate_lattice(six).valid);
    OrderOracle oracle(six.carrier, six.order);
    REQUIRE(oracle.is_lattice());
    for (const Atom& x : six.carrier) {
      for (const Atom& y : six.carrier) {
        JoinMeet jm = lattice_join_meet(six, x, y);
        CHECK(jm.join == oracle.atoms[*oracle.lub(oracle.at(x), oracle.at(y))]);
        CHECK(jm.meet == oracle.atoms[*oracle.glb(oracle.at(x), oracle.at(y))]);
        CHECK(lattice_join_meet(six, x, jm.meet).join == x);
        CHECK(lattice_join_meet(six, x, jm.join).meet == x);
        for (const Atom& z : six.carrier) {
          CHECK(lattice_join_meet(six, jm.join, z).join ==
                lattice_join_meet(six, x, lattice_join_meet(six, y, z).join).join);
          CHECK(lattice_join_meet(six, jm.meet, z).meet ==
                lattice_join_meet(six, x, lattice_join_meet(six, y, z).meet).meet);
        }
      }
    }
    CHECK(lattice_join_meet(six, a("x"), a("w")).join == a("1"));
    CHECK(lattice_join_meet(six, a("x"), a("y")).join == a("m"));
  }
}

TEST_CASE("random lattice candidates agree with the oracle; laws hold on valid ones") {
  std::mt19937 rng(11002);
  int valid_count = 0;
  for (int i = 0; i < 200; ++i) {
    FiniteLattice candidate = testgen::random_lattice_candidate(rng, "L");
    OrderOracle oracle(candidate.carrier, candidate.order);
    const bool expected = oracle.is_lattice();
    CHECK(validate_lattice(candidate).valid == expected);
    if (!expected) continue;
    ++valid_count;
    // Exhaustive law checks against the oracle's bounds.
    for (const Atom& x : candidate.carrier) {
      for (const Atom& y : candidate.carrier) {
        JoinMeet jm = lattice_join_meet(candidate, x, y);
        CHECK(jm.join == oracle.atoms[*oracle.lub(oracle.at(x), oracle.at(y))]);
        CHECK(jm.meet == oracle.atoms[*oracle.glb(oracle.at(x), oracle.at(y))]);
        CHECK(jm.join == lattice_join_meet(candidate, y, x).join);  // commutative
        CHECK(jm.meet == lattice_join_meet(candidate, y, x).meet);
        CHECK(lattice_join_meet(candidate, x, x).join == x);  // idempotent
        // Absorption.
        CHECK(lattice_join_meet(candidate, x, jm.meet).join == x);
        CHECK(lattice_join_meet(candidate, x, jm.join).meet == x);
        for (const Atom& z : candidate.carrier) {  // associative
          CHECK(lattice_join_meet(candidate, jm.join, z).join ==
                lattice_join_meet(candidate, x, lattice_join_meet(candidate, y, z).join).join);
          CHECK(lattice_join_meet(candidate, jm.meet, z).meet ==
                lattice_join_meet(candidate, x, lattice_join_meet(candidate, y, z).meet).meet);
        }
      }
    }
  }
  CHECK(valid_count > 10);  // the generator must exercise the law checks
}

TEST_CASE("scales admit exactly their ranges") {
  CHECK(Scale::unit().admits(Degree(Rational(1, 2))));
  CHECK(Scale::unit().admits(Degree(Rational(0, 1))));
  CHECK(Scale::unit().admits(Degree(Rational(1, 1))));
  CHECK_FALSE(Scale::unit().admits(Degree(Rational(3, 2))));
  CHECK_FALSE(Scale::unit().admits(Degree(Rational(-1, 2))));
  CHECK(Scale::symmetric().admits(Degree(Rational(-1, 2))));
  CHECK_FALSE(Scale::symmetric().admits(Degree(Rational(-9, 8))));
  CHECK(Scale::real_line().admits(Degree(Rational(1000, 7))));
  Scale lat = Scale::lattice(diamond());
  CHECK(lat.admits(Degree(a("x"))));
  CHECK_FALSE(lat.admits(Degree(a("z"))));
  CHECK_FALSE(lat.admits(Degree(Rational(1, 2))));
  CHECK_THROWS_AS(Scale::lattice(make_lattice(a("B"), {a("u"), a("v")}, {})), Error);
}

TEST_CASE("fuzzy sets as named sets and back") {
  FuzzySet f = make_fuzzy_set(a("F"), {a("u"), a("v")}, Scale::unit(),
                              {{a("u"), Degree(Rational(1, 2))}, {a("v"), Degree(Rational(1, 1))}});

  SUBCASE("canonical degree atoms") {
    NamedSet x = fuzzy_as_named_set(f);
    CHECK(x.relation == PairSet{{a("u"), a("1/2")}, {a("v"), a("1")}});
    Classification c = classify(x);
    CHECK(c.functional);
    CHECK(c.total);
  }
  SUBCASE("lattice degrees transcribe directly") {
    FuzzySet g = make_fuzzy_set(a("G"), {a("u"), a("v")}, Scale::lattice(diamond()),
                                {{a("u"), Degree(a("x"))}, {a("v"), Degree(a("1"))}});
    CHECK(fuzzy_as_named_set(g).relation == PairSet{{a("u"), a("x")}, {a("v"), a("1")}});
  }
  SUBCASE("round trip is componentwise identity") {
    CHECK(named_set_as_fuzzy(fuzzy_as_named_set(f), f.scale) == f);
  }
  SUBCASE("degrees outside the scale are rejected") {
    NamedSet x = make_named_set(a("X"), {a("u")}, {a("3/2")}, {{a("u"), a("3/2")}});
    CHECK_THROWS_AS(named_set_as_fuzzy(x, Scale::unit()), Error);
    NamedSet y = make_named_set(a("Y"), {a("u")}, {a("-1/2")}, {{a("u"), a("-1/2")}});
    CHECK(named_set_as_fuzzy(y, Scale::symmetric())
              .membership.at(a("u")) == Degree(Rational(-1, 2)));
    CHECK_THROWS_AS(named_set_as_fuzzy(y, Scale::unit()), Error);
  }
  SUBCASE("construction validates totality and admission") {
    CHECK_THROWS_AS(make_fuzzy_set(a("F"), {a("u")}, Scale::unit(), {}), Error);
    CHECK_THROWS_AS(make_fuzzy_set(a("F"), {a("u")}, Scale::unit(),
                                   {{a("u"), Degree(Rational(3, 2))}}),
                    Error);
  }
}
