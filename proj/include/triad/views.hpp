#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <variant>

#include "triad/lattice.hpp"
#include "triad/named_set.hpp"
#include "triad/numerals.hpp"
#include "triad/rational.hpp"

namespace triad {

struct PlainSet {
  Atom name;
  AtomSet elements;

  friend bool operator==(const PlainSet& a, const PlainSet& b) {
    return a.elements == b.elements;
  }
};

/// Multiplicity form of a multiset: every listed element occurs at least once.
struct MultisetM {
  Atom name;
  std::map<Atom, std::uint64_t> multiplicity;

  friend bool operator==(const MultisetM& a, const MultisetM& b) {
    return a.multiplicity == b.multiplicity;
  }
};

/// Zero multiplicities are rejected: absence is non-membership.
MultisetM make_multiset(Atom name, std::map<Atom, std::uint64_t> multiplicity);

/// A membership degree: an exact rational or a lattice element.
class Degree {
 public:
  explicit Degree(Rational value) : value_(value) {}
  explicit Degree(Atom lattice_element) : value_(std::move(lattice_element)) {}

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  const Atom& lattice_element() const { return std::get<Atom>(value_); }

  /// Canonical atom: "p/q" in lowest terms (or "n" for integers), or the
  /// lattice element itself. Injective on each scale's admitted degrees.
  Atom atom() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend auto operator<=>(const Degree&, const Degree&) = default;

 private:
  std::variant<Rational, Atom> value_;
};

/// Degree codomain: the unit interval, the symmetric interval, the whole
/// rational line, or a validated finite lattice.
class Scale {
 public:
  enum class Kind { Unit, Symmetric, RealLine, Lattice };

  static Scale unit() { return Scale(Kind::Unit); }
  static Scale symmetric() { return Scale(Kind::Symmetric); }
  static Scale real_line() { return Scale(Kind::RealLine); }
  /// Throws InvalidLattice unless the lattice passes validate_lattice.
  static Scale lattice(FiniteLattice lattice);

  Kind kind() const { return kind_; }
  const FiniteLattice& lattice_ref() const;

  bool admits(const Degree& degree) const;

  /// Parses an atom as a degree of this scale; nullopt if it does not parse
  /// or is not admitted.
  std::optional<Degree> parse_degree(const Atom& name) const;

  friend bool operator==(const Scale& a, const Scale& b);

 private:
  explicit Scale(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::shared_ptr<const FiniteLattice> lattice_;
};

struct FuzzySet {
  Atom id;
  AtomSet universe;
  Scale scale;
  std::map<Atom, Degree> membership;  // total on the universe

  friend bool operator==(const FuzzySet& a, const FuzzySet& b) {
    return a.universe == b.universe && a.scale == b.scale && a.membership == b.membership;
  }
};

/// Validates totality on the universe and scale admission of every degree.
/// Throws DegreeOutOfScale / PartialMap.
FuzzySet make_fuzzy_set(Atom id, AtomSet universe, Scale scale, std::map<Atom, Degree> membership);

/// The singlenamed rendering of a plain set: every element gets the one
/// common name.
NamedSet embed_set(const PlainSet& s, const Atom& element_name);

/// Inverse of embed_set on nonempty sets: the support under the unique
/// factual name. Throws NotSinglenamed.
PlainSet project_set(const NamedSet& x);

/// True iff the naming relation is a function: single-valued and total.
bool is_function(const NamedSet& x);

/// Element -> numeral-of-multiplicity named set (functional and total).
NamedSet multiset_as_named_set(const MultisetM& m, const NumeralScale& scale);

/// Inverse of multiset_as_named_set. Names must parse as numerals; zero
/// entries are dropped. Throws NotFunctional / BadNumeral.
MultisetM named_set_as_multiset(const NamedSet& x, const NumeralScale& scale);

/// Token form: support e#1..e#k per element, each token named by its base
/// element. Throws TokenClash if an input atom contains '#'.
NamedSet tokenize(const MultisetM& m);

/// Counts support tokens per factual name. Throws NotFunctional.
MultisetM multiplicity_from_tokens(const NamedSet& t);

/// Universe -> canonical degree atoms; functional and total.
NamedSet fuzzy_as_named_set(const FuzzySet& f);

/// Inverse of fuzzy_as_named_set. Throws NotFunctional / DegreeOutOfScale.
FuzzySet named_set_as_fuzzy(const NamedSet& x, const Scale& scale);

}  // namespace triad
