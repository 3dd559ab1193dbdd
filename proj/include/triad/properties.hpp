#pragma once

#include <map>
#include <optional>
#include <vector>

#include "triad/numerals.hpp"
#include "triad/views.hpp"

namespace triad {

/// An abstract property (U, p, L): a partial valuation of a universe into a
/// scale of names. Universe and scale are referenced by label; the valuation
/// is the finite known part.
struct Property {
  Atom id;
  Atom universe_label;
  std::map<Atom, Atom> valuation;  // partial, single-valued
  Atom scale_label;

  friend bool operator==(const Property& a, const Property& b) {
    return a.universe_label == b.universe_label && a.valuation == b.valuation &&
           a.scale_label == b.scale_label;
  }
};

/// Canonical numeral of |S|.
Atom count_set(const PlainSet& s, const NumeralScale& scale);

/// Canonical numeral of the total token count (sum of multiplicities).
Atom count_multiset(const MultisetM& m, const NumeralScale& scale);

/// Canonical numeral of value(n) + 1. Throws BadNumeral on non-canonical input.
Atom successor_numeral(const Atom& n, const NumeralScale& scale);

/// The valuation at u, or nullopt: partiality is a value, not an error.
std::optional<Atom> apply_property(const Property& p, const Atom& u);

/// The cardinality property over a declared family of sets: each set's name
/// maps to the numeral of its size. Throws DuplicateId.
Property natural_number_property(const std::vector<PlainSet>& sets, const NumeralScale& scale);

}  // namespace triad
