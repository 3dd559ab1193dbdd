#include "triad/properties.hpp"

namespace triad {

Atom count_set(const PlainSet& s, const NumeralScale& scale) {
  return scale.render(s.elements.size());
}

Atom count_multiset(const MultisetM& m, const NumeralScale& scale) {
  std::uint64_t total = 0;
  for (const auto& [element, count] : m.multiplicity) {
    total += count;
  }
  return scale.render(total);
}

Atom successor_numeral(const Atom& n, const NumeralScale& scale) {
  return scale.successor(n);
}

std::optional<Atom> apply_property(const Property& p, const Atom& u) {
  const auto it = p.valuation.find(u);
  if (it == p.valuation.end()) return std::nullopt;
  return it->second;
}

Property natural_number_property(const std::vector<PlainSet>& sets, const NumeralScale& scale) {
  std::map<Atom, Atom> valuation;
  for (const PlainSet& s : sets) {
    auto [it, inserted] = valuation.emplace(s.name, count_set(s, scale));
    if (!inserted) {
      throw Error(ErrorKind::DuplicateId, "two sets named " + s.name.text());
    }
  }
  return Property{Atom("N"), Atom("W"), std::move(valuation), Atom(scale.name())};
}

}  // namespace triad
