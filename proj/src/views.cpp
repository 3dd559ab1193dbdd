#include "triad/views.hpp"

namespace triad {

MultisetM make_multiset(Atom name, std::map<Atom, std::uint64_t> multiplicity) {
  for (const auto& [element, count] : multiplicity) {
    if (count == 0) {
      throw Error(ErrorKind::InvariantViolation, "zero multiplicity for " + element.text());
    }
  }
  return MultisetM{std::move(name), std::move(multiplicity)};
}

Atom Degree::atom() const {
  if (is_rational()) return Atom(rational().str());
  return lattice_element();
}

Scale Scale::lattice(FiniteLattice lattice) {
  LatticeReport report = validate_lattice(lattice);
  if (!report.valid) {
    throw Error(ErrorKind::InvalidLattice, lattice.id.text() + ": " + report.reason);
  }
  Scale scale(Kind::Lattice);
  scale.lattice_ = std::make_shared<const FiniteLattice>(std::move(lattice));
  return scale;
}

const FiniteLattice& Scale::lattice_ref() const {
  if (kind_ != Kind::Lattice) {
    throw Error(ErrorKind::InvalidLattice, "scale is not lattice-valued");
  }
  return *lattice_;
}

bool Scale::admits(const Degree& degree) const {
  switch (kind_) {
    case Kind::Unit:
      return degree.is_rational() && degree.rational() >= Rational::integer(0) &&
             degree.rational() <= Rational::integer(1);
    case Kind::Symmetric:
      return degree.is_rational() && degree.rational() >= Rational::integer(-1) &&
             degree.rational() <= Rational::integer(1);
    case Kind::RealLine:
      return degree.is_rational();
    case Kind::Lattice:
      return !degree.is_rational() && lattice_->carrier.count(degree.lattice_element()) > 0;
  }
  return false;
}

std::optional<Degree> Scale::parse_degree(const Atom& name) const {
  if (kind_ == Kind::Lattice) {
    if (lattice_->carrier.count(name)) return Degree(name);
    return std::nullopt;
  }
  const auto rational = Rational::parse(name.text());
  if (!rational) return std::nullopt;
  Degree degree{*rational};
  if (!admits(degree)) return std::nullopt;
  return degree;
}

bool operator==(const Scale& a, const Scale& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != Scale::Kind::Lattice) return true;
  return *a.lattice_ == *b.lattice_;
}

FuzzySet make_fuzzy_set(Atom id, AtomSet universe, Scale scale,
                        std::map<Atom, Degree> membership) {
  for (const Atom& u : universe) {
    if (!membership.count(u)) {
      throw Error(ErrorKind::PartialMap, "membership is undefined on " + u.text());
    }
  }
  for (const auto& [u, degree] : membership) {
    if (!universe.count(u)) {
      throw Error(ErrorKind::PartialMap, "membership defined outside the universe: " + u.text());
    }
    if (!scale.admits(degree)) {
      throw Error(ErrorKind::DegreeOutOfScale,
                  degree.atom().text() + " is not admitted for " + u.text());
    }
  }
  return FuzzySet{std::move(id), std::move(universe), std::move(scale), std::move(membership)};
}

NamedSet embed_set(const PlainSet& s, const Atom& element_name) {
  PairSet relation;
  for (const Atom& e : s.elements) {
    relation.insert({e, element_name});
  }
  return NamedSet{s.name, s.elements, AtomSet{element_name}, std::move(relation)};
}

PlainSet project_set(const NamedSet& x) {
  const AtomSet factual = factual_names(x);
  if (factual.size() != 1) {
    throw Error(ErrorKind::NotSinglenamed,
                x.id.text() + " has " + std::to_string(factual.size()) + " factual names");
  }
  return PlainSet{*factual.begin(), x.support};
}

bool is_function(const NamedSet& x) {
  const Classification c = classify(x);
  return c.functional && c.total;
}

NamedSet multiset_as_named_set(const MultisetM& m, const NumeralScale& scale) {
  AtomSet support;
  AtomSet reflector;
  PairSet relation;
  for (const auto& [element, count] : m.multiplicity) {
    const Atom numeral = scale.render(count);
    support.insert(element);
    reflector.insert(numeral);
    relation.insert({element, numeral});
  }
  return NamedSet{m.name, std::move(support), std::move(reflector), std::move(relation)};
}

MultisetM named_set_as_multiset(const NamedSet& x, const NumeralScale& scale) {
  if (!is_function(x)) {
    throw Error(ErrorKind::NotFunctional, x.id.text() + " is not a total single-valued naming");
  }
  std::map<Atom, std::uint64_t> multiplicity;
  for (const auto& [element, name] : x.relation) {
    const auto value = scale.parse(name.text());
    if (!value) {
      throw Error(ErrorKind::BadNumeral, name.text() + " is not a numeral of the scale");
    }
    if (*value == 0) continue;  // zero multiplicity means absence
    multiplicity.emplace(element, *value);
  }
  return MultisetM{x.id, std::move(multiplicity)};
}

namespace {
constexpr char kTokenSeparator = '#';
}

NamedSet tokenize(const MultisetM& m) {
  AtomSet support;
  AtomSet reflector;
  PairSet relation;
  for (const auto& [element, count] : m.multiplicity) {
    if (element.text().find(kTokenSeparator) != std::string::npos) {
      throw Error(ErrorKind::TokenClash, element.text() + " contains the token separator");
    }
    reflector.insert(element);
    for (std::uint64_t i = 1; i <= count; ++i) {
      Atom token(element.text() + kTokenSeparator + std::to_string(i));
      support.insert(token);
      relation.insert({std::move(token), element});
    }
  }
  return NamedSet{m.name, std::move(support), std::move(reflector), std::move(relation)};
}

MultisetM multiplicity_from_tokens(const NamedSet& t) {
  if (!is_function(t)) {
    throw Error(ErrorKind::NotFunctional, t.id.text() + " is not a total single-valued naming");
  }
  std::map<Atom, std::uint64_t> multiplicity;
  for (const auto& [token, element] : t.relation) {
    auto [it, inserted] = multiplicity.emplace(element, 1);
    if (!inserted) ++it->second;
  }
  return MultisetM{t.id, std::move(multiplicity)};
}

NamedSet fuzzy_as_named_set(const FuzzySet& f) {
  AtomSet reflector;
  PairSet relation;
  for (const auto& [element, degree] : f.membership) {
    const Atom name = degree.atom();
    reflector.insert(name);
    relation.insert({element, name});
  }
  return NamedSet{f.id, f.universe, std::move(reflector), std::move(relation)};
}

FuzzySet named_set_as_fuzzy(const NamedSet& x, const Scale& scale) {
  if (!is_function(x)) {
    throw Error(ErrorKind::NotFunctional, x.id.text() + " is not a total single-valued naming");
  }
  std::map<Atom, Degree> membership;
  for (const auto& [element, name] : x.relation) {
    const auto degree = scale.parse_degree(name);
    if (!degree) {
      throw Error(ErrorKind::DegreeOutOfScale,
                  name.text() + " is not a degree admitted by the scale");
    }
    membership.emplace(element, *degree);
  }
  return FuzzySet{x.id, x.support, scale, std::move(membership)};
}

}  // namespace triad
