#include "triad/named_set.hpp"

#include <map>

namespace triad {

NamedSet make_named_set(Atom id, AtomSet support, AtomSet reflector, PairSet relation) {
  for (const auto& [element, name] : relation) {
    if (!support.count(element)) {
      throw Error(ErrorKind::DanglingPair,
                  "relation pair references element outside the support: " + element.text());
    }
    if (!reflector.count(name)) {
      throw Error(ErrorKind::DanglingPair,
                  "relation pair references name outside the reflector: " + name.text());
    }
  }
  return NamedSet{std::move(id), std::move(support), std::move(reflector), std::move(relation)};
}

AtomSet factual_names(const NamedSet& x) {
  AtomSet names;
  for (const auto& [element, name] : x.relation) {
    names.insert(name);
  }
  return names;
}

AtomSet names_of(const NamedSet& x, const Atom& element) {
  if (!x.support.count(element)) {
    throw Error(ErrorKind::UnknownElement, "not in the support: " + element.text());
  }
  AtomSet names;
  for (const auto& [e, name] : x.relation) {
    if (e == element) names.insert(name);
  }
  return names;
}

Classification classify(const NamedSet& x) {
  std::map<Atom, std::size_t> name_counts;   // per support element
  std::map<Atom, std::size_t> element_counts;  // per name
  for (const Atom& e : x.support) name_counts.emplace(e, 0);
  for (const auto& [element, name] : x.relation) {
    ++name_counts.at(element);
    ++element_counts[name];
  }

  Classification c;
  c.functional = true;
  c.total = true;
  for (const auto& [element, count] : name_counts) {
    if (count > 1) c.functional = false;
    if (count == 0) c.total = false;
  }

  const AtomSet factual = factual_names(x);
  c.normalized = factual == x.reflector;
  c.singlenamed = factual.size() == 1;

  // Bijective function from the support onto the full reflector.
  bool injective = true;
  for (const auto& [name, count] : element_counts) {
    if (count > 1) injective = false;
  }
  c.individually_named = c.functional && c.total && injective && c.normalized;
  return c;
}

bool is_named_subset(const NamedSet& inner, const NamedSet& outer, bool weak) {
  for (const Atom& e : inner.support) {
    if (!outer.support.count(e)) return false;
  }
  for (const Atom& n : inner.reflector) {
    if (!outer.reflector.count(n)) return false;
  }
  PairSet restricted;
  for (const auto& pair : outer.relation) {
    if (inner.support.count(pair.first) && inner.reflector.count(pair.second)) {
      restricted.insert(pair);
    }
  }
  if (weak) {
    for (const auto& pair : inner.relation) {
      if (!restricted.count(pair)) return false;
    }
    return true;
  }
  return inner.relation == restricted;
}

}  // namespace triad
