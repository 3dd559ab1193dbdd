#include "triad/morphism.hpp"

#include <algorithm>

namespace triad {

namespace {

// Domain must be exactly `domain`, values must fall inside `codomain`.
void require_total_map(const std::map<Atom, Atom>& map, const AtomSet& domain,
                       const AtomSet& codomain, const char* which) {
  for (const Atom& d : domain) {
    if (!map.count(d)) {
      throw Error(ErrorKind::PartialMap,
                  std::string(which) + " is undefined on " + d.text());
    }
  }
  for (const auto& [from, to] : map) {
    if (!domain.count(from)) {
      throw Error(ErrorKind::PartialMap,
                  std::string(which) + " is defined outside its domain: " + from.text());
    }
    if (!codomain.count(to)) {
      throw Error(ErrorKind::PartialMap,
                  std::string(which) + " maps " + from.text() + " outside the target: " + to.text());
    }
  }
}

void require_valid_maps(const Morphism& m) {
  require_total_map(m.element_map, m.source.support, m.target.support, "f");
  require_total_map(m.name_map, m.source.reflector, m.target.reflector, "g");
}

}  // namespace

Morphism make_morphism(Atom id, NamedSet source, NamedSet target,
                       std::map<Atom, Atom> element_map, std::map<Atom, Atom> name_map) {
  Morphism m{std::move(id), std::move(source), std::move(target), std::move(element_map),
             std::move(name_map)};
  require_valid_maps(m);
  return m;
}

MorphismCheck check_morphism(const Morphism& m) {
  require_valid_maps(m);

  // fq = {(x, b) : (f(x), b) ∈ target.relation}
  PairSet through_target;
  for (const Atom& x : m.source.support) {
    const Atom& fx = m.element_map.at(x);
    for (const auto& [y, b] : m.target.relation) {
      if (y == fx) through_target.insert({x, b});
    }
  }
  // rg = {(x, g(a)) : (x, a) ∈ source.relation}
  PairSet through_source;
  for (const auto& [x, a] : m.source.relation) {
    through_source.insert({x, m.name_map.at(a)});
  }

  MorphismCheck result;
  result.commutes = through_target == through_source;
  if (!result.commutes) {
    for (const auto& pair : through_target) {
      if (!through_source.count(pair)) {
        result.witness = pair;
        break;
      }
    }
    if (!result.witness) {
      for (const auto& pair : through_source) {
        if (!through_target.count(pair)) {
          result.witness = pair;
          break;
        }
      }
    }
  }
  return result;
}

Morphism compose_morphisms(const Morphism& f, const Morphism& g) {
  require_valid_maps(f);
  require_valid_maps(g);
  if (!(f.target == g.source)) {
    throw Error(ErrorKind::NonComposable,
                f.id.text() + " ends at a different named set than " + g.id.text() + " starts");
  }
  std::map<Atom, Atom> element_map;
  for (const auto& [x, y] : f.element_map) {
    element_map.emplace(x, g.element_map.at(y));
  }
  std::map<Atom, Atom> name_map;
  for (const auto& [a, b] : f.name_map) {
    name_map.emplace(a, g.name_map.at(b));
  }
  return Morphism{Atom(f.id.text() + "." + g.id.text()), f.source, g.target,
                  std::move(element_map), std::move(name_map)};
}

Morphism identity_morphism(const NamedSet& x) {
  std::map<Atom, Atom> element_map;
  for (const Atom& e : x.support) element_map.emplace(e, e);
  std::map<Atom, Atom> name_map;
  for (const Atom& n : x.reflector) name_map.emplace(n, n);
  return Morphism{Atom("id." + x.id.text()), x, x, std::move(element_map), std::move(name_map)};
}

bool CategoryReport::all_pass() const {
  return std::all_of(morphisms.begin(), morphisms.end(),
                     [](const auto& s) { return s.commutes; }) &&
         std::all_of(pairs.begin(), pairs.end(),
                     [](const auto& s) { return s.composite_commutes; }) &&
         std::all_of(triples.begin(), triples.end(),
                     [](const auto& s) { return s.associative; }) &&
         std::all_of(identities.begin(), identities.end(),
                     [](const auto& s) { return s.left_identity && s.right_identity; });
}

CategoryReport verify_category(const std::vector<NamedSet>& objects,
                               const std::vector<Morphism>& morphisms) {
  auto declared = [&](const NamedSet& endpoint) {
    return std::any_of(objects.begin(), objects.end(),
                       [&](const NamedSet& o) { return o == endpoint; });
  };
  for (const Morphism& m : morphisms) {
    if (!declared(m.source)) {
      throw Error(ErrorKind::UnknownObject, "source of " + m.id.text() + " is not declared");
    }
    if (!declared(m.target)) {
      throw Error(ErrorKind::UnknownObject, "target of " + m.id.text() + " is not declared");
    }
  }

  CategoryReport report;
  for (const Morphism& m : morphisms) {
    MorphismCheck check = check_morphism(m);
    report.morphisms.push_back({m.id, check.commutes, check.witness});
  }

  for (const Morphism& f : morphisms) {
    for (const Morphism& g : morphisms) {
      if (!(f.target == g.source)) continue;
      Morphism composite = compose_morphisms(f, g);
      report.pairs.push_back({f.id, g.id, check_morphism(composite).commutes});
    }
  }

  for (const Morphism& f : morphisms) {
    for (const Morphism& g : morphisms) {
      if (!(f.target == g.source)) continue;
      for (const Morphism& h : morphisms) {
        if (!(g.target == h.source)) continue;
        Morphism left = compose_morphisms(compose_morphisms(f, g), h);
        Morphism right = compose_morphisms(f, compose_morphisms(g, h));
        report.triples.push_back({f.id, g.id, h.id, left == right});
      }
    }
  }

  for (const Morphism& f : morphisms) {
    Morphism left = compose_morphisms(identity_morphism(f.source), f);
    Morphism right = compose_morphisms(f, identity_morphism(f.target));
    report.identities.push_back({f.id, left == f, right == f});
  }
  return report;
}

}  // namespace triad
