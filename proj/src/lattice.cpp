#include "triad/lattice.hpp"

#include <algorithm>
#include <vector>

namespace triad {

FiniteLattice make_lattice(Atom id, AtomSet carrier, PairSet generators) {
  for (const auto& [lo, hi] : generators) {
    if (!carrier.count(lo)) {
      throw Error(ErrorKind::UnknownElement, "order pair references " + lo.text());
    }
    if (!carrier.count(hi)) {
      throw Error(ErrorKind::UnknownElement, "order pair references " + hi.text());
    }
  }

  // Reflexive-transitive closure over the (small) carrier.
  const std::vector<Atom> atoms(carrier.begin(), carrier.end());
  const std::size_t n = atoms.size();
  auto index = [&](const Atom& a) {
    return static_cast<std::size_t>(std::lower_bound(atoms.begin(), atoms.end(), a) -
                                    atoms.begin());
  };
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [lo, hi] : generators) leq[index(lo)][index(hi)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k][j]) leq[i][j] = true;
      }
    }
  }

  PairSet order;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (leq[i][j]) order.insert({atoms[i], atoms[j]});
    }
  }
  return FiniteLattice{std::move(id), std::move(carrier), std::move(order)};
}

namespace {

// Least upper bound by brute force: an upper bound below every upper bound.
std::optional<Atom> least_upper_bound(const FiniteLattice& l, const Atom& a, const Atom& b) {
  std::vector<Atom> uppers;
  for (const Atom& c : l.carrier) {
    if (l.leq(a, c) && l.leq(b, c)) uppers.push_back(c);
  }
  for (const Atom& u : uppers) {
    bool least = true;
    for (const Atom& v : uppers) {
      if (!l.leq(u, v)) {
        least = false;
        break;
      }
    }
    if (least) return u;
  }
  return std::nullopt;
}

std::optional<Atom> greatest_lower_bound(const FiniteLattice& l, const Atom& a, const Atom& b) {
  std::vector<Atom> lowers;
  for (const Atom& c : l.carrier) {
    if (l.leq(c, a) && l.leq(c, b)) lowers.push_back(c);
  }
  for (const Atom& u : lowers) {
    bool greatest = true;
    for (const Atom& v : lowers) {
      if (!l.leq(v, u)) {
        greatest = false;
        break;
      }
    }
    if (greatest) return u;
  }
  return std::nullopt;
}

}  // namespace

LatticeReport validate_lattice(const FiniteLattice& lattice) {
  LatticeReport report;
  if (lattice.carrier.empty()) {
    report.reason = "empty carrier has no top or bottom";
    return report;
  }
  for (const Atom& a : lattice.carrier) {
    for (const Atom& b : lattice.carrier) {
      if (a < b && lattice.leq(a, b) && lattice.leq(b, a)) {
        report.reason = "order is not antisymmetric";
        report.offending = AtomPair{a, b};
        return report;
      }
    }
  }
  for (const Atom& a : lattice.carrier) {
    for (const Atom& b : lattice.carrier) {
      if (b < a) continue;
      if (!least_upper_bound(lattice, a, b)) {
        report.reason = "pair has no least upper bound";
        report.offending = AtomPair{a, b};
        return report;
      }
      if (!greatest_lower_bound(lattice, a, b)) {
        report.reason = "pair has no greatest lower bound";
        report.offending = AtomPair{a, b};
        return report;
      }
    }
  }
  // Pairwise joins/meets plus finiteness give top and bottom; check anyway
  // so the report stands on its own.
  bool has_top = false;
  bool has_bottom = false;
  for (const Atom& c : lattice.carrier) {
    bool top = true;
    bool bottom = true;
    for (const Atom& other : lattice.carrier) {
      if (!lattice.leq(other, c)) top = false;
      if (!lattice.leq(c, other)) bottom = false;
    }
    has_top = has_top || top;
    has_bottom = has_bottom || bottom;
  }
  if (!has_top || !has_bottom) {
    report.reason = has_top ? "no bottom element" : "no top element";
    return report;
  }
  report.valid = true;
  return report;
}

JoinMeet lattice_join_meet(const FiniteLattice& lattice, const Atom& a, const Atom& b) {
  if (!lattice.carrier.count(a)) {
    throw Error(ErrorKind::UnknownElement, a.text() + " is not in the carrier");
  }
  if (!lattice.carrier.count(b)) {
    throw Error(ErrorKind::UnknownElement, b.text() + " is not in the carrier");
  }
  // Validity of the whole lattice is the caller's precondition
  // (validate_lattice); only the queried pair is checked here.
  const auto join = least_upper_bound(lattice, a, b);
  if (!join) {
    throw Error(ErrorKind::InvalidLattice,
                "(" + a.text() + ", " + b.text() + ") has no least upper bound");
  }
  const auto meet = greatest_lower_bound(lattice, a, b);
  if (!meet) {
    throw Error(ErrorKind::InvalidLattice,
                "(" + a.text() + ", " + b.text() + ") has no greatest lower bound");
  }
  return JoinMeet{*join, *meet};
}

}  // namespace triad
