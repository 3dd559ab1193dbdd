#pragma once

#include <optional>
#include <string>

#include "triad/atom.hpp"

namespace triad {

/// A finite carrier with the reflexive-transitive closure of declared order
/// pairs. The stored order need not satisfy the lattice axioms; use
/// validate_lattice to check them, so that failed candidates stay
/// representable and reportable.
struct FiniteLattice {
  Atom id;
  AtomSet carrier;
  PairSet order;  // closed under reflexivity and transitivity

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.carrier == b.carrier && a.order == b.order;
  }

  bool leq(const Atom& a, const Atom& b) const { return order.count({a, b}) > 0; }
};

/// Closes the generating pairs. Throws UnknownElement if a generator
/// references an atom outside the carrier.
FiniteLattice make_lattice(Atom id, AtomSet carrier, PairSet generators);

struct LatticeReport {
  bool valid = false;
  std::string reason;                // empty when valid
  std::optional<AtomPair> offending; // first failing pair, when one exists
};

/// Checks antisymmetry of the closed order, existence and uniqueness of
/// least upper and greatest lower bounds for every pair, and the presence
/// of top and bottom.
LatticeReport validate_lattice(const FiniteLattice& lattice);

struct JoinMeet {
  Atom join;
  Atom meet;
};

/// Requires a valid lattice (throws InvalidLattice otherwise) and carrier
/// membership of both arguments (throws UnknownElement).
JoinMeet lattice_join_meet(const FiniteLattice& lattice, const Atom& a, const Atom& b);

}  // namespace triad
