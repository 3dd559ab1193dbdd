#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>

#include "triad/error.hpp"

namespace triad {

/// An opaque identifier: a nonempty string with no control characters.
/// Equality is exact textual equality; ordering is byte-wise.
class Atom {
 public:
  explicit Atom(std::string text);

  const std::string& text() const { return text_; }

  auto operator<=>(const Atom&) const = default;

 private:
  std::string text_;
};

using AtomSet = std::set<Atom>;
using AtomPair = std::pair<Atom, Atom>;
using PairSet = std::set<AtomPair>;

}  // namespace triad
