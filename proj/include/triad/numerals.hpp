#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "triad/atom.hpp"

namespace triad {

/// A positional digit alphabet. Canonical numerals have no leading zeros;
/// zero is the single first digit.
class NumeralScale {
 public:
  /// Digits are single characters, all distinct, at least two of them.
  explicit NumeralScale(std::string digits);

  static const NumeralScale& decimal();
  static const NumeralScale& binary();
  /// Digits 0-9 then a-z; base must be in [2, 36].
  static NumeralScale for_base(unsigned base);

  unsigned base() const { return static_cast<unsigned>(digits_.size()); }
  const std::string& digits() const { return digits_; }
  std::string name() const;  // "decimal", "binary", or "base-K"

  Atom render(std::uint64_t value) const;

  /// Value of a canonical numeral; nullopt for non-digits, empty input,
  /// or leading zeros.
  std::optional<std::uint64_t> parse(const std::string& numeral) const;

  bool is_canonical(const std::string& numeral) const { return parse(numeral).has_value(); }

  /// Successor by digit-level carry chain; never converts through an
  /// integer, so arbitrarily long numerals work. Throws BadNumeral.
  Atom successor(const Atom& numeral) const;

 private:
  std::string digits_;
};

}  // namespace triad
