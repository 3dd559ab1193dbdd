#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace triad {

/// Exact rational in lowest terms with positive denominator. Membership
/// degrees are rationals so scale checks and equality stay decidable.
class Rational {
 public:
  Rational() = default;  // zero
  Rational(std::int64_t numerator, std::int64_t denominator);

  static Rational integer(std::int64_t n) { return Rational(n, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Canonical text: "n" when integral, otherwise "p/q" in lowest terms.
  std::string str() const;

  /// Accepts an optional leading '-', digits, and an optional "/digits" part.
  static std::optional<Rational> parse(std::string_view text);

  friend bool operator==(const Rational&, const Rational&) = default;
  std::strong_ordering operator<=>(const Rational& other) const;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace triad
