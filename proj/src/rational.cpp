#include "triad/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace triad {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
  if (den_ == 0) {
    throw std::invalid_argument("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const std::int64_t g = std::gcd(num_, den_);
  if (g != 0) {
    num_ /= g;
    den_ /= g;
  }
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  bool negative = false;
  std::size_t i = 0;
  if (text[0] == '-') {
    negative = true;
    i = 1;
  }
  auto digits = [&](std::int64_t& out) -> bool {
    if (i >= text.size() || text[i] < '0' || text[i] > '9') return false;
    out = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      if (out > (INT64_MAX - (text[i] - '0')) / 10) return false;  // overflow
      out = out * 10 + (text[i] - '0');
      ++i;
    }
    return true;
  };
  std::int64_t num = 0;
  if (!digits(num)) return std::nullopt;
  std::int64_t den = 1;
  if (i < text.size()) {
    if (text[i] != '/') return std::nullopt;
    ++i;
    if (!digits(den) || den == 0 || i != text.size()) return std::nullopt;
  }
  return Rational(negative ? -num : num, den);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
  // Cross products fit in 128 bits for any int64 operands.
  const __int128 left = static_cast<__int128>(num_) * other.den_;
  const __int128 right = static_cast<__int128>(other.num_) * den_;
  if (left < right) return std::strong_ordering::less;
  if (left > right) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace triad
