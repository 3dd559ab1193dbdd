#include "triad/numerals.hpp"

#include <algorithm>

namespace triad {

NumeralScale::NumeralScale(std::string digits) : digits_(std::move(digits)) {
  if (digits_.size() < 2) {
    throw Error(ErrorKind::BadNumeral, "a numeral scale needs at least two digits");
  }
  std::string sorted = digits_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::BadNumeral, "digit alphabet has repeated characters");
  }
}

const NumeralScale& NumeralScale::decimal() {
  static const NumeralScale scale("0123456789");
  return scale;
}

const NumeralScale& NumeralScale::binary() {
  static const NumeralScale scale("01");
  return scale;
}

NumeralScale NumeralScale::for_base(unsigned base) {
  if (base < 2 || base > 36) {
    throw Error(ErrorKind::BadNumeral, "base must be between 2 and 36");
  }
  static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
  return NumeralScale(std::string(alphabet, alphabet + base));
}

std::string NumeralScale::name() const {
  if (digits_ == "0123456789") return "decimal";
  if (digits_ == "01") return "binary";
  return "base-" + std::to_string(base());
}

Atom NumeralScale::render(std::uint64_t value) const {
  if (value == 0) return Atom(std::string(1, digits_[0]));
  std::string out;
  while (value > 0) {
    out.push_back(digits_[value % base()]);
    value /= base();
  }
  std::reverse(out.begin(), out.end());
  return Atom(out);
}

std::optional<std::uint64_t> NumeralScale::parse(const std::string& numeral) const {
  if (numeral.empty()) return std::nullopt;
  if (numeral.size() > 1 && numeral[0] == digits_[0]) return std::nullopt;  // leading zero
  std::uint64_t value = 0;
  for (char c : numeral) {
    const auto pos = digits_.find(c);
    if (pos == std::string::npos) return std::nullopt;
    if (value > (UINT64_MAX - pos) / base()) return std::nullopt;  // overflow
    value = value * base() + pos;
  }
  return value;
}

Atom NumeralScale::successor(const Atom& numeral) const {
  std::string text = numeral.text();
  if (text.empty() || (text.size() > 1 && text[0] == digits_[0])) {
    throw Error(ErrorKind::BadNumeral, "not a canonical numeral: " + numeral.text());
  }
  for (char c : text) {
    if (digits_.find(c) == std::string::npos) {
      throw Error(ErrorKind::BadNumeral, "not a numeral of this scale: " + numeral.text());
    }
  }
  // Carry chain from the least significant digit.
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    const auto pos = digits_.find(*it);
    if (pos + 1 < digits_.size()) {
      *it = digits_[pos + 1];
      return Atom(text);
    }
    *it = digits_[0];
  }
  return Atom(std::string(1, digits_[1]) + text);
}

}  // namespace triad
