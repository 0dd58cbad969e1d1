#include "singlets/bigint.hpp"

#include <cctype>
#include <string>

#include "singlets/errors.hpp"

namespace singlets {

std::string to_decimal(const BigInt& value) { return value.get_str(10); }

BigInt parse_decimal(std::string_view text) {
  std::size_t start = 0;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) start = 1;
  if (start == text.size()) {
    throw FormatError("empty decimal integer: '" + std::string(text) + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw FormatError("invalid decimal integer: '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text.front() == '+' ? 1 : 0));
  return BigInt(digits, 10);
}

std::string to_string(const Rational& value) { return value.get_str(10); }

}  // namespace singlets
