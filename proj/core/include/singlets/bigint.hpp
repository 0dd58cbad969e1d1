#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace singlets {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_decimal(const BigInt& value);

/// Parses an optionally signed base-10 integer. Throws FormatError.
BigInt parse_decimal(std::string_view text);

std::string to_string(const Rational& value);

inline bool is_integral(const Rational& value) { return value.get_den() == 1; }

}  // namespace singlets
