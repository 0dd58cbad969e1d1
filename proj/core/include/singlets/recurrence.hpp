#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/int_polynomial.hpp"

namespace singlets {

/// Rational-function coefficient num(n) / den(n) of one lag.
struct RecurrenceTerm {
  IntPolynomial numerator;
  IntPolynomial denominator;
};

/// a(n+1) = sum_i terms[i].numerator(n) / terms[i].denominator(n) * a(n - i),
/// applied for every n >= n_min, with a(0..n_min) given by `seeds`.
struct RecurrenceSpec {
  std::string name;
  std::vector<RecurrenceTerm> terms;
  int n_min = 0;
  std::vector<BigInt> seeds;

  std::size_t order() const { return terms.size(); }

  /// Throws RecurrenceError if the spec is malformed: wrong seed count, a lag
  /// reaching below index 0 at n_min, or a denominator with an integer root >= n_min.
  void validate() const;
};

/// a(n+1) from the terms a(0..n) of `sequence` (only the last order() are used).
/// Throws RecurrenceError if a denominator vanishes at n.
Rational recurrence_step(const RecurrenceSpec& spec, std::span<const BigInt> sequence, int n);

/// First `count` terms. Throws RecurrenceError on a non-integral term.
std::vector<BigInt> evaluate_recurrence(const RecurrenceSpec& spec, std::size_t count);

struct RecurrenceReport {
  bool passed = false;
  /// Indices m = n + 1 that were checked, inclusive.
  std::size_t first_checked = 0;
  std::size_t last_checked = 0;
  std::optional<std::size_t> first_violation;
  std::string detail;
};

/// Checks a(n+1) against the recurrence for every n >= n_min with n + 1 < size.
RecurrenceReport verify_recurrence(std::span<const BigInt> sequence, const RecurrenceSpec& spec);

}  // namespace singlets
