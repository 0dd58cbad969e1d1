#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/int_polynomial.hpp"

namespace singlets {

/// Power series c_0 + c_1 x + ... + c_T x^T + O(x^{T+1}) over exact rationals.
///
/// `order()` is T: every stored coefficient is exact, nothing past it is known.
/// Operations return the largest order their inputs determine.
class TruncatedSeries {
 public:
  /// Throws SeriesError if `coefficients` is empty.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries zero(int order);
  static TruncatedSeries one(int order);
  static TruncatedSeries from_integers(std::span<const BigInt> coefficients);
  static TruncatedSeries from_polynomial(const IntPolynomial& p, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// Index of the lowest nonzero coefficient, if any.
  std::optional<int> valuation() const;

  /// Drops coefficients past `order`. Throws SeriesError if order exceeds order().
  TruncatedSeries truncated(int order) const;

  /// Formal derivative; the order drops by one. Throws SeriesError at order 0.
  TruncatedSeries derivative() const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Square root with constant term 1, by Newton iteration t <- (t + s/t) / 2 with
/// doubling precision. Throws SeriesError unless s[0] == 1.
TruncatedSeries series_sqrt(const TruncatedSeries& s);

/// num / den where den has valuation v <= valuation(num); the order of the
/// result is min(orders) - v. Throws SeriesError for a zero or non-dividing den.
TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den);

}  // namespace singlets
