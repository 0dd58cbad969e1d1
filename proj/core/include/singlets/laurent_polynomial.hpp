#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/weight_vector.hpp"

namespace singlets {

/// Per-variable inclusive exponent bounds. Products landing outside are dropped.
class ExponentWindow {
 public:
  /// Throws RankMismatchError on length mismatch and DomainError if lower > upper anywhere.
  ExponentWindow(WeightVector lower, WeightVector upper);

  const WeightVector& lower() const { return lower_; }
  const WeightVector& upper() const { return upper_; }
  std::size_t rank() const { return lower_.rank(); }

  bool contains(const WeightVector& e) const;

 private:
  WeightVector lower_;
  WeightVector upper_;
};

/// Sparse Laurent polynomial in `rank` variables with exact integer coefficients.
///
/// Terms are kept in a map ordered lexicographically by exponent, so iteration
/// (and anything serialized from it) is deterministic. Zero coefficients are
/// never stored.
class LaurentPolynomial {
 public:
  using Terms = std::map<WeightVector, BigInt>;

  explicit LaurentPolynomial(std::size_t rank = 0) : rank_(rank) {}

  static LaurentPolynomial constant(std::size_t rank, const BigInt& value);
  static LaurentPolynomial monomial(const WeightVector& exponent, const BigInt& coefficient = 1);

  std::size_t rank() const { return rank_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  /// Adds `coefficient * z^exponent`, dropping the term if it cancels.
  void add_term(const WeightVector& exponent, const BigInt& coefficient);

  BigInt coefficient(const WeightVector& exponent) const;

  /// Value with every variable set to 1 (the sum of coefficients).
  BigInt evaluate_at_ones() const;

  /// Component-wise minimum / maximum exponent over all terms. Requires a nonzero polynomial.
  WeightVector min_exponents() const;
  WeightVector max_exponents() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Human-readable form such as "1 - z1^2" or "2*z1*z2^-1".
  std::string to_string() const;

 private:
  std::size_t rank_;
  Terms terms_;
};

LaurentPolynomial add(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial operator+(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial operator-(const LaurentPolynomial& p, const LaurentPolynomial& q);
LaurentPolynomial operator-(const LaurentPolynomial& p);

/// Product of p and q. With a window, any product term whose exponent falls
/// outside it is discarded before accumulation.
LaurentPolynomial mul(const LaurentPolynomial& p, const LaurentPolynomial& q,
                      const std::optional<ExponentWindow>& window = std::nullopt);
LaurentPolynomial operator*(const LaurentPolynomial& p, const LaurentPolynomial& q);

/// Unpruned power by repeated multiplication.
LaurentPolynomial pow(const LaurentPolynomial& base, int n);

/// Product of `factors` restricted to the exponents listed in `targets`.
///
/// Runs the product left to right. After each multiplication, terms that can
/// no longer reach the bounding box of `targets` using the per-variable exponent
/// range of the remaining factors are dropped. The coefficient of every target
/// equals the coefficient in the full expansion.
LaurentPolynomial product_with_target(
    std::span<const std::reference_wrapper<const LaurentPolynomial>> factors,
    std::span<const WeightVector> targets, std::size_t rank);

/// base^n restricted to `targets` (see product_with_target). Throws DomainError for n < 0.
LaurentPolynomial pow_with_target(const LaurentPolynomial& base, int n,
                                  std::span<const WeightVector> targets);

/// Coefficients of z^t in base^k for every k in 0..max_n and every target t.
///
/// Result is indexed [k][target index]. One pass over successive powers, pruned
/// to terms that can still reach a target within the remaining steps.
std::vector<std::vector<BigInt>> power_coefficient_sequence(const LaurentPolynomial& base,
                                                            int max_n,
                                                            std::span<const WeightVector> targets);

/// Coefficient of z^e (0 when absent). Throws RankMismatchError on length mismatch.
BigInt coefficient_of(const LaurentPolynomial& p, const WeightVector& e);

/// Renames variables: variable i of p becomes variable perm[i] of the result.
/// Throws DomainError unless perm is a permutation of 0..rank-1.
LaurentPolynomial substitute_swap(const LaurentPolynomial& p, std::span<const std::size_t> perm);

}  // namespace singlets
