#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "singlets/bigint.hpp"

namespace singlets {

/// Univariate polynomial with integer coefficients, stored lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> ascending);
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial monomial(int degree, const BigInt& coefficient = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  /// Coefficient of x^k; zero past the degree.
  BigInt coefficient(int k) const;

  BigInt operator()(const BigInt& x) const;
  Rational operator()(const Rational& x) const;

  /// Largest |root| bound (Cauchy); every real root r satisfies |r| <= bound.
  BigInt root_bound() const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string(const std::string& variable = "x") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

}  // namespace singlets
