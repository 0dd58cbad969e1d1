#include "singlets/int_polynomial.hpp"

#include <algorithm>

namespace singlets {

IntPolynomial::IntPolynomial(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(int degree, const BigInt& coefficient) {
  std::vector<BigInt> c(static_cast<std::size_t>(degree) + 1, BigInt(0));
  c.back() = coefficient;
  return IntPolynomial(std::move(c));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

BigInt IntPolynomial::root_bound() const {
  if (coeffs_.size() <= 1) return 0;
  const BigInt lead = abs(coeffs_.back());
  BigInt biggest = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) biggest = std::max(biggest, BigInt(abs(coeffs_[i])));
  // 1 + max |a_i / a_d|, rounded up.
  BigInt q = biggest / lead;
  if (q * lead != biggest) q += 1;
  return q + 1;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string(const std::string& variable) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0 || magnitude != 1) out += to_decimal(magnitude);
    if (k > 0) {
      if (magnitude != 1) out += "*";
      out += variable;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace singlets
