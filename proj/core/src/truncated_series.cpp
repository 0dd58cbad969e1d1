#include "singlets/truncated_series.hpp"

#include <algorithm>

#include "singlets/errors.hpp"

namespace singlets {

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw SeriesError("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
  return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1, Rational(0)));
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s = zero(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::from_integers(std::span<const BigInt> coefficients) {
  std::vector<Rational> c;
  c.reserve(coefficients.size());
  for (const auto& v : coefficients) c.emplace_back(v);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::from_polynomial(const IntPolynomial& p, int order) {
  TruncatedSeries s = zero(order);
  for (int k = 0; k <= std::min(order, p.degree()); ++k) s.coeffs_[k] = p.coefficient(k);
  return s;
}

bool TruncatedSeries::is_zero() const { return !valuation().has_value(); }

std::optional<int> TruncatedSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return static_cast<int>(k);
  }
  return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw SeriesError("cannot truncate order " + std::to_string(this->order()) + " series to " +
                      std::to_string(order));
  }
  return TruncatedSeries(
      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) throw SeriesError("derivative of an order-0 series is undetermined");
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * static_cast<long>(k);
  return TruncatedSeries(std::move(c));
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + singlets::to_string(coeffs_[k]) + ")";
    if (k > 0) out += "*x^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out + " + O(x^" + std::to_string(order() + 1) + ")";
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] + b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a[k] - b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Rational& factor) {
  std::vector<Rational> c(a.coefficients());
  for (auto& v : c) v *= factor;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div(const TruncatedSeries& num, const TruncatedSeries& den) {
  const auto v = den.valuation();
  if (!v) throw SeriesError("division by the zero series");
  const int order = std::min(num.order(), den.order()) - *v;
  if (order < 0) throw SeriesError("divisor valuation exceeds the known coefficients");
  for (int k = 0; k < *v; ++k) {
    if (num[k] != 0) {
      throw SeriesError("numerator valuation " + std::to_string(k) +
                        " is below divisor valuation " + std::to_string(*v));
    }
  }
  const Rational& lead = den[*v];
  std::vector<Rational> q(static_cast<std::size_t>(order) + 1, Rational(0));
  for (int k = 0; k <= order; ++k) {
    Rational acc = num[k + *v];
    for (int i = 1; i <= k; ++i) acc -= den[i + *v] * q[k - i];
    q[k] = acc / lead;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries series_sqrt(const TruncatedSeries& s) {
  if (s[0] != 1) {
    throw SeriesError("series_sqrt supports constant term 1 only, got " + to_string(s[0]));
  }
  const int target = s.order();
  std::vector<Rational> t{Rational(1)};
  int known = 0;
  while (known < target) {
    const int next = std::min(2 * known + 1, target);
    std::vector<Rational> padded(t);
    padded.resize(static_cast<std::size_t>(next) + 1, Rational(0));
    TruncatedSeries current(std::move(padded));
    TruncatedSeries ratio = series_div(s.truncated(next), current);
    t = series_scale(series_add(current, ratio), Rational(1, 2)).coefficients();
    known = next;
  }
  return TruncatedSeries(std::move(t));
}

}  // namespace singlets
