#include "singlets/ode.hpp"

#include <algorithm>

#include "singlets/errors.hpp"

namespace singlets {

int ODESpec::max_coefficient_degree() const {
  int d = -1;
  for (const auto& p : coefficients) d = std::max(d, p.degree());
  return d;
}

void ODESpec::validate() const {
  if (coefficients.size() < 2) throw SeriesError(name + ": ODE must have order >= 1");
  if (coefficients.back().is_zero()) throw SeriesError(name + ": leading coefficient is zero");
}

TruncatedSeries apply_ode(const ODESpec& spec, const TruncatedSeries& f) {
  spec.validate();
  const int m = spec.order();
  if (f.order() < m + 2) {
    throw SeriesError(spec.name + ": series order " + std::to_string(f.order()) +
                      " is too small for an order-" + std::to_string(m) + " operator");
  }
  const int result_order = f.order() - m;
  TruncatedSeries total = series_scale(TruncatedSeries::from_polynomial(spec.inhomogeneous, result_order), -1);
  TruncatedSeries derivative = f;
  for (int k = 0; k <= m; ++k) {
    if (k > 0) derivative = derivative.derivative();
    const IntPolynomial& p = spec.coefficients[static_cast<std::size_t>(k)];
    if (p.is_zero()) continue;
    TruncatedSeries term = series_mul(TruncatedSeries::from_polynomial(p, result_order),
                                      derivative.truncated(result_order));
    total = series_add(total, term);
  }
  return total;
}

LaurentPolynomial apply_ode_to_monomial(const ODESpec& spec, int exponent) {
  spec.validate();
  LaurentPolynomial out(1);
  BigInt falling = 1;  // exponent (exponent - 1) ... (exponent - k + 1)
  for (int k = 0; k <= spec.order(); ++k) {
    if (k > 0) falling *= exponent - (k - 1);
    const IntPolynomial& p = spec.coefficients[static_cast<std::size_t>(k)];
    for (int i = 0; i <= p.degree(); ++i) {
      out.add_term(WeightVector{exponent - k + i}, p.coefficient(i) * falling);
    }
  }
  return out;
}

}  // namespace singlets
