#pragma once

#include <string>
#include <vector>

#include "singlets/int_polynomial.hpp"
#include "singlets/laurent_polynomial.hpp"
#include "singlets/truncated_series.hpp"

namespace singlets {

/// Linear ODE sum_k p_k(x) f^{(k)}(x) = q(x) with polynomial coefficients.
struct ODESpec {
  std::string name;
  std::vector<IntPolynomial> coefficients;  // p_0 .. p_m
  IntPolynomial inhomogeneous;              // q

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  int max_coefficient_degree() const;

  /// Throws SeriesError unless m >= 1 and p_m is nonzero.
  void validate() const;
};

/// sum_k p_k f^{(k)} - q as a series of order T - m, where T = f.order().
/// Throws SeriesError if T < m + 2.
TruncatedSeries apply_ode(const ODESpec& spec, const TruncatedSeries& f);

/// The homogeneous operator applied to x^exponent, as an exact Laurent
/// polynomial in one variable. Negative exponents are allowed.
LaurentPolynomial apply_ode_to_monomial(const ODESpec& spec, int exponent);

}  // namespace singlets
