#include "singlets/known_relations.hpp"

#include "singlets/errors.hpp"

namespace singlets {

namespace {

RecurrenceSpec make_recurrence(std::string name, int n_min, std::vector<BigInt> seeds,
                               std::vector<RecurrenceTerm> terms) {
  RecurrenceSpec spec{std::move(name), std::move(terms), n_min, std::move(seeds)};
  spec.validate();
  return spec;
}

// Shorthands for factors in n.
IntPolynomial n_plus(long c) { return IntPolynomial{c, 1}; }
const IntPolynomial kN{0, 1};

}  // namespace

RecurrenceSpec motzkin_recurrence(std::vector<BigInt> seeds) {
  return make_recurrence("motzkin", 1, std::move(seeds),
                         {{IntPolynomial{0, 2}, n_plus(2)}, {IntPolynomial{0, 3}, n_plus(2)}});
}

RecurrenceSpec franel_recurrence(std::vector<BigInt> seeds) {
  const IntPolynomial den = n_plus(1) * n_plus(1);
  return make_recurrence("franel", 1, std::move(seeds),
                         {{IntPolynomial{2, 7, 7}, den}, {IntPolynomial{0, 0, 8}, den}});
}

RecurrenceSpec a2_recurrence(std::vector<BigInt> seeds) {
  const IntPolynomial common = n_plus(2) * n_plus(2) * IntPolynomial{1, 3};
  return make_recurrence(
      "a2", 1, std::move(seeds),
      {{n_plus(1) * IntPolynomial{8, 30, 49, 21}, kN * common},
       {IntPolynomial{0, 8} * n_plus(1) * IntPolynomial{4, 3}, common}});
}

RecurrenceSpec a3_recurrence(std::vector<BigInt> seeds) {
  const IntPolynomial cubic{-6, 1, 4, 1};
  return make_recurrence(
      "a3", 2, std::move(seeds),
      {{n_plus(1) * n_plus(1) * IntPolynomial{-2, 7, 7}, kN * cubic},
       {IntPolynomial{0, 8} * n_plus(1) * n_plus(1), cubic}});
}

RecurrenceSpec a4_recurrence(std::vector<BigInt> seeds) {
  const IntPolynomial square = n_plus(3) * n_plus(3);
  return make_recurrence(
      "a4", 2, std::move(seeds),
      {{n_plus(1) * IntPolynomial{36, 116, 91, 21}, square * IntPolynomial{-6, 1, 3}},
       {IntPolynomial{0, 0, 8} * n_plus(1) * IntPolynomial{-2, 7, 3},
        square * IntPolynomial{6, -7, -2, 3}}});
}

ODESpec su2_ode() {
  return {"su2", {IntPolynomial{1, 0, -3}, IntPolynomial{0, 1, -2, -3}}, IntPolynomial{1}};
}

ODESpec a1_ode() {
  return {"a1",
          {IntPolynomial{2, 8}, IntPolynomial{-1, 14, 24},
           IntPolynomial{0, 1} * IntPolynomial{1, 1} * IntPolynomial{-1, 8}},
          {}};
}

ODESpec a2_ode() {
  return {"a2",
          {IntPolynomial{2, -8, -112}, IntPolynomial{0, -2, -208, -848},
           IntPolynomial{0, 0, 19, -436, -968}, IntPolynomial{0, 0, 0, 19, -196, -296},
           IntPolynomial{0, 0, 0, 0, 3, -21, -24}},
          {}};
}

ODESpec a3_ode() {
  return {"a3",
          {IntPolynomial{4, 2, -32}, IntPolynomial{0, -4, -50, -256},
           IntPolynomial{0, 0, 2, -131, -304}, IntPolynomial{0, 0, 0, 6, -63, -96},
           IntPolynomial{0, 0, 0, 0, 1, -7, -8}},
          {}};
}

ODESpec a4_ode() {
  return {"a4",
          {IntPolynomial{32, 36, -128}, IntPolynomial{0, 22, -36, -2176},
           IntPolynomial{0, 0, -38, -1182, -4384}, IntPolynomial{0, 0, 0, 55, -1166, -2400},
           IntPolynomial{0, 0, 0, 0, 31, -301, -440},
           IntPolynomial{0, 0, 0, 0, 0, 3, -21, -24}},
          {}};
}

TruncatedSeries su2_closed_form_series(int order) {
  if (order < 0) throw SeriesError("negative truncation order");
  // The x in the denominator cancels against the numerator, costing one order.
  const int working = order + 1;
  TruncatedSeries root =
      series_sqrt(TruncatedSeries::from_polynomial(IntPolynomial{1, -2, -3}, working));
  TruncatedSeries numerator =
      series_add(TruncatedSeries::from_polynomial(IntPolynomial{-1, 3}, working), root);
  TruncatedSeries denominator =
      series_mul(TruncatedSeries::from_polynomial(IntPolynomial{0, 2}, working), root);
  return series_div(numerator, denominator);
}

}  // namespace singlets
