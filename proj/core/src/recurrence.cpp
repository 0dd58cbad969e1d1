#include "singlets/recurrence.hpp"

#include "singlets/errors.hpp"

namespace singlets {

void RecurrenceSpec::validate() const {
  if (terms.empty()) throw RecurrenceError(name + ": recurrence has no terms");
  if (n_min < 0) throw RecurrenceError(name + ": n_min must be >= 0");
  if (seeds.size() != static_cast<std::size_t>(n_min) + 1) {
    throw RecurrenceError(name + ": expected " + std::to_string(n_min + 1) + " seeds, got " +
                          std::to_string(seeds.size()));
  }
  if (static_cast<std::size_t>(n_min) + 1 < order()) {
    throw RecurrenceError(name + ": lag " + std::to_string(order() - 1) +
                          " reaches below a(0) at n_min = " + std::to_string(n_min));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const IntPolynomial& den = terms[i].denominator;
    if (den.is_zero()) throw RecurrenceError(name + ": zero denominator polynomial");
    const BigInt bound = den.root_bound();
    for (BigInt n = n_min; n <= bound; ++n) {
      if (den(n) == 0) {
        throw RecurrenceError(name + ": denominator of lag " + std::to_string(i) +
                              " vanishes at n = " + to_decimal(n));
      }
    }
  }
}

Rational recurrence_step(const RecurrenceSpec& spec, std::span<const BigInt> sequence, int n) {
  Rational next = 0;
  const BigInt at(n);
  for (std::size_t i = 0; i < spec.terms.size(); ++i) {
    const long index = static_cast<long>(n) - static_cast<long>(i);
    if (index < 0 || static_cast<std::size_t>(index) >= sequence.size()) {
      throw RecurrenceError(spec.name + ": a(" + std::to_string(index) + ") is not available");
    }
    const BigInt den = spec.terms[i].denominator(at);
    if (den == 0) {
      throw RecurrenceError(spec.name + ": denominator vanishes at n = " + std::to_string(n));
    }
    Rational c(spec.terms[i].numerator(at), den);
    c.canonicalize();
    next += c * sequence[static_cast<std::size_t>(index)];
  }
  return next;
}

std::vector<BigInt> evaluate_recurrence(const RecurrenceSpec& spec, std::size_t count) {
  spec.validate();
  if (count <= static_cast<std::size_t>(spec.n_min)) {
    throw DomainError(spec.name + ": count must exceed n_min");
  }
  std::vector<BigInt> out(spec.seeds.begin(), spec.seeds.end());
  for (int n = spec.n_min; out.size() < count; ++n) {
    Rational next = recurrence_step(spec, out, n);
    if (!is_integral(next)) {
      throw RecurrenceError(spec.name + ": non-integral term a(" + std::to_string(n + 1) +
                            ") = " + to_string(next));
    }
    out.push_back(next.get_num());
  }
  return out;
}

RecurrenceReport verify_recurrence(std::span<const BigInt> sequence, const RecurrenceSpec& spec) {
  RecurrenceReport report;
  report.first_checked = static_cast<std::size_t>(spec.n_min) + 1;
  if (sequence.size() <= report.first_checked) {
    report.detail = "sequence too short for " + spec.name;
    return report;
  }
  report.last_checked = sequence.size() - 1;
  for (std::size_t m = report.first_checked; m < sequence.size(); ++m) {
    const int n = static_cast<int>(m) - 1;
    Rational predicted;
    try {
      predicted = recurrence_step(spec, sequence.first(m), n);
    } catch (const RecurrenceError& e) {
      report.first_violation = m;
      report.detail = e.what();
      return report;
    }
    if (predicted != Rational(sequence[m])) {
      report.first_violation = m;
      report.detail = spec.name + ": a(" + std::to_string(m) + ") = " + to_decimal(sequence[m]) +
                      " but the recurrence gives " + to_string(predicted);
      return report;
    }
  }
  report.passed = true;
  return report;
}

}  // namespace singlets
