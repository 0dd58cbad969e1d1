#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/invariant_engine.hpp"

namespace singlets {

/// Outcome of one named check. `range` is the inclusive index range examined
/// (powers n, series orders, or exponents, depending on the check).
struct CheckReport {
  std::string check;
  long range_begin = 0;
  long range_end = 0;
  bool passed = false;
  std::optional<long> first_violation;
  std::string detail;
};

struct VerifyOptions {
  std::optional<int> max_n;  // recurrences, closed form, oracle, symmetry, derangement groups
  std::optional<int> order;  // ODE truncation order of the checked residual
};

/// Names accepted by Verifier::run, in the order `run_all` executes them.
std::span<const std::string_view> check_names();

/// Runs the recurrence, generating-function and table checks against sequences
/// computed by the invariant engine. Engine sequences are cached across checks.
class Verifier {
 public:
  /// Throws DomainError for an unknown check name.
  CheckReport run(std::string_view check, const VerifyOptions& options = {});
  std::vector<CheckReport> run_all(const VerifyOptions& options = {});

  /// d_SU(2)(0..max_n) for the adjoint.
  const std::vector<BigInt>& su2_sequence(int max_n);
  /// a1..a4 for n = 0..max_n.
  const std::vector<SU3Components>& su3_sequence(int max_n);

 private:
  std::vector<BigInt> su2_;
  std::vector<SU3Components> su3_;
};

}  // namespace singlets
