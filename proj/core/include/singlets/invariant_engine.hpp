#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/laurent_polynomial.hpp"

namespace singlets {

/// One tensor factor V^{(x) power}.
struct TensorFactor {
  LaurentPolynomial character;
  int power = 1;
};

/// V_1 (x) ... (x) V_n for SU(N), each V_i given by its character.
struct InvariantQuery {
  int group_n = 2;
  std::vector<TensorFactor> factors;

  /// base^{(x) n}
  static InvariantQuery power(int group_n, LaurentPolynomial base, int n);
};

/// Number of singlets in the tensor product: the constant term of
/// haar_denominator * prod chi. An empty product gives 1.
///
/// Throws InvalidRankError (N < 2), RankMismatchError (character rank != N-1)
/// and DomainError (negative power).
BigInt invariant_dimension(const InvariantQuery& query);

/// Singlets in the n-th tensor power of the SU(N) adjoint.
BigInt adjoint_invariant_dimension(int group_n, int n);

/// invariant_dimension of base^{(x) n} for n = 0..max_n, from one pass over powers.
std::vector<BigInt> invariant_dimension_sequence(int group_n, const LaurentPolynomial& base,
                                                 int max_n);

/// SU(2) adjoint singlets from the binomial sum
///   sum_{r even} C(n,r) C(r,r/2) - sum_{r odd} C(n,r) C(r,(r-1)/2).
BigInt su2_dimension_by_binomials(int n);

/// Coefficients of z^0, z1 z2^-2, z1^-3 and z1^-2 z2^-2 in (chi_adj SU(3))^n.
struct SU3Components {
  int n = 0;
  BigInt a1;
  BigInt a2;
  BigInt a3;
  BigInt a4;

  friend bool operator==(const SU3Components&, const SU3Components&) = default;
};

/// Exponents whose coefficients define a1..a4, in that order.
std::span<const WeightVector> su3_component_exponents();

SU3Components su3_components(int n);
std::vector<SU3Components> su3_component_sequence(int max_n);

/// a1 - 2 a2 + 2 a3 - a4
BigInt su3_dimension_from_components(const SU3Components& c);

/// Adjoint singlet counts; cells[i][j] is for powers[i] and groups[j].
struct DimensionTable {
  std::vector<int> groups;
  std::vector<int> powers;
  std::vector<std::vector<BigInt>> cells;
};

/// Cells are independent and may be evaluated on `threads` workers (0 = hardware
/// concurrency); the result does not depend on the thread count.
DimensionTable dimension_table(std::span<const int> groups, std::span<const int> powers,
                               unsigned threads = 1);

/// Independent SU(2) check: runs the ladder j (x) 1 = (j-1) + j + (j+1) on
/// multiplicities by total spin and returns the spin-0 multiplicity after n steps.
BigInt su2_cg_oracle(int n);

/// Subfactorials D(0..max_n): D(n) = n D(n-1) + (-1)^n, D(0) = 1.
std::vector<BigInt> derangement_sequence(int max_n);

}  // namespace singlets
