#pragma once

#include <cstddef>
#include <vector>

#include "singlets/bigint.hpp"
#include "singlets/laurent_polynomial.hpp"
#include "singlets/weight_vector.hpp"

namespace singlets {

/// Root system of type A_{N-1} (the Lie algebra of SU(N)) in the Dynkin basis.
class RootSystemA {
 public:
  int group_n() const { return group_n_; }
  std::size_t rank() const { return static_cast<std::size_t>(group_n_ - 1); }

  /// Sums of consecutive simple roots alpha_i + ... + alpha_j, ordered by (i, j).
  const std::vector<WeightVector>& positive_roots() const { return positive_roots_; }
  const std::vector<WeightVector>& simple_roots() const { return simple_roots_; }

  /// Half the sum of the positive roots; (1, ..., 1) in this basis.
  const WeightVector& weyl_vector() const { return weyl_vector_; }

  /// |W| = N!
  const BigInt& weyl_order() const { return weyl_order_; }

 private:
  friend RootSystemA build_root_system(int group_n);

  int group_n_ = 0;
  std::vector<WeightVector> simple_roots_;
  std::vector<WeightVector> positive_roots_;
  WeightVector weyl_vector_;
  BigInt weyl_order_;
};

/// Throws InvalidRankError for N < 2.
RootSystemA build_root_system(int group_n);

/// Expanded product over positive roots of (1 - z^alpha).
LaurentPolynomial haar_denominator(const RootSystemA& roots);

}  // namespace singlets
