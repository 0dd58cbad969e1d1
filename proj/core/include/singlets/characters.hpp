#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "singlets/bigint.hpp"
#include "singlets/laurent_polynomial.hpp"
#include "singlets/weight_vector.hpp"

namespace singlets {

/// A representation given by its weight multiset.
struct CharacterSpec {
  std::size_t rank = 0;
  std::map<WeightVector, BigInt> weights;  // weight -> multiplicity (> 0)
  std::string label;

  BigInt dimension() const;
};

/// z_1 + sum_{k=2}^{N-1} z_k / z_{k-1} + 1 / z_{N-1}. Throws InvalidRankError for N < 2.
LaurentPolynomial fundamental_character(int group_n);

/// (N - 1) + sum over all roots of z^alpha. Throws InvalidRankError for N < 2.
LaurentPolynomial adjoint_character(int group_n);

/// sum of multiplicity(lambda) z^lambda.
///
/// Throws RankMismatchError if a weight's length differs from spec.rank, and
/// DomainError for non-positive multiplicities or an empty weight set.
LaurentPolynomial character_from_weights(const CharacterSpec& spec);

/// Weight multiset of the SU(N) adjoint representation.
CharacterSpec adjoint_weights(int group_n);

}  // namespace singlets
