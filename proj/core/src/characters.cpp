#include "singlets/characters.hpp"

#include "singlets/errors.hpp"
#include "singlets/root_system.hpp"

namespace singlets {

BigInt CharacterSpec::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : weights) total += m;
  return total;
}

LaurentPolynomial fundamental_character(int group_n) {
  if (group_n < 2) {
    throw InvalidRankError("SU(N) requires N >= 2, got N = " + std::to_string(group_n));
  }
  const std::size_t rank = static_cast<std::size_t>(group_n - 1);
  LaurentPolynomial chi(rank);
  WeightVector first(rank);
  first[0] = 1;
  chi.add_term(first, 1);
  for (std::size_t k = 1; k < rank; ++k) {
    WeightVector w(rank);
    w[k] = 1;
    w[k - 1] = -1;
    chi.add_term(w, 1);
  }
  WeightVector last(rank);
  last[rank - 1] = -1;
  chi.add_term(last, 1);
  return chi;
}

CharacterSpec adjoint_weights(int group_n) {
  RootSystemA rs = build_root_system(group_n);
  CharacterSpec spec;
  spec.rank = rs.rank();
  spec.label = "adjoint";
  spec.weights[WeightVector::zero(rs.rank())] = group_n - 1;
  for (const auto& alpha : rs.positive_roots()) {
    spec.weights[alpha] = 1;
    spec.weights[-alpha] = 1;
  }
  return spec;
}

LaurentPolynomial adjoint_character(int group_n) {
  return character_from_weights(adjoint_weights(group_n));
}

LaurentPolynomial character_from_weights(const CharacterSpec& spec) {
  if (spec.weights.empty()) throw DomainError("character '" + spec.label + "' has no weights");
  LaurentPolynomial chi(spec.rank);
  for (const auto& [w, m] : spec.weights) {
    if (w.rank() != spec.rank) {
      throw RankMismatchError("weight " + w.to_string() + " in '" + spec.label +
                              "' does not have rank " + std::to_string(spec.rank));
    }
    if (m <= 0) {
      throw DomainError("weight " + w.to_string() + " in '" + spec.label +
                        "' has non-positive multiplicity");
    }
    chi.add_term(w, m);
  }
  return chi;
}

}  // namespace singlets
