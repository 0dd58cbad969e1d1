#include "singlets/root_system.hpp"

#include <string>

#include "singlets/errors.hpp"

namespace singlets {

RootSystemA build_root_system(int group_n) {
  if (group_n < 2) {
    throw InvalidRankError("SU(N) requires N >= 2, got N = " + std::to_string(group_n));
  }
  RootSystemA rs;
  rs.group_n_ = group_n;
  const std::size_t rank = rs.rank();

  // Simple root alpha_i: row i of the A_{N-1} Cartan matrix.
  for (std::size_t i = 0; i < rank; ++i) {
    WeightVector alpha(rank);
    alpha[i] = 2;
    if (i > 0) alpha[i - 1] = -1;
    if (i + 1 < rank) alpha[i + 1] = -1;
    rs.simple_roots_.push_back(alpha);
  }
  for (std::size_t i = 0; i < rank; ++i) {
    WeightVector sum(rank);
    for (std::size_t j = i; j < rank; ++j) {
      sum += rs.simple_roots_[j];
      rs.positive_roots_.push_back(sum);
    }
  }

  WeightVector twice_rho(rank);
  for (const auto& alpha : rs.positive_roots_) twice_rho += alpha;
  rs.weyl_vector_ = WeightVector(rank);
  for (std::size_t i = 0; i < rank; ++i) rs.weyl_vector_[i] = twice_rho[i] / 2;

  mpz_fac_ui(rs.weyl_order_.get_mpz_t(), static_cast<unsigned long>(group_n));
  return rs;
}

LaurentPolynomial haar_denominator(const RootSystemA& roots) {
  const std::size_t rank = roots.rank();
  LaurentPolynomial out = LaurentPolynomial::constant(rank, 1);
  for (const auto& alpha : roots.positive_roots()) {
    LaurentPolynomial factor = LaurentPolynomial::constant(rank, 1);
    factor.add_term(alpha, -1);
    out = mul(out, factor);
  }
  return out;
}

}  // namespace singlets
