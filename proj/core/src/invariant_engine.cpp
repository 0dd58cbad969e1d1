#include "singlets/invariant_engine.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>

#include "singlets/characters.hpp"
#include "singlets/errors.hpp"
#include "singlets/root_system.hpp"

namespace singlets {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + " must be >= 0, got " + std::to_string(n));
}

/// Only monomials of prod chi that cancel a monomial of the denominator reach z^0.
std::vector<WeightVector> cancelling_exponents(const LaurentPolynomial& denominator) {
  std::vector<WeightVector> out;
  out.reserve(denominator.size());
  for (const auto& [e, c] : denominator.terms()) out.push_back(-e);
  return out;
}

BigInt pair_with_denominator(const LaurentPolynomial& denominator,
                             const LaurentPolynomial& product) {
  BigInt total = 0;
  for (const auto& [e, c] : denominator.terms()) total += c * product.coefficient(-e);
  return total;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

InvariantQuery InvariantQuery::power(int group_n, LaurentPolynomial base, int n) {
  InvariantQuery q;
  q.group_n = group_n;
  q.factors.push_back({std::move(base), n});
  return q;
}

BigInt invariant_dimension(const InvariantQuery& query) {
  RootSystemA rs = build_root_system(query.group_n);
  std::vector<std::reference_wrapper<const LaurentPolynomial>> factors;
  for (const auto& f : query.factors) {
    if (f.character.rank() != rs.rank()) {
      throw RankMismatchError("character of rank " + std::to_string(f.character.rank()) +
                              " used with SU(" + std::to_string(query.group_n) + ")");
    }
    require_nonnegative(f.power, "tensor power");
    for (int k = 0; k < f.power; ++k) factors.emplace_back(f.character);
  }
  LaurentPolynomial denominator = haar_denominator(rs);
  std::vector<WeightVector> targets = cancelling_exponents(denominator);
  LaurentPolynomial product = product_with_target(factors, targets, rs.rank());
  return pair_with_denominator(denominator, product);
}

BigInt adjoint_invariant_dimension(int group_n, int n) {
  return invariant_dimension(InvariantQuery::power(group_n, adjoint_character(group_n), n));
}

std::vector<BigInt> invariant_dimension_sequence(int group_n, const LaurentPolynomial& base,
                                                 int max_n) {
  require_nonnegative(max_n, "max_n");
  RootSystemA rs = build_root_system(group_n);
  if (base.rank() != rs.rank()) {
    throw RankMismatchError("character rank does not match SU(" + std::to_string(group_n) + ")");
  }
  LaurentPolynomial denominator = haar_denominator(rs);
  std::vector<WeightVector> targets = cancelling_exponents(denominator);
  std::vector<BigInt> coefficients;
  for (const auto& [e, c] : denominator.terms()) coefficients.push_back(c);

  auto table = power_coefficient_sequence(base, max_n, targets);
  std::vector<BigInt> out;
  out.reserve(table.size());
  for (const auto& row : table) {
    BigInt total = 0;
    for (std::size_t t = 0; t < row.size(); ++t) total += coefficients[t] * row[t];
    out.push_back(total);
  }
  return out;
}

BigInt su2_dimension_by_binomials(int n) {
  require_nonnegative(n, "n");
  BigInt total = 0;
  const auto un = static_cast<unsigned long>(n);
  for (unsigned long r = 0; r <= un; ++r) {
    if (r % 2 == 0) {
      total += binomial(un, r) * binomial(r, r / 2);
    } else {
      total -= binomial(un, r) * binomial(r, (r - 1) / 2);
    }
  }
  return total;
}

std::span<const WeightVector> su3_component_exponents() {
  static const std::array<WeightVector, 4> exponents{
      WeightVector{0, 0}, WeightVector{1, -2}, WeightVector{-3, 0}, WeightVector{-2, -2}};
  return exponents;
}

SU3Components su3_components(int n) {
  require_nonnegative(n, "n");
  auto targets = su3_component_exponents();
  LaurentPolynomial power = pow_with_target(adjoint_character(3), n, targets);
  return {n, power.coefficient(targets[0]), power.coefficient(targets[1]),
          power.coefficient(targets[2]), power.coefficient(targets[3])};
}

std::vector<SU3Components> su3_component_sequence(int max_n) {
  require_nonnegative(max_n, "max_n");
  auto rows = power_coefficient_sequence(adjoint_character(3), max_n, su3_component_exponents());
  std::vector<SU3Components> out;
  out.reserve(rows.size());
  for (std::size_t n = 0; n < rows.size(); ++n) {
    out.push_back({static_cast<int>(n), rows[n][0], rows[n][1], rows[n][2], rows[n][3]});
  }
  return out;
}

BigInt su3_dimension_from_components(const SU3Components& c) {
  return c.a1 - 2 * c.a2 + 2 * c.a3 - c.a4;
}

DimensionTable dimension_table(std::span<const int> groups, std::span<const int> powers,
                               unsigned threads) {
  for (int g : groups) {
    if (g < 2) throw InvalidRankError("SU(N) requires N >= 2, got N = " + std::to_string(g));
  }
  for (int p : powers) require_nonnegative(p, "tensor power");

  DimensionTable table;
  table.groups.assign(groups.begin(), groups.end());
  table.powers.assign(powers.begin(), powers.end());
  table.cells.assign(powers.size(), std::vector<BigInt>(groups.size()));

  const std::size_t cell_count = groups.size() * powers.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cell_count, 1)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t cell = next++; cell < cell_count; cell = next++) {
      const std::size_t i = cell / groups.size();
      const std::size_t j = cell % groups.size();
      try {
        table.cells[i][j] = adjoint_invariant_dimension(groups[j], powers[i]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return table;
}

BigInt su2_cg_oracle(int n) {
  require_nonnegative(n, "n");
  // multiplicity[j] for integer total spin j; the trivial rep to start.
  std::vector<BigInt> multiplicity{1};
  for (int step = 0; step < n; ++step) {
    std::vector<BigInt> next(multiplicity.size() + 1, BigInt(0));
    for (std::size_t j = 0; j < multiplicity.size(); ++j) {
      const BigInt& m = multiplicity[j];
      if (m == 0) continue;
      // j (x) 1 = |j-1| .. j+1; for j = 0 only spin 1 appears.
      if (j == 0) {
        next[1] += m;
        continue;
      }
      next[j - 1] += m;
      next[j] += m;
      next[j + 1] += m;
    }
    multiplicity = std::move(next);
  }
  return multiplicity[0];
}

std::vector<BigInt> derangement_sequence(int max_n) {
  require_nonnegative(max_n, "max_n");
  std::vector<BigInt> out{1};
  for (int n = 1; n <= max_n; ++n) {
    BigInt next = n * out.back();
    next += (n % 2 == 0) ? 1 : -1;
    out.push_back(next);
  }
  return out;
}

}  // namespace singlets
