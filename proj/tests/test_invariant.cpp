#include "doctest.h"

#include <array>

#include "singlets/characters.hpp"
#include "singlets/errors.hpp"
#include "singlets/invariant_engine.hpp"
#include "singlets/root_system.hpp"
#include "support/oracle.hpp"

using namespace singlets;

namespace {

// Constant term of D * prod chi, expanded without pruning.
BigInt full_constant_term(int group_n, const std::vector<TensorFactor>& factors) {
  const std::size_t rank = static_cast<std::size_t>(group_n - 1);
  oracle::Poly acc = oracle::from(haar_denominator(build_root_system(group_n)));
  for (const auto& f : factors) acc = oracle::mul(acc, oracle::pow(oracle::from(f.character), f.power, rank));
  auto it = acc.find(oracle::Exponent(rank, 0));
  return it == acc.end() ? BigInt(0) : it->second;
}

}  // namespace

TEST_CASE("invariant_dimension examples") {
  CHECK(adjoint_invariant_dimension(2, 2) == 1);
  CHECK(adjoint_invariant_dimension(3, 4) == 8);
  CHECK(adjoint_invariant_dimension(4, 8) == 10829);
  CHECK(adjoint_invariant_dimension(2, 0) == 1);
  CHECK(adjoint_invariant_dimension(5, 0) == 1);
  CHECK(adjoint_invariant_dimension(5, 1) == 0);
}

TEST_CASE("invariant_dimension against the Vandermonde oracle") {
  for (int g = 2; g <= 4; ++g) {
    for (int n = 0; n <= (g == 4 ? 4 : 6); ++n) {
      CAPTURE(g);
      CAPTURE(n);
      CHECK(adjoint_invariant_dimension(g, n) == oracle::vandermonde_dimension(g, n));
    }
  }
}

TEST_CASE("mixed tensor factors match the unpruned expansion") {
  auto adj = adjoint_character(3);
  auto fund = fundamental_character(3);
  std::vector<std::size_t> swap{1, 0};
  auto anti = substitute_swap(fund, swap);
  std::vector<std::vector<TensorFactor>> cases{
      {{adj, 2}, {fund, 3}},
      {{fund, 2}, {anti, 2}},
      {{adj, 1}, {fund, 1}, {anti, 1}},
      {{fund, 6}},
      {{adj, 3}, {anti, 3}},
  };
  for (const auto& factors : cases) {
    CHECK(invariant_dimension({3, factors}) == full_constant_term(3, factors));
  }
  CHECK(invariant_dimension({3, {}}) == 1);
}

TEST_CASE("invariant_dimension rejects bad queries") {
  CHECK_THROWS_AS(invariant_dimension({1, {}}), InvalidRankError);
  CHECK_THROWS_AS(invariant_dimension({3, {{adjoint_character(2), 2}}}), RankMismatchError);
  CHECK_THROWS_AS(invariant_dimension({2, {{adjoint_character(2), -1}}}), DomainError);
}

TEST_CASE("invariant_dimension_sequence agrees with single queries") {
  for (int g = 2; g <= 5; ++g) {
    auto seq = invariant_dimension_sequence(g, adjoint_character(g), 6);
    REQUIRE(seq.size() == 7);
    for (int n = 0; n <= 6; ++n) CHECK(seq[static_cast<std::size_t>(n)] == adjoint_invariant_dimension(g, n));
  }
  auto fund = invariant_dimension_sequence(3, fundamental_character(3), 9);
  // Singlets in 3^{(x) 3k} are counted by standard Young tableaux of shape (k, k, k).
  for (int n = 0; n <= 9; ++n) {
    if (n % 3) CHECK(fund[static_cast<std::size_t>(n)] == 0);
  }
  CHECK(fund[0] == 1);
  CHECK(fund[3] == 1);
  CHECK(fund[6] == 5);
  CHECK(fund[9] == 42);
}

TEST_CASE("SU(2): binomial sum, ladder oracle and Riordan numbers") {
  CHECK(su2_dimension_by_binomials(3) == 1);
  CHECK(su2_dimension_by_binomials(1) == 0);
  CHECK(su2_dimension_by_binomials(8) == 91);
  CHECK(su2_cg_oracle(0) == 1);
  CHECK(su2_cg_oracle(2) == 1);
  CHECK(su2_cg_oracle(6) == 15);
  auto seq = invariant_dimension_sequence(2, adjoint_character(2), 30);
  for (int n = 0; n <= 30; ++n) {
    CAPTURE(n);
    const auto& d = seq[static_cast<std::size_t>(n)];
    CHECK(d == oracle::riordan(n));
    CHECK(d == su2_dimension_by_binomials(n));
    CHECK(d == su2_cg_oracle(n));
  }
}

TEST_CASE("SU(3) components") {
  CHECK(su3_components(0) == SU3Components{0, 1, 0, 0, 0});
  CHECK(su3_components(2) == SU3Components{2, 10, 6, 2, 1});
  CHECK(su3_components(5) == SU3Components{5, 2252, 1780, 1100, 860});

  CHECK(su3_dimension_from_components(su3_components(2)) == 1);
  CHECK(su3_dimension_from_components(su3_components(4)) == 8);
  CHECK(su3_dimension_from_components(su3_components(6)) == 145);

  auto exps = su3_component_exponents();
  REQUIRE(exps.size() == 4);
  auto chi = adjoint_character(3);
  auto seq = su3_component_sequence(6);
  oracle::Poly power{{{0, 0}, 1}};
  for (int n = 0; n <= 6; ++n) {
    const auto& c = seq[static_cast<std::size_t>(n)];
    CHECK(c == su3_components(n));
    std::array<BigInt, 4> got{c.a1, c.a2, c.a3, c.a4};
    for (std::size_t t = 0; t < 4; ++t) {
      auto it = power.find(oracle::Exponent(exps[t].entries().begin(), exps[t].entries().end()));
      CHECK(got[t] == (it == power.end() ? BigInt(0) : it->second));
    }
    CHECK(su3_dimension_from_components(c) == adjoint_invariant_dimension(3, n));
    power = oracle::mul(power, oracle::from(chi));
  }
}

TEST_CASE("dimension_table is independent of the thread count") {
  std::vector<int> groups{2, 3, 4, 5};
  std::vector<int> powers{0, 1, 2, 3, 4, 5, 6};
  auto serial = dimension_table(groups, powers, 1);
  auto parallel = dimension_table(groups, powers, 4);
  auto automatic = dimension_table(groups, powers, 0);
  CHECK(serial.cells == parallel.cells);
  CHECK(serial.cells == automatic.cells);
  CHECK(serial.groups == groups);
  CHECK(serial.powers == powers);
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = 0; j < groups.size(); ++j) {
      CHECK(serial.cells[i][j] == adjoint_invariant_dimension(groups[j], powers[i]));
    }
  }
  std::vector<int> bad{1};
  CHECK_THROWS_AS(dimension_table(bad, powers, 2), InvalidRankError);
}

TEST_CASE("derangements") {
  auto d = derangement_sequence(8);
  REQUIRE(d.size() == 9);
  CHECK(d[0] == 1);
  CHECK(d[4] == 9);
  CHECK(d[8] == 14833);
  for (int n = 0; n <= 8; ++n) CHECK(d[static_cast<std::size_t>(n)] == oracle::count_derangements(n));
}
