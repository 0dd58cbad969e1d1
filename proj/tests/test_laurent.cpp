#include "doctest.h"

#include <random>

#include "singlets/characters.hpp"
#include "singlets/errors.hpp"
#include "singlets/laurent_polynomial.hpp"
#include "singlets/root_system.hpp"
#include "support/oracle.hpp"

using namespace singlets;

namespace {

LaurentPolynomial poly1(std::initializer_list<std::pair<int, long>> terms) {
  LaurentPolynomial p(1);
  for (auto [e, c] : terms) p.add_term({e}, c);
  return p;
}

}  // namespace

TEST_CASE("add: cancellation, identity, doubling") {
  CHECK(poly1({{0, 1}, {2, -1}}) + poly1({{2, 1}}) == poly1({{0, 1}}));
  auto p = poly1({{1, 1}, {-1, 1}});
  CHECK(p + LaurentPolynomial(1) == p);
  CHECK(p + p == poly1({{1, 2}, {-1, 2}}));
  CHECK((p - p).is_zero());
  CHECK((p - p).terms().empty());
}

TEST_CASE("mul: hand expansions") {
  auto measure = poly1({{0, 1}, {2, -1}});
  auto chi = poly1({{2, 1}, {0, 1}, {-2, 1}});
  CHECK(measure * chi == poly1({{-2, 1}, {4, -1}}));
  CHECK(chi * LaurentPolynomial::constant(1, 1) == chi);
  CHECK((chi * LaurentPolynomial(1)).is_zero());
}

TEST_CASE("mul: window drops terms before accumulation") {
  auto p = poly1({{1, 1}, {-1, 1}});
  ExponentWindow window(WeightVector{-1}, WeightVector{1});
  CHECK(mul(p, p, window) == poly1({{0, 2}}));

  CHECK_THROWS_AS(ExponentWindow(WeightVector{2}, WeightVector{1}), DomainError);
  CHECK_THROWS_AS(ExponentWindow(WeightVector{0}, WeightVector{1, 1}), RankMismatchError);
}

TEST_CASE("rank mismatch is rejected") {
  LaurentPolynomial a = LaurentPolynomial::constant(1, 1);
  LaurentPolynomial b = LaurentPolynomial::constant(2, 1);
  CHECK_THROWS_AS(add(a, b), RankMismatchError);
  CHECK_THROWS_AS(mul(a, b), RankMismatchError);
  CHECK_THROWS_AS(coefficient_of(a, WeightVector{0, 0}), RankMismatchError);
}

TEST_CASE("coefficient_of") {
  CHECK(coefficient_of(poly1({{0, 1}, {2, -1}}), WeightVector{0}) == 1);
  auto adj = adjoint_character(3);
  CHECK(coefficient_of(adj, WeightVector{1, -2}) == 1);
  CHECK(coefficient_of(adj, WeightVector{5, 5}) == 0);
  CHECK(coefficient_of(adj, WeightVector{0, 0}) == 2);
}

TEST_CASE("substitute_swap") {
  std::vector<std::size_t> swap{1, 0};
  LaurentPolynomial m = LaurentPolynomial::monomial(WeightVector{2, -1});
  CHECK(substitute_swap(m, swap) == LaurentPolynomial::monomial(WeightVector{-1, 2}));

  auto adj = adjoint_character(3);
  CHECK(substitute_swap(adj, swap) == adj);
  auto d = haar_denominator(build_root_system(3));
  CHECK(substitute_swap(d, swap) == d);

  std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(substitute_swap(adj, bad), DomainError);
}

TEST_CASE("stored coefficients are never zero") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = oracle::random_polynomial(rng, 2);
    auto q = oracle::random_polynomial(rng, 2);
    for (const auto& r : {p + q, p - q, p * q, p - p}) {
      for (const auto& [e, c] : r.terms()) {
        CHECK(c != 0);
        CHECK(e.rank() == 2);
      }
    }
  }
}

TEST_CASE("ring axioms on random small polynomials") {
  std::mt19937 rng(20240531);
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (int trial = 0; trial < 150; ++trial) {
      auto p = oracle::random_polynomial(rng, rank);
      auto q = oracle::random_polynomial(rng, rank);
      auto r = oracle::random_polynomial(rng, rank);
      CHECK(p + q == q + p);
      CHECK((p + q) + r == p + (q + r));
      CHECK(p * q == q * p);
      CHECK((p * q) * r == p * (q * r));
      CHECK(p * (q + r) == p * q + p * r);
      CHECK(p + (-p) == LaurentPolynomial(rank));
    }
  }
}

TEST_CASE("mul agrees with a schoolbook product") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t rank = 1 + trial % 3;
    auto p = oracle::random_polynomial(rng, rank, 12, -6, 6);
    auto q = oracle::random_polynomial(rng, rank, 12, -6, 6);
    CHECK(oracle::from(p * q) == oracle::mul(oracle::from(p), oracle::from(q)));
  }
}

TEST_CASE("evaluate_at_ones is a ring homomorphism") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = oracle::random_polynomial(rng, 2);
    auto q = oracle::random_polynomial(rng, 2);
    CHECK((p * q).evaluate_at_ones() == p.evaluate_at_ones() * q.evaluate_at_ones());
    CHECK((p + q).evaluate_at_ones() == p.evaluate_at_ones() + q.evaluate_at_ones());
  }
}

TEST_CASE("pow matches repeated schoolbook multiplication") {
  auto chi = adjoint_character(3);
  auto expected = oracle::Poly{{{0, 0}, 1}};
  for (int n = 0; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(oracle::from(pow(chi, n)) == expected);
    expected = oracle::mul(expected, oracle::from(chi));
  }
  CHECK_THROWS_AS(pow(chi, -1), DomainError);
}

TEST_CASE("pow_with_target small cases") {
  auto su2 = adjoint_character(2);
  std::vector<WeightVector> zero1{WeightVector{0}};
  CHECK(coefficient_of(pow_with_target(su2, 0, zero1), WeightVector{0}) == 1);
  CHECK(coefficient_of(pow_with_target(su2, 2, zero1), WeightVector{0}) == 3);

  auto su3 = adjoint_character(3);
  std::vector<WeightVector> zero2{WeightVector{0, 0}};
  CHECK(coefficient_of(pow_with_target(su3, 2, zero2), WeightVector{0, 0}) == 10);

  CHECK_THROWS_AS(pow_with_target(su3, -1, zero2), DomainError);
}

TEST_CASE("pow_with_target keeps every target coefficient exact") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t rank = 1 + trial % 3;
    auto base = oracle::random_polynomial(rng, rank, 5, -2, 2);
    if (base.is_zero()) continue;
    int n = trial % 6;
    auto full = oracle::pow(oracle::from(base), n, rank);

    std::vector<WeightVector> targets;
    std::uniform_int_distribution<int> coord(-2 * n - 1, 2 * n + 1);
    for (int t = 0; t < 4; ++t) {
      std::vector<int> e(rank);
      for (auto& x : e) x = coord(rng);
      targets.emplace_back(std::move(e));
    }
    auto pruned = pow_with_target(base, n, targets);
    for (const auto& t : targets) {
      CAPTURE(t.to_string());
      auto it = full.find(oracle::Exponent(t.entries().begin(), t.entries().end()));
      BigInt expected = it == full.end() ? BigInt(0) : it->second;
      CHECK(coefficient_of(pruned, t) == expected);
    }
  }
}

TEST_CASE("pow_with_target on adjoint characters over a full box of targets") {
  for (int group = 2; group <= 3; ++group) {
    auto chi = adjoint_character(group);
    const std::size_t rank = static_cast<std::size_t>(group - 1);
    std::vector<WeightVector> targets;
    for (int a = -4; a <= 4; ++a) {
      if (rank == 1) {
        targets.push_back(WeightVector{a});
        continue;
      }
      for (int b = -4; b <= 4; ++b) targets.push_back(WeightVector{a, b});
    }
    auto full = oracle::Poly{{oracle::Exponent(rank, 0), 1}};
    for (int n = 0; n <= 6; ++n) {
      CAPTURE(group);
      CAPTURE(n);
      auto pruned = pow_with_target(chi, n, targets);
      for (const auto& t : targets) {
        auto it = full.find(oracle::Exponent(t.entries().begin(), t.entries().end()));
        CHECK(coefficient_of(pruned, t) == (it == full.end() ? BigInt(0) : it->second));
      }
      full = oracle::mul(full, oracle::from(chi));
    }
  }
}

TEST_CASE("product_with_target over mixed factors") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rank = 2;
    std::vector<LaurentPolynomial> factors;
    for (int k = 0; k < 4; ++k) factors.push_back(oracle::random_polynomial(rng, rank, 5, -3, 3));
    oracle::Poly full{{oracle::Exponent(rank, 0), 1}};
    for (const auto& f : factors) full = oracle::mul(full, oracle::from(f));

    std::vector<std::reference_wrapper<const LaurentPolynomial>> refs(factors.begin(),
                                                                       factors.end());
    std::vector<WeightVector> targets{{0, 0}, {1, -1}, {-3, 2}};
    auto pruned = product_with_target(refs, targets, rank);
    for (const auto& t : targets) {
      auto it = full.find(oracle::Exponent(t.entries().begin(), t.entries().end()));
      CHECK(coefficient_of(pruned, t) == (it == full.end() ? BigInt(0) : it->second));
    }
  }
}

TEST_CASE("power_coefficient_sequence matches individual powers") {
  auto chi = adjoint_character(3);
  std::vector<WeightVector> targets{{0, 0}, {1, -2}, {-3, 0}, {-2, -2}};
  auto seq = power_coefficient_sequence(chi, 7, targets);
  REQUIRE(seq.size() == 8);
  for (int n = 0; n <= 7; ++n) {
    auto full = pow(chi, n);
    for (std::size_t t = 0; t < targets.size(); ++t) {
      CHECK(seq[static_cast<std::size_t>(n)][t] == coefficient_of(full, targets[t]));
    }
  }
}

TEST_CASE("exponents beyond 64-bit packing fall back transparently") {
  // Spread exponents wide enough that the packed key cannot hold them.
  LaurentPolynomial p(6);
  p.add_term(WeightVector{1'000'000, 0, 0, 0, 0, -1'000'000}, 1);
  p.add_term(WeightVector{-1'000'000, 0, 0, 0, 0, 1'000'000}, 1);
  p.add_term(WeightVector::zero(6), 1);
  std::vector<WeightVector> zero{WeightVector::zero(6)};
  // (a + 1/a + 1)^4 constant term: sum over k of 4!/(k! k! (4-2k)!) = 1 + 12 + 6 = 19.
  CHECK(coefficient_of(pow_with_target(p, 4, zero), zero[0]) == 19);
  CHECK(coefficient_of(pow(p, 4), zero[0]) == 19);
}

TEST_CASE("to_string") {
  CHECK(LaurentPolynomial(1).to_string() == "0");
  auto s = poly1({{0, 1}, {2, -1}}).to_string();
  CHECK(s.find("z1^2") != std::string::npos);
}
