#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "singlets/characters.hpp"
#include "singlets/errors.hpp"
#include "singlets/serialization.hpp"
#include "support/oracle.hpp"

using namespace singlets;

TEST_CASE("polynomial JSON layout") {
  LaurentPolynomial p(1);
  p.add_term({2}, -1);
  p.add_term({0}, 1);
  CHECK(polynomial_to_json(p) == R"json({"rank":1,"terms":[{"e":[0],"c":"1"},{"e":[2],"c":"-1"}]})json");
}

TEST_CASE("polynomial JSON round trip") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    auto p = oracle::random_polynomial(rng, 1 + trial % 4, 10, -50, 50);
    p = p * p * p;
    auto text = polynomial_to_json(p);
    auto back = polynomial_from_json(text);
    CHECK(back == p);
    CHECK(polynomial_to_json(back) == text);
  }
  // Coefficients far beyond 64 bits.
  auto big = LaurentPolynomial::monomial(WeightVector{1, -1}, BigInt("123456789012345678901234567890"));
  CHECK(polynomial_from_json(polynomial_to_json(big)) == big);
}

TEST_CASE("polynomial JSON errors") {
  CHECK_THROWS_AS(polynomial_from_json("not json"), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(R"json({"terms":[]})json"), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(R"json({"rank":2,"terms":[{"e":[1],"c":"1"}]})json"), FormatError);
  CHECK_THROWS_AS(polynomial_from_json(R"json({"rank":1,"terms":[{"e":[1],"c":"x"}]})json"), FormatError);
}

TEST_CASE("character spec JSON") {
  auto spec = adjoint_weights(3);
  auto text = character_spec_to_json(spec);
  auto back = character_spec_from_json(text);
  CHECK(back.rank == spec.rank);
  CHECK(back.weights == spec.weights);
  CHECK(back.label == spec.label);
  CHECK(character_spec_to_json(back) == text);

  auto plain = character_spec_from_json(R"json({"rank":1,"weights":[{"w":[1],"m":1},{"w":[-1],"m":"1"}]})json");
  CHECK(character_from_weights(plain) == fundamental_character(2));

  CHECK_THROWS_AS(character_spec_from_json(R"json({"rank":1,"weights":[]})json"), FormatError);
  CHECK_THROWS_AS(character_spec_from_json(R"json({"rank":1,"weights":[{"w":[0],"m":0}]})json"), FormatError);
  CHECK_THROWS_AS(character_spec_from_json(R"json({"rank":2,"weights":[{"w":[0],"m":1}]})json"), FormatError);
}

TEST_CASE("weight files") {
  auto path = std::filesystem::temp_directory_path() / "singlets_weights_test.json";
  {
    std::ofstream out(path);
    out << character_spec_to_json(adjoint_weights(4));
  }
  auto spec = load_weight_file(path);
  CHECK(character_from_weights(spec) == adjoint_character(4));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_weight_file(path), FormatError);
}

TEST_CASE("dimension records") {
  DimensionRecord r{"SU(3)", "adjoint", 8, 3598};
  auto text = dimension_record_to_json(r);
  CHECK(text == R"json({"group":"SU(3)","rep":"adjoint","n":8,"dimension":"3598"})json");
  CHECK(dimension_record_from_json(text) == r);
  CHECK_THROWS_AS(dimension_record_from_json(R"json({"group":"SU(3)"})json"), FormatError);
}

TEST_CASE("check reports") {
  CheckReport pass;
  pass.check = "a4";
  pass.range_begin = 0;
  pass.range_end = 100;
  pass.passed = true;
  pass.detail = "not serialized";
  auto text = check_report_to_json(pass);
  CHECK(text == R"json({"check":"a4","range":[0,100],"status":"pass"})json");
  auto back = check_report_from_json(text);
  CHECK(back.passed);
  CHECK(back.check == "a4");
  CHECK(back.range_end == 100);
  CHECK(check_report_to_json(back) == text);

  CheckReport fail = pass;
  fail.passed = false;
  fail.first_violation = 17;
  text = check_report_to_json(fail);
  CHECK(text == R"json({"check":"a4","range":[0,100],"status":"fail","first_violation":17})json");
  CHECK(check_report_to_json(check_report_from_json(text)) == text);
  CHECK_THROWS_AS(check_report_from_json(R"json({"check":"a4","range":[0,1],"status":"meh"})json"), FormatError);
}

TEST_CASE("b-files") {
  std::vector<BigInt> terms{1, 0, 1, 1, 3};
  std::ostringstream out;
  write_bfile(out, terms);
  CHECK(out.str() == "0 1\n1 0\n2 1\n3 1\n4 3\n");
  std::ostringstream shifted;
  write_bfile(shifted, std::span<const BigInt>(terms).subspan(2), 2);
  CHECK(shifted.str() == "2 1\n3 1\n4 3\n");
}

TEST_CASE("decimal parsing") {
  CHECK(parse_decimal("-42") == -42);
  CHECK(to_decimal(parse_decimal("98765432109876543210")) == "98765432109876543210");
  CHECK_THROWS_AS(parse_decimal(""), FormatError);
  CHECK_THROWS_AS(parse_decimal("12a"), FormatError);
  CHECK(to_string(Rational(-7, 3)) == "-7/3");
  CHECK(to_string(Rational(4)) == "4");
}
