#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "singlets/characters.hpp"
#include "singlets/errors.hpp"
#include "singlets/serialization.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = singlets::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("parse_int_list") {
  using singlets::cli::parse_int_list;
  CHECK(parse_int_list("2..5") == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_int_list("2,3,7") == std::vector<int>{2, 3, 7});
  CHECK(parse_int_list("4") == std::vector<int>{4});
  CHECK_THROWS_AS(parse_int_list("5..2"), singlets::FormatError);
  CHECK_THROWS_AS(parse_int_list("a"), singlets::FormatError);
}

TEST_CASE("dim") {
  CHECK(run({"dim", "--group", "3", "--rep", "adjoint", "--n", "8"}).out == "3598\n");
  CHECK(run({"dim", "--group", "2", "--rep", "adjoint", "--n", "0"}).out == "1\n");
  CHECK(run({"dim", "--group", "3", "--rep", "fundamental", "--n", "3"}).out == "1\n");
  auto json = run({"dim", "--group", "3", "--n", "4", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out == "{\"group\":\"SU(3)\",\"rep\":\"adjoint\",\"n\":4,\"dimension\":\"8\"}\n");
}

TEST_CASE("dim with a weight file") {
  auto path = std::filesystem::temp_directory_path() / "singlets_cli_adj.json";
  {
    std::ofstream out(path);
    out << singlets::character_spec_to_json(singlets::adjoint_weights(3));
  }
  CHECK(run({"dim", "--group", "3", "--rep", "weights-file", path.string(), "--n", "2"}).out == "1\n");
  CHECK(run({"dim", "--group", "3", "--rep", "weights-file", "--weights", path.string(), "--n", "4"}).out ==
        "8\n");

  auto mismatch = run({"dim", "--group", "4", "--rep", "weights-file", path.string(), "--n", "2"});
  CHECK(mismatch.code != 0);
  CHECK(mismatch.err.find("error:") != std::string::npos);

  std::filesystem::remove(path);
  auto missing = run({"dim", "--group", "3", "--rep", "weights-file", path.string(), "--n", "2"});
  CHECK(missing.code != 0);
  CHECK_FALSE(missing.err.empty());
}

TEST_CASE("config validation") {
  CHECK(run({"dim", "--group", "1", "--n", "2"}).code != 0);
  CHECK(run({"dim", "--group", "3", "--n", "-1"}).code != 0);
  CHECK(run({"dim", "--group", "3"}).code != 0);
  CHECK(run({"dim", "--group", "3", "--n", "2", "--format", "csv"}).code != 0);
  CHECK(run({"table", "--format", "bfile"}).code != 0);
  CHECK(run({"verify", "nonsense"}).code != 0);
  CHECK(run({"sequence", "nonsense"}).code != 0);
  CHECK(run({"dim", "--group", "3", "--n", "2", "--rep", "fundamental", "extra"}).code != 0);
  CHECK(run({}).code != 0);
}

TEST_CASE("table") {
  auto csv = run({"table", "--groups", "2..7", "--powers", "2..8", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(lines(csv.out) == std::vector<std::string>{
                              "n,SU(2),SU(3),SU(4),SU(5),SU(6),SU(7),SU(inf)",
                              "2,1,1,1,1,1,1,1",
                              "3,1,2,2,2,2,2,2",
                              "4,3,8,9,9,9,9,9",
                              "5,6,32,43,44,44,44,44",
                              "6,15,145,245,264,265,265,265",
                              "7,36,702,1557,1824,1853,1854,1854",
                              "8,91,3598,10829,14210,14791,14832,14833",
                          });
  auto small = run({"table", "--groups", "2..2", "--powers", "2..4", "--format", "csv"});
  CHECK(lines(small.out) == std::vector<std::string>{"n,SU(2),SU(inf)", "2,1,1", "3,1,2", "4,3,9"});
}

TEST_CASE("table output does not depend on threads") {
  std::vector<std::string> base{"table", "--groups", "2..5", "--powers", "0..7", "--format", "json"};
  auto serial = base;
  serial.insert(serial.end(), {"--threads", "1"});
  auto parallel = base;
  parallel.insert(parallel.end(), {"--threads", "4"});
  auto a = run(serial);
  auto b = run(parallel);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == run(serial).out);
}

TEST_CASE("components") {
  auto csv = run({"components", "--max-n", "3", "--format", "csv"});
  CHECK(lines(csv.out) == std::vector<std::string>{"n,a1,a2,a3,a4,dimension", "0,1,0,0,0,1",
                                                   "1,2,1,0,0,0", "2,10,6,2,1,1", "3,56,39,18,12,2"});
  auto one = run({"components", "--n", "5", "--format", "json"});
  CHECK(one.out ==
        "{\"n\":5,\"a1\":\"2252\",\"a2\":\"1780\",\"a3\":\"1100\",\"a4\":\"860\",\"dimension\":\"32\"}\n");
}

TEST_CASE("sequence") {
  CHECK(run({"sequence", "derangement", "--max-n", "4"}).out == "0 1\n1 0\n2 1\n3 2\n4 9\n");
  CHECK(run({"sequence", "a3", "--max-n", "3"}).out == "0 0\n1 0\n2 2\n3 18\n");
  CHECK(run({"sequence", "dim", "--group", "2", "--max-n", "8"}).out ==
        run({"sequence", "su2-binomial", "--max-n", "8"}).out);
  CHECK(run({"sequence", "su2-ladder", "--max-n", "8"}).out ==
        run({"sequence", "su2-binomial", "--max-n", "8"}).out);
  auto text = run({"sequence", "a1", "--max-n", "2", "--format", "text"});
  CHECK(text.out == "0: 1\n1: 2\n2: 10\n");
  CHECK(run({"sequence", "a1", "--format", "csv"}).code != 0);
}

TEST_CASE("verify") {
  auto a4 = run({"verify", "a4", "--max-n", "100"});
  CHECK(a4.code == 0);
  CHECK(a4.out.rfind("PASS a4", 0) == 0);
  CHECK(run({"verify", "derangement"}).code == 0);
  CHECK(run({"verify", "ode-a1", "--order", "40"}).code == 0);
  auto json = run({"verify", "residues", "--format", "json"});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"status\":\"pass\"") != std::string::npos);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto& line : lines(run({"verify", "all", "--format", "json"}).out)) {
    CHECK(singlets::check_report_to_json(singlets::check_report_from_json(line)) == line);
  }
  for (const auto& line : lines(run({"table", "--groups", "2..4", "--powers", "0..6", "--format", "json"}).out)) {
    CHECK(singlets::dimension_record_to_json(singlets::dimension_record_from_json(line)) == line);
  }
  auto dim = run({"dim", "--group", "5", "--n", "6", "--format", "json"}).out;
  dim.pop_back();
  CHECK(singlets::dimension_record_to_json(singlets::dimension_record_from_json(dim)) == dim);
}

TEST_CASE("commands are deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "all", "--format", "json"},
           {"table", "--groups", "2..5", "--powers", "2..7"},
           {"components", "--max-n", "12"},
           {"sequence", "dim", "--group", "4", "--max-n", "10", "--format", "json"}}) {
    CHECK(run(args).out == run(args).out);
  }
}
