#include "doctest.h"

#include <fstream>
#include <sstream>

#include "paradromic/cli.hpp"

using namespace paradromic;
using cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const cli::Hooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = run(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("classify") {
  auto r = call({"classify", "--m", "3", "--n", "2", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["class"] == "PrimesDividing");
  CHECK(j["modulus"] == 3);
  CHECK(j["type"] == "T(3,2)");
  CHECK(j["determinant"] == "3");

  r = call({"classify", "--m", "3", "--n", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "P(3,3) type=T(3,2)+C components=2 class=NearlyInvisible determinant=2^1\n");

  r = call({"classify", "--m", "5", "--n", "1", "--format", "json"});
  const auto k = nlohmann::json::parse(r.out);
  CHECK(k["class"] == "Invisible");
  CHECK(k["determinant"] == "1");
  CHECK_FALSE(k.contains("modulus"));

  r = call({"classify", "--m", "3", "--n", "2", "--format", "csv"});
  CHECK(lines(r.out) == std::vector<std::string>{cli::kCsvHeader, "3,2,\"T(3,2)\",1,PrimesDividing,3,3"});
}

TEST_CASE("classify argument errors") {
  CHECK(call({"classify", "--m", "3"}).code == cli::kExitUsage);
  CHECK(call({"classify", "--m", "-1", "--n", "2"}).code == cli::kExitUsage);
  CHECK(call({"classify", "--m", "3", "--n", "0"}).code == cli::kExitUsage);
  CHECK(call({"classify", "--m", "3", "--n", "2", "--format", "xml"}).code == cli::kExitUsage);
  CHECK(call({"bogus"}).code == cli::kExitUsage);
  CHECK(call({}).code == cli::kExitUsage);
}

TEST_CASE("table") {
  auto r = call({"table", "--m", "0..4", "--n", "2..3", "--format", "csv"});
  CHECK(r.code == cli::kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == cli::kCsvHeader);
  CHECK(rows[1].rfind("0,2,", 0) == 0);
  CHECK(rows[5].rfind("4,2,", 0) == 0);
  CHECK(rows[6].rfind("0,3,", 0) == 0);
  CHECK(rows[3] == "2,2,\"T(2,2)\",2,PrimesDividing,2,2");
  CHECK(rows[6] == "0,3,\"T(0,3)\",3,Rainbow,,0");

  r = call({"table", "--m", "0..200", "--n", "1..100"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(call({"table", "--m", "4..2", "--n", "2"}).code == cli::kExitUsage);
  CHECK(call({"table", "--m", "a..b", "--n", "2"}).code == cli::kExitUsage);
}

TEST_CASE("table output is deterministic") {
  const std::vector<std::string> args{"table", "--m", "0..6", "--n", "1..5", "--format", "json"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("JSON records round-trip") {
  const auto r = call({"table", "--m", "0..6", "--n", "1..6", "--format", "json"});
  for (const auto& line : lines(r.out)) {
    const cli::OutputRecord rec = cli::record_from_json(nlohmann::json::parse(line));
    CHECK(cli::to_json(rec).dump() == line);
    CHECK(cli::record_from_json(cli::to_json(rec)) == rec);
  }
}

TEST_CASE("parse_range") {
  CHECK(cli::parse_range("3").lo == 3);
  CHECK(cli::parse_range("3").hi == 3);
  CHECK(cli::parse_range("0..4").hi == 4);
  CHECK_THROWS(cli::parse_range("5..1"));
  CHECK_THROWS(cli::parse_range(""));
  CHECK_THROWS(cli::parse_range("1..2..3"));
}

TEST_CASE("color") {
  auto r = call({"color", "--m", "3", "--n", "2", "--p", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "arc 0: 0\narc 1: 2\narc 2: 1\n");
  r = call({"color", "--m", "5", "--n", "2", "--p", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "none\n");
  r = call({"color", "--m", "2", "--n", "2", "--p", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out != "none\n");
  CHECK(call({"color", "--m", "3", "--n", "2", "--p", "4"}).code == cli::kExitUsage);
}

TEST_CASE("charpoly") {
  auto r = call({"charpoly", "--n", "3"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("-λ³+λ²-λ+1") != std::string::npos);
  CHECK(r.out.find("MATCH") != std::string::npos);
  r = call({"charpoly", "--n", "9"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("λ⁹") != std::string::npos);
  CHECK(call({"charpoly", "--n", "4"}).code == cli::kExitUsage);

  cli::Hooks broken;
  broken.transfer_s = [](std::size_t n) {
    IntMatrix s = transfer_S(n);
    s(0, 1) += 1;
    return s;
  };
  r = call({"charpoly", "--n", "5"}, broken);
  CHECK(r.code == cli::kExitCheckFailed);
  CHECK(r.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--max-m", "8", "--max-n", "7", "--primes", "2,3,5,7"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);

  cli::Hooks broken;
  broken.transfer_s = [](std::size_t n) {
    IntMatrix s = transfer_S(n);
    s(n - 1, 0) = 2;
    return s;
  };
  r = call({"verify", "--max-m", "4", "--max-n", "5"}, broken);
  CHECK(r.code == cli::kExitCheckFailed);
  CHECK(r.out.find("FAIL") != std::string::npos);

  CHECK(call({"verify", "--primes", "4"}).code == cli::kExitUsage);
  CHECK(call({"verify", "--primes", "x"}).code == cli::kExitUsage);
}

TEST_CASE("relations") {
  auto r = call({"relations", "--m", "3", "--n", "2"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == slurp(GOLDEN_DIR "/relations_3_2.txt"));
  r = call({"relations", "--m", "3", "--n", "3"});
  CHECK(r.out == slurp(GOLDEN_DIR "/relations_3_3.txt"));
  std::size_t crossings = 0;
  for (const auto& line : lines(r.out)) crossings += line.rfind("X ", 0) == 0;
  CHECK(crossings == 9);
  CHECK(call({"relations", "--m", "2", "--n", "5"}).out == slurp(GOLDEN_DIR "/relations_2_5.txt"));
  CHECK(call({"relations", "--m", "0", "--n", "1"}).out == "arcs 0 circles 1\n");
}

TEST_CASE("det") {
  CHECK(call({"det", "--torus", "5", "5"}).out == "16\n");
  CHECK(call({"det", "--torus", "3", "2"}).out == "3\n");
  CHECK(call({"det", "--paradrome", "2", "3"}).out == "4\n");
  CHECK(call({"det", "--paradrome", "0", "3"}).out == "0\n");
  CHECK(call({"det"}).code == cli::kExitUsage);
  CHECK(call({"det", "--torus", "3", "0"}).code == cli::kExitUsage);
}
