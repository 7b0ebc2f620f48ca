#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "skg/vertex.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "skg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = skg::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("gen") {
  const Result r = invoke({"gen", "--n", "9", "--k", "3", "--s", "2"});
  CHECK(r.code == 0);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 30);
  CHECK(out.front() == "000101010");
  CHECK(std::set<std::string>(out.begin(), out.end()).size() == 30);
  const skg::Params params(9, 3, 2);
  for (const auto& line : out) CHECK_NOTHROW(skg::Vertex::from_bits(params, line));

  const Result sets = invoke({"gen", "--n", "9", "--k", "3", "--s", "2", "--format", "sets", "--limit", "1"});
  CHECK(sets.code == 0);
  CHECK(sets.out == "4,6,8\n");

  const Result started = invoke({"gen", "--n", "9", "--k", "3", "--s", "2", "--start", "010000101", "--limit", "2"});
  CHECK(lines(started.out).front() == "010000101");

  CHECK(invoke({"gen", "--n", "9", "--k", "3", "--s", "2"}).out == r.out);
}

TEST_CASE("gen rejects bad input") {
  const Result r = invoke({"gen", "--n", "6", "--k", "3", "--s", "2"});
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("n must be at least") != std::string::npos);
  CHECK(invoke({"gen", "--n", "9", "--k", "3", "--s", "2", "--limit", "0"}).code == 1);
  CHECK(invoke({"gen", "--n", "9", "--k", "3", "--s", "2", "--format", "hex"}).code == 1);
  CHECK(invoke({"gen", "--n", "9", "--k", "3", "--s", "2", "--start", "110000001"}).code == 1);
  CHECK(invoke({"gen", "--n", "9", "--k", "3"}).code == 1);
  CHECK(invoke({}).code == 1);
}

TEST_CASE("verify") {
  const Result r = invoke({"verify", "--n", "9", "--k", "3", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("vertex_count 30") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  const Result r15 = invoke({"verify", "--n", "15", "--k", "6", "--s", "2"});
  CHECK(r15.code == 0);
  CHECK(r15.out.find("vertex_count 140") != std::string::npos);

  const Result big = invoke({"verify", "--n", "60", "--k", "12", "--s", "2"});
  CHECK(big.code == 1);
  CHECK(big.err.find("too large") != std::string::npos);
}

TEST_CASE("count") {
  CHECK(invoke({"count", "--n", "9", "--k", "3", "--s", "2"}).out == "30\n");
  CHECK(invoke({"count", "--n", "17", "--k", "7", "--s", "2"}).out == "204\n");
  CHECK(invoke({"count", "--n", "28", "--k", "5", "--s", "5"}).out == "196\n");
  const Result large = invoke({"count", "--n", "200", "--k", "40", "--s", "3"});
  CHECK(large.code == 0);
  CHECK(large.out.size() > 20);
  CHECK(invoke({"count", "--n", "5", "--k", "3", "--s", "2"}).code == 1);
}

TEST_CASE("bench") {
  const Result r = invoke({"bench", "--n", "100", "--k", "25", "--s", "2", "--steps", "1000"});
  CHECK(r.code == 0);
  CHECK(r.out.find("mean_ns_per_vertex ") != std::string::npos);
  CHECK(invoke({"bench", "--n", "100", "--k", "25", "--s", "2", "--steps", "0"}).code == 1);
  CHECK(invoke({"bench", "--steps", "0"}).code == 1);
}
