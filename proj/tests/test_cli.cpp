#include <catch_amalgamated.hpp>

#include <sstream>

#include "golden_runner.hpp"
#include "repstab/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = repstab::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(REPSTAB_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("hom counts through the command line") {
  CHECK(run({"hom", "--cat", "OI", "--d", "2", "--src", "1", "--tgt", "3", "--count"}).out == "12\n");
  CHECK(run({"hom", "--cat", "FI", "--d", "2", "--src", "1", "--tgt", "2", "--count"}).out == "4\n");
  CHECK(run({"hom", "--cat", "V", "--r", "2", "--src", "1,1", "--tgt", "2,2", "--count"}).out == "12\n");
  CHECK(run({"hom", "--cat", "V", "--r", "2", "--src", "2,1", "--tgt", "1,2", "--count"}).out == "0\n");
  auto listing = run({"hom", "--cat", "FI", "--d", "2", "--src", "1", "--tgt", "2"});
  CHECK(listing.code == 0);
  CHECK(std::count(listing.out.begin(), listing.out.end(), '\n') == 4);
}

TEST_CASE("generating function command") {
  auto r = run({"gf", "--n", "1", "--d", "1", "--gens", fixture("one_star.words")});
  CHECK(r.code == 0);
  CHECK(r.out == "t/(1 - t)\n");
}

TEST_CASE("exit codes") {
  auto mismatch = run({"compose", "--first", "@" + fixture("mismatch_first.json"), "--second",
                       "@" + fixture("mismatch_second.json")});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.find("composition domain mismatch") != std::string::npos);
  CHECK(run({"compose", "--first", "{", "--second", "{}"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"hom", "--cat", "XX", "--src", "1", "--tgt", "2"}).code == 2);
  CHECK(run({"encode", "--decode", "**", "--n", "1"}).code == 1);
  CHECK(run({"fit", "--counts", "1,2,4,8,16,32,64,128", "--window", "4"}).code == 1);
  CHECK(run({"fit", "--counts", "1,x"}).code == 2);
  CHECK(run({"member", "--n", "1", "--d", "1", "--gens", fixture("nonexistent.words"), "--word", "*"}).code == 2);
}

TEST_CASE("encode and decode") {
  CHECK(run({"encode", "--morphism", "@" + fixture("oi_phi.json")}).out == "1*2\n");
  CHECK(run({"encode", "--decode", "1*2", "--n", "1", "--d", "2"}).out ==
        "{\"cat\":\"OI\",\"d\":2,\"src\":1,\"tgt\":3,\"f\":[2],\"g\":{\"1\":1,\"3\":2}}\n");
}

TEST_CASE("golden transcripts are reproduced") {
  auto cases = golden::load(REPSTAB_GOLDEN, REPSTAB_FIXTURES);
  REQUIRE(cases.size() >= 10);
  for (const auto& c : cases) {
    INFO(c.name);
    CHECK(golden::run(c) == c.expected);
  }
}
