#include <doctest.h>

#include <sstream>

#include "cli.hpp"

using eacp::cli::run;
using nlohmann::json;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string sex_diff = R"({"n":1,"A":[["1"]],"b":["1"]})";
const std::string ac_example = R"({"n":2,"A":[["1","1"],["-1","-1"]],"b":["0","0"]})";
}  // namespace

TEST_CASE("parsing valid documents") {
  const auto doc = eacp::cli::parse_algebra(R"({"n":2,"A":[["1/2",3],["0","-1"]],"b":[1,"0"],"label":"x"})");
  CHECK(doc.n == 2);
  CHECK(doc.a[0][0] == eacp::Rational(1, 2));
  CHECK(doc.a[0][1] == eacp::Rational(3));
  CHECK(doc.label == "x");
  CHECK(eacp::cli::parse_algebras("[" + sex_diff + "," + ac_example + "]").size() == 2);
  CHECK(eacp::cli::parse_algebra(sex_diff).digest() ==
        eacp::cli::parse_algebra(R"({"n":1,"A":[[1]],"b":["2/2"],"label":"y"})").digest());
  CHECK(eacp::cli::parse_algebra(sex_diff).digest() !=
        eacp::cli::parse_algebra(ac_example).digest());
}

TEST_CASE("parse errors carry locations") {
  auto location = [](const std::string& text) {
    try {
      (void)eacp::cli::parse_algebra(text);
    } catch (const eacp::cli::ParseError& e) {
      return e.location();
    }
    return std::string("no error");
  };
  CHECK(location(R"({"n":1,"A":[["1/0"]],"b":["1"]})") == "/A/0/0");
  CHECK(location(R"({"n":1,"A":[[1.5]],"b":["1"]})") == "/A/0/0");
  CHECK(location(R"({"n":2,"A":[["1","0"],["1"]],"b":["1","0"]})") == "/A/1");
  CHECK(location(R"({"n":2,"A":[["1","0"],["0","1"]],"b":["1"]})") == "/b");
  CHECK(location(R"({"n":0,"A":[],"b":[]})") == "/n");
  CHECK(location(R"({"A":[["1"]],"b":["1"]})") == "/n");
  CHECK(location("{\"n\":1,\n\"A\":[[\"1\"]]\n\"b\":[\"1\"]}").rfind("line 3, column ", 0) == 0);
  CHECK(location("[" + sex_diff + ",{\"n\":1,\"A\":[[\"x\"]],\"b\":[\"1\"]}]") == "/1/A/0/0");
  CHECK_THROWS_AS((void)eacp::cli::parse_algebra("[" + sex_diff + "," + sex_diff + "]"),
                  eacp::cli::ParseError);
}

TEST_CASE("classify example") {
  const auto r = call({"classify", "--format", "machine"},
                      R"({"n":2,"A":[["0","1"],["0","0"]],"b":["0","0"]})");
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["label"] == "Dim3_C2");
  CHECK(j["results"]["verified"] == true);
  CHECK(j["command"] == "classify");
}

TEST_CASE("idempotents example") {
  const auto r = call({"idempotents", "--format", "machine"}, sex_diff);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["isolated_idempotents"] == json::parse(R"([["0","0"],["1","1"]])"));
  CHECK(j["results"]["det_poly"] == "u - 1");
}

TEST_CASE("analyze example") {
  const auto r = call({"analyze", "--format", "machine", "--seed", "5"}, ac_example);
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["results"]["identities"]["associative"]["holds"] == true);
  CHECK(j["results"]["indices"]["nilpotency"] == 3);
  CHECK(j["results"]["unital"] == false);
  CHECK(j["results"]["division_witness"]["confirmed_unsolvable"] == true);
  CHECK(j["options"]["seed"] == 5);
}

TEST_CASE("machine output is reproducible and re-parseable") {
  const std::vector<std::string> args = {"analyze", "--format", "machine", "--seed", "9"};
  const auto one = call(args, sex_diff);
  const auto two = call(args, sex_diff);
  REQUIRE(one.code == 0);
  CHECK(one.out == two.out);
  const auto again = call(args, one.out);
  REQUIRE(again.code == 0);
  CHECK(again.out == one.out);
  const auto batch = call(args, "[" + sex_diff + "," + ac_example + "]");
  REQUIRE(batch.code == 0);
  const json arr = json::parse(batch.out);
  REQUIRE(arr.is_array());
  CHECK(arr.size() == 2);
  CHECK(arr[0] == json::parse(one.out));
}

TEST_CASE("text output and the remaining commands") {
  for (const char* cmd : {"analyze", "idempotents", "nilpotents", "classify", "centroid", "operators"}) {
    CAPTURE(cmd);
    const auto r = call({cmd}, ac_example);
    CHECK(r.code == 0);
    CHECK(r.out.find("command: " + std::string(cmd)) == 0);
  }
  const auto t = call({"trajectory", "--init", "2,1", "--steps", "3", "--format", "machine"}, sex_diff);
  REQUIRE(t.code == 0);
  const json j = json::parse(t.out);
  CHECK(j["results"]["points"][2] == json::parse(R"(["4","4"])"));
  CHECK(j["results"]["status"] == "budget_exhausted");
  const auto f = call({"trajectory", "--init", "1,1", "--mode", "float", "--format", "machine"}, sex_diff);
  REQUIRE(f.code == 0);
  const json jf = json::parse(f.out);
  CHECK(jf["results"]["mode"] == "float");
  CHECK(jf["results"]["numeric"] == "binary64");
  CHECK(jf["results"]["status"] == "fixed_point");
}

TEST_CASE("input errors exit with 1") {
  CHECK(call({"classify"}, R"({"n":1,"A":[["1/0"]],"b":["1"]})").code == 1);
  CHECK(call({"classify"}, "not json").code == 1);
  CHECK(call({"frobnicate"}, sex_diff).code == 1);
  CHECK(call({}, sex_diff).code == 1);
  CHECK(call({"trajectory", "--init", "1,2,3"}, sex_diff).code == 1);
  CHECK(call({"trajectory"}, sex_diff).code == 1);
  CHECK(call({"classify", "--input", "/nonexistent/file.json"}, "").code == 1);
  const auto bad = call({"classify"}, R"({"n":1,"A":[["1/0"]],"b":["1"]})");
  CHECK(bad.err.find("/A/0/0") != std::string::npos);
}

TEST_CASE("exit code mapping") {
  CHECK(eacp::cli::exit_code_for(eacp::InternalInconsistency("x")) == 2);
  CHECK(eacp::cli::exit_code_for(eacp::DimensionError("x")) == 1);
  CHECK(eacp::cli::exit_code_for(std::runtime_error("x")) == 1);
}
