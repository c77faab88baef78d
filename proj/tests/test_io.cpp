#include <doctest.h>

#include "support.hpp"
#include "thp/errors.hpp"
#include "thp/io.hpp"
#include "thp/thcore.hpp"

using namespace thp;
using test_support::gf;
using test_support::q;
using test_support::worked_example;
using test_support::write_scratch_file;

namespace {

const char* kWorkedExampleText = R"({
  "field": "rational",
  "theta": ["0", "1", "2"],
  "theta_star": ["0", "1", "2"],
  "phi": ["1", "1"]
})";

}  // namespace

TEST_CASE("parameter arrays round-trip through JSON byte-identically") {
  ParameterArray p = param_array_from_json_text(kWorkedExampleText);
  CHECK(p == worked_example());
  std::string text = param_array_to_json_text(p);
  ParameterArray p2 = param_array_from_json_text(text);
  CHECK(p2 == p);
  CHECK(param_array_to_json_text(p2) == text);
}

TEST_CASE("matrix pairs round-trip through JSON") {
  THSystem s = build_canonical_system(worked_example());
  MatrixPair pair{s.A, s.A_star};
  std::string text = pair_to_json_text(pair);
  MatrixPair pair2 = pair_from_json_text(text);
  CHECK(pair2.A == s.A);
  CHECK(pair2.A_star == s.A_star);
  CHECK(json_text_is_pair_file(text));
  CHECK(!json_text_is_pair_file(kWorkedExampleText));
}

TEST_CASE("prime-field documents carry the gf spelling") {
  FieldSpec G = FieldSpec::prime(7);
  ParameterArray p;
  p.field = G;
  p.theta = {gf(0, G), gf(1, G)};
  p.theta_star = {gf(2, G), gf(3, G)};
  p.phi = {gf(6, G)};
  std::string text = param_array_to_json_text(p);
  CHECK(text.find("\"gf:7\"") != std::string::npos);
  CHECK(param_array_from_json_text(text) == p);
}

TEST_CASE("parsing is strict about structure") {
  auto bad = [](const char* text) {
    CHECK_THROWS_AS((void)param_array_from_json_text(text), ParseError);
  };
  bad("not json at all");
  bad("[1,2,3]");  // not an object
  bad(R"({"field":"rational","theta":["0"],"theta_star":["0"],"phi":[],"extra":1})");
  bad(R"({"field":"rational","theta":["0"],"theta_star":["0"]})");  // missing phi
  bad(R"({"field":"rational","theta":[0],"theta_star":["0"],"phi":[]})");  // number
  bad(R"({"field":"rational","theta":["x"],"theta_star":["0"],"phi":[]})");
  bad(R"({"field":"rational","theta":"0","theta_star":["0"],"phi":[]})");
  bad(R"({"field":"gf:4","theta":["0"],"theta_star":["0"],"phi":[]})");
  bad(R"({"field":7,"theta":["0"],"theta_star":["0"],"phi":[]})");

  auto bad_pair = [](const char* text) {
    CHECK_THROWS_AS((void)pair_from_json_text(text), ParseError);
  };
  bad_pair(R"({"field":"rational","A":[["1","0"],["1"]],"A_star":[["1","0"],["0","1"]]})");
  bad_pair(R"({"field":"rational","A":[["1","0"]],"A_star":[["1"]]})");  // not square
  bad_pair(R"({"field":"rational","A":[["1"]],"A_star":[["1","0"],["0","1"]]})");
  bad_pair(R"({"field":"rational","A":[],"A_star":[]})");  // empty
  bad_pair(R"({"field":"rational","A":[["1"]],"A_star":[["1"]],"phi":[]})");

  CHECK_THROWS_AS((void)json_text_is_pair_file(R"({"alpha":1})"), ParseError);
}

TEST_CASE("length mismatches parse fine and fail validation instead") {
  ParameterArray p = param_array_from_json_text(
      R"({"field":"rational","theta":["0","1"],"theta_star":["2","3"],"phi":[]})");
  ValidationReport v = validate(p);
  CHECK(!v.ok);
  CHECK(v.detail == "phi has 0 entries; expected 1");
}

TEST_CASE("file helpers read back what they wrote and reject bad paths") {
  std::string text = param_array_to_json_text(worked_example());
  std::string path = write_scratch_file("io_roundtrip.json", text);
  CHECK(read_text_file(path) == text);
  write_text_file(path, "x");
  CHECK(read_text_file(path) == "x");
  CHECK_THROWS_AS((void)read_text_file("/nonexistent-dir/missing.json"),
                  ParseError);
  CHECK_THROWS_AS((void)write_text_file("/nonexistent-dir/out.json", "x"),
                  ParseError);
}

TEST_CASE("string conversion helpers use canonical scalar text") {
  THSystem s = build_canonical_system(worked_example());
  auto rows = matrix_to_strings(s.E[0]);
  REQUIRE(rows.size() == 3);
  CHECK(rows[2][0] == "1/2");
  CHECK(rows[2][1] == "-1");
  CHECK(rows[0][0] == "0");
  auto strs = scalars_to_strings({q(1, 2), q(-3)});
  CHECK(strs == std::vector<std::string>{"1/2", "-3"});
}
