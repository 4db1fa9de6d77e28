#include <doctest.h>

#include <sstream>

#include "divexp/cli.hpp"

using namespace divexp;

namespace {

struct Result {
  int code;
  std::string text;
  Json json;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  const int code = cli::run(args, in, out);
  Result r{code, out.str(), nullptr};
  if (!r.text.empty() && r.text.front() == '{') r.json = Json::parse(r.text);
  return r;
}

void conforms(const Result& r, const std::string& subcommand) {
  const std::string pointer = r.code == 0 ? "/responses/" + subcommand : "/responses/error";
  const auto errors = cli_validator().validate(r.json, pointer);
  INFO(r.text);
  for (const auto& e : errors) INFO(e);
  CHECK(errors.empty());
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("exponents with points at infinity") {
    const auto r = call({"exponents", "--mult", "5,1,1,1", "--points", "inf,0,1,2"});
    REQUIRE(r.code == 0);
    CHECK(r.json["e1"] == 3);
    CHECK(r.json["e2"] == 5);
    CHECK(r.json["normalization"]["z"] == Json({"1", "1/2"}));
    conforms(r, "exponents");
  }

  TEST_CASE("every subcommand answers and conforms") {
    const std::vector<std::pair<std::string, std::vector<std::string>>> cases{
        {"exponents", {"exponents", "--mult", "3,3,1,1", "--z", "1,-1"}},
        {"classify", {"classify", "--mult", "2,2,2,2"}},
        {"det", {"det", "--mult", "3,3,1,1"}},
        {"d1", {"d1", "--mult", "3,2,2,1"}},
        {"degenerate", {"degenerate", "--mult", "3,3,1,1", "--z", "1,-1"}},
        {"degenerate", {"degenerate", "--mult", "3,3,1,1", "--points", "0,inf,1,2"}},
        {"scan", {"scan", "--mult", "3,3,1,1", "--grid-min", "-2", "--grid-max", "2"}},
        {"sigma", {"sigma", "--mr", "2", "--u", "5"}},
        {"leading-check", {"leading-check", "--mult", "2,2,2,2,2"}},
        {"schur-check", {"schur-check", "--mult", "4,4,1,1,1,1"}},
    };
    for (const auto& [name, args] : cases) {
      const auto r = call(args);
      INFO(name);
      CHECK(r.code == 0);
      conforms(r, name);
    }
  }

  TEST_CASE("documented examples") {
    const auto s = call({"sigma", "--mr", "2", "--u", "3"});
    CHECK(s.json["value"] == -4);
    CHECK(s.json["closed_form"] == -4);
    const auto s5 = call({"sigma", "--mr", "2", "--u", "5"});
    CHECK(s5.json["value"] == 6);
    CHECK(s5.json["recursion"] == 6);
    const auto d = call({"d1", "--mult", "3,2,2,1"});
    const std::string d1 = d.json["d1"];
    CHECK((d1 == "-2*z3 + z4" || d1 == "2*z3 - z4"));
    const auto sc = call({"schur-check", "--mult", "4,4,1,1,1,1"});
    CHECK(sc.json["match"] == true);
    CHECK(sc.json["lambda"] == Json({1, 2}));
    CHECK((sc.json["sign"] == 1 || sc.json["sign"] == -1));
    const auto deg = call({"degenerate", "--mult", "3,3,1,1", "--z", "1,2"});
    CHECK(deg.json["degenerate"] == false);
    CHECK(deg.json["witness"].is_null());
  }

  TEST_CASE("json input") {
    const auto a = call({"--json-in"}, R"({"subcommand":"classify","payload":{"mult":[5,1,1,1]}})");
    REQUIRE(a.code == 0);
    CHECK(a.json["tag"] == "Dominant");
    const auto b = call({"terao", "--json-in"}, R"({"lines":[["1","0","0"],["0","1","0"],["0","0","1"],["1","1","1"]]})");
    REQUIRE(b.code == 0);
    CHECK(b.json["guaranteed"] == true);
    conforms(b, "terao");
    const auto c = call({"exponents", "--json-in"}, R"({"mult":"2,2,2","points":["0","1","inf"]})");
    CHECK(c.code == 0);
    CHECK(c.json["e1"] == 3);
  }

  TEST_CASE("errors and exit codes") {
    const auto schema = call({"sigma", "--mr", "1", "--u", "3"});
    CHECK(schema.code == 2);
    CHECK(schema.json["error"] == "schema");
    conforms(schema, "sigma");
    const auto both = call({"exponents", "--mult", "3,3,1,1", "--z", "1,-1", "--points", "0,inf,1,-1"});
    CHECK(both.code == 2);
    const auto parse = call({"--json-in"}, "{not json");
    CHECK(parse.code == 2);
    CHECK(parse.json["error"] == "parse");
    const auto unknown = call({"frobnicate"});
    CHECK(unknown.code == 2);
    CHECK(unknown.json["error"] == "usage");
    const auto none = call({});
    CHECK(none.code == 2);
    const auto pre = call({"schur-check", "--mult", "4,2,1,1"});
    CHECK(pre.code == 1);
    CHECK(pre.json["error"] == "precondition");
    conforms(pre, "schur-check");
    const auto odd = call({"det", "--mult", "3,2,1,1"});
    CHECK(odd.code == 1);
    const auto bad = call({"exponents", "--mult", "1,2,1", "--z", "1"});
    CHECK(bad.code == 1);
    CHECK(bad.json["error"] == "invalid_argument");
    const auto dup = call({"exponents", "--mult", "1,1,1", "--points", "1,1,2"});
    CHECK(dup.code == 1);
    const auto missing = call({"terao", "--arrangement", "/nonexistent/file.json"});
    CHECK(missing.code == 2);
    const auto help = call({"--help"});
    CHECK(help.code == 0);
  }

  TEST_CASE("identical requests give identical bytes") {
    const std::vector<std::string> args{"exponents", "--mult", "3,2,2,1", "--points", "7/3,inf,-1,4"};
    CHECK(call(args).text == call(args).text);
    const std::vector<std::string> scan{"scan", "--mult", "3,2,2,1"};
    CHECK(call(scan).text == call(scan).text);
  }
}
