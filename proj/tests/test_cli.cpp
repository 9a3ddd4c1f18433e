#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dascent/cli.hpp"
#include "dascent/tables.hpp"

using namespace dascent;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate") {
  RunResult r = run({"enumerate", "ascseq", "--d", "0", "--n", "3"});
  CHECK(r.code == 0);
  CHECK(r.out == "111\n112\n121\n122\n123\n");

  r = run({"enumerate", "ascseq", "--d", "0", "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "\n");  // the empty word prints as an empty line

  RunResult filter =
      run({"enumerate", "selfmod", "--d", "2", "--n", "6", "--method", "filter"});
  RunResult blocks = run({"enumerate", "selfmod", "--d", "2", "--n", "6"});
  CHECK(filter.code == 0);
  CHECK(filter.out == blocks.out);

  r = run({"enumerate", "rset", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "11\n12\n");

  CHECK(run({"enumerate", "rset", "--n", "2", "--d", "1"}).code == 2);
  CHECK(run({"enumerate", "ascseq", "--n", "2"}).code == 2);  // missing --d
  CHECK(run({"enumerate", "ascseq", "--d", "0", "--n", "2", "--method",
             "blocks"}).code == 2);
  CHECK(run({"enumerate", "nosuch", "--n", "2"}).code == 2);
}

TEST_CASE("hat") {
  RunResult r = run({"hat", "--d", "2", "--word", "1124253"});
  CHECK(r.code == 0);
  CHECK(r.out == "3124253\n");

  r = run({"hat", "--d", "2", "--word", "3124253", "--invert"});
  CHECK(r.out == "1124253\n");

  r = run({"hat", "--d", "1", "--word", "11312", "--trace"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "alpha            = 11312\n"
        "M(alpha,1)       = [1]1312\n"
        "M(alpha,1,2)     = 2[1]312\n"
        "M(alpha,1,2,3)   = 21[3]12\n"
        "M(alpha,1,2,3,5) = 3141[2]\n");

  CHECK(run({"hat", "--d", "1", "--word", "11312", "--trace", "--invert"})
            .code == 2);
  RunResult bad = run({"hat", "--d", "0", "--word", "21"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error:") == 0);
  CHECK(run({"hat", "--word", "11"}).code == 2);  // missing --d
}

TEST_CASE("transpose") {
  RunResult r = run({"transpose", "--top", "123456789", "--bottom", "141252232"});
  CHECK(r.code == 0);
  CHECK(r.out == "112222345\n319764825\n");

  r = run({"transpose", "--top", "1234567", "--bottom", "3124253"});
  CHECK(r.out == "1223345\n2537146\n");

  CHECK(run({"transpose", "--top", "21", "--bottom", "12"}).code == 2);
}

TEST_CASE("phi and activity") {
  CHECK(run({"phi", "--d", "2", "--word", "1124253"}).out == "2537146\n");
  CHECK(run({"phi", "--d", "0", "--word", "121"}).out == "312\n");

  RunResult r = run({"activity", "--d", "2", "--perm", "2573164"});
  CHECK(r.out == "active: 1,2,3,4,6\ninactive: 5,7\n");
  r = run({"activity", "--d", "0", "--perm", "1"});
  CHECK(r.out == "active: 1\ninactive:\n");
  CHECK(run({"activity", "--d", "0", "--perm", "11"}).code == 2);
}

TEST_CASE("check") {
  RunResult r = run({"check", "--pattern", "f", "--perm", "2573164"});
  CHECK(r.code == 0);
  CHECK(r.out == "true\n");

  r = run({"check", "--pattern", "f", "--perm", "2573164", "--witness"});
  CHECK(r.out == "true\nwitness: (1,2,5)\n");

  r = run({"check", "--pattern", "f_d", "--d", "2", "--perm", "2573164",
           "--witness"});
  CHECK(r.out == "true\nwitness: (2,3,7)\n");

  CHECK(run({"check", "--pattern", "s_d", "--d", "0", "--perm", "21"}).out ==
        "false\n");
  CHECK(run({"check", "--pattern", "s_d", "--d", "1", "--perm", "21"}).out ==
        "true\n");
  CHECK(run({"check", "--pattern", "barred", "--perm", "231"}).out == "true\n");
  CHECK(run({"check", "--pattern", "barred", "--perm", "31524"}).out ==
        "false\n");
  CHECK(run({"check", "--pattern", "classical:213", "--perm", "312"}).out ==
        "false\n");
  r = run({"check", "--pattern", "classical:21", "--perm", "312", "--witness"});
  CHECK(r.out == "true\nwitness: (1,2)\n");

  CHECK(run({"check", "--pattern", "f_d", "--perm", "21"}).code == 2);
  CHECK(run({"check", "--pattern", "zigzag", "--perm", "21"}).code == 2);
}

TEST_CASE("gf") {
  CHECK(run({"gf", "fib", "--d", "2", "--n", "6"}).out ==
        "1 + 5x + 6x^2 + x^3\n");
  CHECK(run({"gf", "des", "--d", "1", "--n", "3"}).out == "1 + q\n");
  CHECK(run({"gf", "k", "--d", "2", "--n", "2"}).out == "x\n");
  CHECK(run({"gf", "fibotorial", "--d", "2", "--n", "3"}).out ==
        "1 + 3x + 2x^2\n");

  RunResult r = run({"gf", "self", "--d", "2", "--trunc", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("x^4: q^3 + q^4") != std::string::npos);

  CHECK(run({"gf", "fib", "--d", "0", "--n", "5"}).code == 2);  // needs --trunc
  CHECK(run({"gf", "limit", "--trunc", "3", "--d", "1"}).code == 2);
  CHECK(run({"gf", "self", "--d", "2"}).code == 2);  // needs --trunc

  r = run({"gf", "fib", "--d", "2", "--n", "6", "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  nlohmann::json expected = nlohmann::json::array();
  expected.push_back({{"exp", 0}, {"coef", 1}});
  expected.push_back({{"exp", 1}, {"coef", 5}});
  expected.push_back({{"exp", 2}, {"coef", 6}});
  expected.push_back({{"exp", 3}, {"coef", 1}});
  CHECK(j == expected);

  r = run({"gf", "self", "--d", "2", "--trunc", "4", "--format", "json"});
  j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 5);
  CHECK(j[4]["x"] == 4);
  nlohmann::json q4 = nlohmann::json::array();
  q4.push_back({{"exp", 3}, {"coef", 1}});
  q4.push_back({{"exp", 4}, {"coef", 1}});
  CHECK(j[4]["q"] == q4);
}

TEST_CASE("verify") {
  RunResult r = run({"verify", "rgf_char", "--max-n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("rgf_char") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run({"verify", "kf_lemma", "--format", "json"});
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["name"] == "kf_lemma");
  CHECK(j[0]["pass"] == true);
  CHECK(j[0]["counterexample"] == "");

  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"verify", "table1", "--max-d", "7"}).code == 2);
}

TEST_CASE("table") {
  RunResult r = run({"table", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == table_csv(1, 6, 12));
  CHECK(r.out.substr(0, 4) == "d\\n,");

  r = run({"table", "2", "--max-d", "3", "--max-n", "5"});
  CHECK(r.out == table_csv(2, 3, 5));

  CHECK(run({"table", "3"}).code == 2);
}

TEST_CASE("usage") {
  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"hat", "--help"}).code == 0);
  CHECK(run({"hat", "--d", "1"}).code == 2);  // missing --word
}
