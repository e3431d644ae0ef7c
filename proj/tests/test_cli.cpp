#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "udeform/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = udeform::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::vector<std::string> strings(const nlohmann::json& a) { return a.get<std::vector<std::string>>(); }

void check_schema(const nlohmann::json& doc, const std::string& command) {
  REQUIRE(doc.is_object());
  CHECK(doc.size() == 4);
  CHECK(doc["command"] == command);
  CHECK(doc["input"].is_object());
  CHECK(doc["result"].is_object());
  CHECK(doc["version"].is_string());
}

}  // namespace

TEST_CASE("eval") {
  const auto doc = run_json({"eval", "--u", "p,1,1,0", "--x", "29/13"});
  check_schema(doc, "eval");
  CHECK(strings(doc["result"]["fx"]) == std::vector<std::string>{"1", "3", "6", "7", "7", "4", "1"});
  const auto num = run_json({"eval", "--u", "1,1,1,0", "--x", "17/31"});
  CHECK(strings(num["result"]["fx"]) == std::vector<std::string>{"17"});
  CHECK(strings(num["result"]["finv"]) == std::vector<std::string>{"31"});
  const auto con = run_json({"eval", "--u", "1,1,0,1", "--x", "9/4"});
  CHECK(strings(con["result"]["value"]["num"]) == std::vector<std::string>{"11"});
  CHECK(strings(con["result"]["value"]["den"]) == std::vector<std::string>{"8"});
  const auto text = run({"eval", "--u", "p,1,1,0", "--x", "7/5"});
  CHECK(text.out.find("(3p^2 + 3p + 1)/(2p^2 + 2p + 1)") != std::string::npos);
}

TEST_CASE("series") {
  const auto doc = run_json({"series", "--u", "p,1,0,1", "--x", "17/2", "--order", "8"});
  check_schema(doc, "series");
  CHECK(strings(doc["result"]["coefficients"]) ==
        std::vector<std::string>{"1", "-1", "13", "-65", "283", "-1233", "5465", "-24273", "107594"});
  const auto pi = run_json({"series", "--u", "p,1,1,0", "--const", "pi", "--order", "39"});
  CHECK(pi["result"]["coefficients"].back() == "4656");
  CHECK(pi["result"]["proved"] == true);
  CHECK(run({"series", "--u", "p,1,0,1", "--const", "e", "--order", "5"}).code == 1);
  CHECK(run({"series", "--u", "p,2,1,0", "--const", "e", "--order", "8", "--heuristic"}).code == 0);
  CHECK(run({"series", "--u", "p,1,0,1", "--const", "e", "--order", "5", "--heuristic"}).code == 3);
  ::setenv("UDEFORM_MAX_ORDER", "1000", 1);
  CHECK(run({"series", "--u", "p,1,1,0", "--const", "pi", "--order", "400"}).code == 3);
  ::unsetenv("UDEFORM_MAX_ORDER");
  CHECK(run({"series", "--u", "p,1,1,0", "--x", "2", "--order", "201"}).code == 1);
  CHECK(run({"series", "--u", "p,1,1,0", "--order", "3"}).code == 1);
  CHECK(run({"series", "--u", "p,1,1,0", "--x", "2", "--const", "e", "--order", "3"}).code == 1);
}

TEST_CASE("qseries and compare") {
  const auto q = run_json({"qseries", "--x", "7/5", "--order", "12"});
  check_schema(q, "qseries");
  CHECK(strings(q["result"]["coefficients"]) ==
        std::vector<std::string>{"1", "0", "0", "1", "0", "-2", "1", "3", "-3", "-4", "7", "4", "-14"});
  const auto one = run_json({"qseries", "--x", "1", "--order", "5"});
  CHECK(strings(one["result"]["coefficients"]) == std::vector<std::string>{"1", "0", "0", "0", "0", "0"});
  const auto g = run_json({"qseries", "--const", "golden", "--order", "20"});
  CHECK(g["result"]["coefficients"].back() == "1032004");
  const auto c = run_json({"compare", "--x", "1", "--order", "3"});
  check_schema(c, "compare");
  CHECK(strings(c["result"]["u"]) == std::vector<std::string>{"1", "0", "0", "0"});
  CHECK(strings(c["result"]["q"]) == std::vector<std::string>{"1", "0", "0", "0"});
}

TEST_CASE("check") {
  const auto i = run_json({"check", "--property", "integrality", "--u", "p,1,1,0", "--max-ell", "8", "--order", "20"});
  check_schema(i, "check");
  CHECK(i["result"]["holds"] == true);
  CHECK(i["result"]["tested"] == 255);
  CHECK(run({"check", "--property", "oracle-equivalence", "--u", "2,3,1,1", "--max-ell", "8"}).code == 0);
  CHECK(run({"check", "--property", "involution", "--max-ell", "8"}).code == 0);
  CHECK(run({"check", "--property", "unimodality", "--max-ell", "8", "--jobs", "2"}).code == 0);
  const auto obs = run({"check", "--property", "alternation", "--max-ell", "6"});
  CHECK(obs.code == 0);
  CHECK(obs.out.find("fails") != std::string::npos);
  CHECK(run({"check", "--property", "stabilization", "--max-ell", "6"}).code == 4);
  CHECK(run({"check", "--property", "stabilization-sharp", "--max-ell", "6"}).code == 0);
  CHECK(run({"check", "--property", "nonsense"}).code == 1);
  CHECK(run({"check", "--property", "integrality", "--u", "1,1,1,1"}).code == 2);
}

TEST_CASE("cf") {
  const auto d = run_json({"cf", "--x", "17/31"});
  check_schema(d, "cf");
  CHECK(strings(d["result"]["terms"]) == std::vector<std::string>{"0", "1", "1", "4", "1", "2"});
  CHECK(d["result"]["ell"] == "9");
  const auto j = run_json({"cf", "--j", "5/2"});
  CHECK(strings(j["result"]["raw"]) == std::vector<std::string>{"1", "2", "1"});
  CHECK(strings(j["result"]["terms"]) == std::vector<std::string>{"1", "3"});
  CHECK(j["result"]["value"] == "4/3");
  const auto n = run_json({"cf", "--j", "3"});
  CHECK(n["result"]["raw"].is_null());
  CHECK(n["result"]["value"] == "3/2");
  CHECK(run({"cf", "--x", "1"}).out == "[1], ell=1\n");
}

TEST_CASE("exit codes and determinism") {
  CHECK(run({"eval", "--u", "1,1,1,1", "--x", "2"}).code == 2);
  CHECK(run({"eval", "--u", "p,1,1,0", "--x", "0"}).code == 1);
  CHECK(run({"eval", "--u", "p,1,1", "--x", "2"}).code == 1);
  CHECK(run({"eval", "--u", "p,1,x,0", "--x", "2"}).code == 1);
  CHECK(run({"eval", "--u", "p,1,1,0", "--x", "1/0"}).code == 1);
  CHECK(run({"eval", "--u", "1,-1,1,0", "--x", "1/2"}).code == 1);
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
  const std::vector<std::string> args{"--format", "json", "series", "--u", "p,1,1,0", "--const", "e", "--order", "39"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"--format", "latex", "qseries", "--x", "7/5", "--order", "3"}).out == "1+q^{3}+O(q^{4})\n");
}
