#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cesaro/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cesaro::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json json_of(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

}  // namespace

TEST_CASE("entries") {
  auto r = run({"entries", "--order", "3", "--alpha", "0", "--n", "3", "--no-meta"});
  REQUIRE(r.code == 0);
  auto j = json_of(r);
  CHECK(j["schema"] == "cesaro-lab/1");
  CHECK(j["results"]["rows"] == nlohmann::ordered_json::parse(R"([["1","0","0"],["3/4","1/4","0"],["3/5","3/10","1/10"]])"));
  auto k1 = json_of(run({"entries", "--order", "1", "--alpha", "0", "--n", "2", "--no-meta"}));
  CHECK(k1["results"]["rows"] == nlohmann::ordered_json::parse(R"([["1","0"],["1/2","1/2"]])"));
  CHECK(run({"entries", "--order", "3", "--alpha", "-1", "--n", "2"}).code == 2);
  CHECK(run({"entries", "--order", "3", "--alpha", "x", "--n", "2"}).code == 2);
  CHECK(run({"entries", "--order", "3", "--alpha", "0.5e1", "--n", "2"}).code == 2);

  auto csv = run({"--format", "csv", "entries", "--order", "3", "--alpha", "0", "--n", "3"});
  CHECK(csv.out == "row,0,1,2\n0,1,0,0\n1,3/4,1/4,0\n2,3/5,3/10,1/10\n");
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "--order", "3", "--alpha", "1/2,1,3", "--n", "40", "--no-meta"});
  CHECK(ok.code == 0);
  auto j = json_of(ok);
  REQUIRE(j["results"].size() == 3);
  for (const auto& r : j["results"]) CHECK(r["status"] == "verified");

  auto bad = run({"verify", "--order", "3", "--alpha", "1", "--n", "40", "--corner", "identity", "--no-meta"});
  CHECK(bad.code == 1);
  auto mj = json_of(bad)["results"][0]["mismatch"];
  CHECK(mj["i"] == 0);
  CHECK(mj["j"] == 0);
  CHECK(mj["lhs"] == "1/16");
  CHECK(mj["rhs"] == "5/8");

  CHECK(run({"verify", "--order", "1", "--alpha", "5", "--n", "40"}).code == 0);
  CHECK(run({"verify", "--order", "3", "--alpha", "-3/4", "--n", "10"}).code == 0);
  CHECK(run({"verify", "--order", "3", "--alpha", "1", "--corner", "bogus"}).code == 2);
  CHECK(run({"verify", "--order", "2", "--alpha", "1", "--corner", "fixture"}).code == 2);
}

TEST_CASE("telescope") {
  auto k3 = run({"telescope", "--order", "3", "--no-meta"});
  CHECK(k3.code == 0);
  CHECK(json_of(k3)["results"]["regression"]["pass"] == true);
  auto k1 = json_of(run({"telescope", "--order", "1", "--no-meta"}));
  CHECK(k1["results"]["denominator_factors"].size() == 1);
  CHECK(k1["results"]["coefficients"][0]["value"] == "1");
  auto k4 = json_of(run({"telescope", "--order", "4", "--no-meta"}));
  CHECK(k4["results"]["degree_guard"] == true);
  CHECK(k4["results"]["identity_holds"] == true);
}

TEST_CASE("ranges") {
  auto k3 = json_of(run({"ranges", "--order", "3", "--domain", "(-1,10]", "--no-meta"}));
  CHECK(k3["results"]["hyponormal_sufficient"]["text"] == "{0} U {1} U [2, inf)");
  CHECK(k3["results"]["hyponormal_sufficient"]["extends_to_infinity"] == true);
  CHECK(k3["results"]["posinormal_coposinormal"]["components"].size() == 1);
  CHECK(k3["results"]["minor_regression"] == true);
  auto k2 = json_of(run({"ranges", "--order", "2", "--no-meta"}));
  CHECK(k2["results"]["hyponormal_sufficient"]["text"] == "{0} U [1, inf)");
  auto k1 = json_of(run({"ranges", "--order", "1", "--no-meta"}));
  CHECK(k1["results"]["hyponormal_sufficient"]["text"] == "[0, inf)");
  CHECK(run({"ranges", "--order", "3", "--domain", "1,2"}).code == 2);
}

TEST_CASE("conjecture") {
  auto r = run({"conjecture", "--orders", "1,2,3", "--alpha", "1/2,2", "--n", "40", "--no-meta"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  REQUIRE(j["results"].size() == 3);
  CHECK(j["results"][2]["fixture_match"] == true);
  CHECK(run({"conjecture", "--orders", "0", "--alpha", "1"}).code == 2);
}

TEST_CASE("defect") {
  auto r = run({"defect", "--order", "3", "--alpha", "1/2", "--section", "4", "--terms", "2000", "--no-meta"});
  CHECK(r.code == 0);
  auto j = json_of(r);
  CHECK(j["results"]["label"] == "inconclusive (sufficient condition only)");
  CHECK(j["results"]["consistent"].is_null());
}

TEST_CASE("determinism and round trip") {
  std::vector<std::string> args{"ranges", "--order", "3", "--no-meta"};
  auto a = run(args);
  auto b = run(args);
  CHECK(a.out == b.out);
  CHECK(json_of(a).dump(2) + "\n" == a.out);

  auto d = run({"defect", "--order", "2", "--alpha", "1", "--section", "3", "--terms", "500", "--no-meta"});
  CHECK(json_of(d).dump(2) + "\n" == d.out);

  auto with_meta = json_of(run({"telescope", "--order", "2"}));
  CHECK(with_meta.contains("meta"));
  CHECK_FALSE(json_of(run({"telescope", "--order", "2", "--no-meta"})).contains("meta"));
}

TEST_CASE("out file and usage errors") {
  std::string path = "cli_test_report.json";
  auto r = run({"--out", path, "telescope", "--order", "2", "--no-meta"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  CHECK(buffer.str() == run({"telescope", "--order", "2", "--no-meta"}).out);
  std::remove(path.c_str());

  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"--format", "xml", "telescope", "--order", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
