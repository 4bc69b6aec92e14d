#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using adjstat::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json call_json(const std::vector<std::string>& args) {
  const Outcome o = call(args);
  REQUIRE(o.code == 0);
  return json::parse(o.out);
}

std::vector<std::string> coeffs(const json& cell) { return cell.at("coeffs").get<std::vector<std::string>>(); }

}  // namespace

TEST_CASE("dist") {
  const json mu = call_json({"dist", "--stat", "mu", "--k", "3", "--s", "2", "--n", "0..4", "--q", "0"});
  std::vector<std::string> values;
  for (const auto& row : mu.at("rows")) values.push_back(row.at("value"));
  CHECK(values == std::vector<std::string>{"1", "3", "8", "21", "55"});

  const json nu = call_json({"dist", "--stat", "nu", "--k", "3", "--s", "2", "--n", "2"});
  REQUIRE(nu.at("rows").size() == 1);
  CHECK(coeffs(nu["rows"][0]["dist"]) == std::vector<std::string>{"7", "2"});
  CHECK(nu["rows"][0]["dist"]["var"] == "q");

  const json trivial = call_json({"dist", "--stat", "mu", "--k", "2", "--s", "5", "--n", "3"});
  CHECK(coeffs(trivial["rows"][0]["dist"]) == std::vector<std::string>{"8"});
}

TEST_CASE("dist with verification") {
  for (const std::string stat : {"mu", "nu"}) {
    const json j = call_json({"dist", "--stat", stat, "--k", "4", "--s", "2", "--n", "0..6", "--verify"});
    for (const auto& row : j.at("rows")) {
      CHECK(row.at("oracle") == "ok");
      CHECK(row.at("closed_form") == "ok");
    }
  }
  const json large = call_json({"dist", "--stat", "nu", "--k", "7", "--s", "2", "--n", "0..5", "--q", "1/3", "--verify"});
  for (const auto& row : large.at("rows")) CHECK(row.at("closed_form") == "ok");

  const json capped = call_json({"dist", "--stat", "mu", "--k", "3", "--s", "1", "--n", "3..5", "--verify", "--cap", "100"});
  CHECK(capped["rows"][0]["oracle"] == "ok");
  CHECK(capped["rows"][2]["oracle"] == "cap exceeded");
}

TEST_CASE("csv output") {
  const Outcome o = call({"dist", "--stat", "nu", "--k", "3", "--s", "2", "--n", "2", "--format", "csv"});
  CHECK(o.code == 0);
  CHECK(o.out == "n,dist\n2,7;2\n");
}

TEST_CASE("totals") {
  const json words = call_json({"totals", "--words", "--k", "3", "--s", "1", "--n", "2"});
  CHECK(words["rows"][0]["total"] == "2");
  const json parts = call_json({"totals", "--partitions", "--s", "2", "--n", "4"});
  CHECK(parts["rows"][0]["total"] == "1");
  const json fib = call_json({"totals", "--fib", "--n", "2"});
  CHECK(fib["rows"][0]["levels"] == "3");
  CHECK(fib["rows"][0]["ascents"] == "2");
  CHECK(fib["rows"][0]["descents"] == "3");
  CHECK(call({"totals", "--partitions", "--s", "2", "--n", "3..8", "--verify"}).code == 0);
  CHECK(call({"totals", "--words", "--fib", "--n", "2"}).code == 2);
}

TEST_CASE("avoid, gap and partition-dist") {
  const json a = call_json({"avoid", "--k", "4", "--s", "2", "--n", "0..4"});
  std::vector<std::string> counts;
  for (const auto& row : a.at("rows")) counts.push_back(row.at("count"));
  CHECK(counts == std::vector<std::string>{"1", "4", "14", "48", "164"});

  const json g = call_json({"gap", "--k", "2", "--s", "1", "--r", "2", "--n", "3", "--verify"});
  CHECK(coeffs(g["rows"][0]["dist"]) == std::vector<std::string>{"6", "2"});
  CHECK(g["rows"][0]["oracle"] == "ok");

  const json p = call_json({"partition-dist", "--k", "3", "--s", "2", "--n", "4"});
  CHECK(coeffs(p["rows"][0]["dist"]) == std::vector<std::string>{"5", "1"});
  CHECK(p["rows"][0]["closed_form"] == "ok");
}

TEST_CASE("verify") {
  const Outcome kary = call({"verify", "--suite", "kary", "--kmax", "5", "--nmax", "8"});
  CHECK(kary.code == 0);
  CHECK(json::parse(kary.out)["pass"] == true);
  CHECK(call({"verify", "--suite", "partitions", "--nmax", "9"}).code == 0);
  CHECK(call({"verify", "--suite", "bijections", "--nmax", "10"}).code == 0);
  CHECK(call({"verify", "--suite", "nope"}).code == 2);
}

TEST_CASE("bijection") {
  const json j = call_json({"bijection", "--v-to-w", "113"});
  CHECK(j["rows"][1]["value"] == "344");
  const json back = call_json({"bijection", "--w-to-v", "344"});
  CHECK(back["rows"][1]["value"] == "113");
  const json comp = call_json({"bijection", "--composition", "2{2}"});
  CHECK(comp["rows"][1]["value"] == "4");
  const json tiling = call_json({"bijection", "--jpp", "21"});
  CHECK(tiling["rows"][1]["value"] == "D");
  CHECK(call({"bijection", "--v-to-w", "24"}).code == 2);
  CHECK(call({"bijection", "--maneuvers", "24"}).code == 2);
  CHECK(call({"bijection", "--composition", "2{}"}).code == 2);
}

TEST_CASE("oeis-check") {
  const auto path = std::filesystem::temp_directory_path() / "adjstat_cli_b007070.txt";
  std::ofstream(path) << "0 1\n1 4\n2 14\n3 48\n4 164\n";
  const Outcome ok = call({"oeis-check", "--bfile", path.string(), "--id", "A007070"});
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["compared"] == 5);

  std::ofstream(path) << "0 1\n1 4\n2 15\n";
  CHECK(call({"oeis-check", "--bfile", path.string(), "--id", "A007070"}).code == 1);
  std::ofstream(path) << "0 1\n1 x\n";
  CHECK(call({"oeis-check", "--bfile", path.string(), "--id", "A007070"}).code == 2);
  std::filesystem::remove(path);
  CHECK(call({"oeis-check", "--bfile", path.string(), "--id", "A007070"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == 2);
  CHECK(call({"dist", "--k", "3"}).code == 2);
  CHECK(call({"dist", "--stat", "xi", "--k", "3", "--s", "1"}).code == 2);
  CHECK(call({"dist", "--stat", "mu", "--k", "3", "--s", "1", "--n", "5..2"}).code == 2);
  CHECK(call({"dist", "--stat", "mu", "--k", "3", "--s", "1", "--q", "1/0"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("range parsing") {
  CHECK(adjstat::cli::parse_range("3") == std::pair{3, 3});
  CHECK(adjstat::cli::parse_range("0..8") == std::pair{0, 8});
  CHECK_THROWS_AS(adjstat::cli::parse_range(""), std::invalid_argument);
  CHECK_THROWS_AS(adjstat::cli::parse_range("a..2"), std::invalid_argument);
}
