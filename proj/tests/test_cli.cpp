#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qaw/cli.hpp"
#include "qaw/density.hpp"
#include "qaw/expand.hpp"
#include "qaw/qpoly.hpp"

using namespace qaw;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("parameter parsing") {
  const auto p = cli::parse_params("0.1, -0.2,0.3");
  CHECK(p.size() == 3);
  CHECK(p[1] == Complex{-0.2});
  const auto c = cli::parse_params("0.1,0.6@0.9");
  CHECK(c.size() == 3);
  CHECK(std::abs(c[1] - std::polar(0.6, 0.9)) < 1e-16);
  CHECK(std::abs(c[2] - std::polar(0.6, -0.9)) < 1e-16);
  CHECK(cli::parse_params("").empty());
  CHECK_THROWS_AS(cli::parse_params("0.1,x"), DomainError);
  CHECK_THROWS_AS(cli::parse_params("0.1,1.2"), DomainError);
  CHECK_THROWS_AS(cli::parse_params("-0.5@1"), DomainError);
}

TEST_CASE("eval examples") {
  auto r = run({"eval", "--family", "aw", "--q", "0", "--params", "0,0,0,0", "--x", "0"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["command"] == "eval");
  CHECK(j["rows"][0]["value"].get<double>() == doctest::Approx(2 / 3.14159265358979323846).epsilon(1e-15));

  r = run({"eval", "--family", "hermite", "--n", "2", "--q", "0", "--x", "0.5"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["n"] == 2);
  CHECK(std::abs(j["rows"][0]["value"].get<double>()) < 1e-15);

  r = run({"eval", "--pm", "--rho", "0", "--x", "0.1", "--y", "0.9"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rows"][0]["value"] == 1.0);

  r = run({"eval", "--phi", "--t", "0.5", "--q", "0.5", "--x", "0.3", "--series"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["rows"][0]["value"].get<double>() ==
        doctest::Approx(phi_h(0.3, 0.5, QContext::make(0.5))).epsilon(1e-10));
}

TEST_CASE("JSON round trip is bit exact") {
  const auto r = run({"eval", "--family", "aw", "--q", "0.37", "--params", "0.1,-0.25,0.3,0.45", "--grid", "33"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  const DensitySpec spec(Family::AskeyWilson, ParamVector{0.1, -0.25, 0.3, 0.45}, QContext::make(0.37));
  const auto xs = uniform_grid(33);
  REQUIRE(j["rows"].size() == xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(j["rows"][i]["x"].get<double>() == xs[i]);
    CHECK(j["rows"][i]["value"].get<double>() == density_value(spec, xs[i]));
  }
  CHECK(json::parse(j.dump()) == j);
  CHECK(j["q"] == 0.37);
  CHECK(j["params"].size() == 4);
  CHECK(j["meta"].contains("trunc"));
  CHECK(j["meta"].contains("tol"));
  CHECK(j["meta"]["versions"].contains("nlohmann_json"));
}

TEST_CASE("CSV output") {
  const auto r = run({"moments", "--family", "bqh", "--q", "0.5", "--params", "0.5", "--n", "0:3", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0] == std::vector<std::string>{"n", "closed", "quad", "diff"});
  CHECK(std::strtod(rows[4][1].c_str(), nullptr) == 0.125);
  CHECK(std::abs(std::strtod(rows[4][2].c_str(), nullptr) - 0.125) < 1e-9);
  // values survive the text form exactly
  const auto e = run({"expand", "--q", "0.5", "--params", "0.1,0.2,0.3,0.4", "--closed", "--order", "10", "--format", "csv"});
  REQUIRE(e.code == 0);
  const auto erows = csv(e.out);
  const auto t = closed_form_table(ParamVector{0.1, 0.2, 0.3, 0.4}, 10, QContext::make(0.5));
  for (std::size_t j = 0; j <= 10; ++j) CHECK(std::strtod(erows[j + 1][1].c_str(), nullptr) == t.T[j].real());
}

TEST_CASE("moments of the conjugate-pair Al-Salam-Chihara density") {
  const auto r = run({"moments", "--family", "asc", "--q", "0.5", "--params", "0.6@0.9", "--n", "2"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["rows"][0]["closed"].get<double>() == doctest::Approx(0.36 * q_hermite(2, std::cos(0.9), QContext::make(0.5))));
  CHECK(j["rows"][0]["diff"].get<double>() < 1e-9);
}

TEST_CASE("verify and conjecture") {
  auto r = run({"verify", "--suite", "aw-integral", "--q", "0.5"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  for (const auto& row : j["rows"]) {
    CHECK(row["passed"] == true);
    CHECK(row["residual"].get<double>() < 1e-8);
    CHECK(row["check"].get<std::string>().find("q=0.5") != std::string::npos);
  }
  r = run({"verify", "--list", "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out.find("linearization") != std::string::npos);

  r = run({"conjecture", "--params", "0.1,0.2,0.3,0.4,0.5", "--qs", "0,0.3", "--format", "csv"});
  REQUIRE(r.code == 0);
  const auto rows = csv(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(std::strtod(rows[1][3].c_str(), nullptr) < 1e-12);
  CHECK(std::isfinite(std::strtod(rows[2][4].c_str(), nullptr)));
  r = run({"conjecture", "--params", "0.1,0.2,0.3,0.4,0", "--format", "csv"});
  REQUIRE(r.code == 0);
  for (const auto& row : csv(r.out))
    if (row[0] != "q") CHECK(std::strtod(row[3].c_str(), nullptr) < 1e-10);
}

TEST_CASE("exit codes and diagnostics") {
  auto r = run({"eval", "--family", "aw", "--q", "0.5", "--params", "0.1,0.2,0.3,1.5", "--x", "0"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("error:") == 0);
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK(run({"eval", "--family", "aw", "--q", "0.5", "--params", "0,0,0,0", "--x", "1.5"}).code == cli::kExitUsage);
  CHECK(run({"integrate", "--family", "aw", "--q", "0.5", "--params", "0.1,0.2,0.3,0.4", "--tol", "1e-300"}).code ==
        cli::kExitFailure);
  CHECK(run({"integrate", "--family", "aw", "--q", "0.5", "--params", "0.1,0.2,0.3,0.4"}).code == cli::kExitOk);
  CHECK(run({"eval", "--x", "0"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"gasper", "--q", "0.5", "--params", "0.1,0.2"}).code == cli::kExitUsage);
}

TEST_CASE("output file") {
  const std::string path = "test_cli_output.json";
  const auto r = run({"eval", "--pm", "--rho", "0.5", "--q", "0.3", "--x", "0.2", "--y", "0.1", "-o", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = json::parse(in);
  CHECK(j["rows"][0]["value"].get<double>() == poisson_mehler(0.2, 0.1, 0.5, QContext::make(0.3)));
  std::remove(path.c_str());
}

TEST_CASE("QAW_MAX_TERMS") {
  CHECK(cli::max_terms_from_env(77) == 77);
  setenv("QAW_MAX_TERMS", "5", 1);
  CHECK(cli::max_terms_from_env(77) == 5);
  const auto r = run({"eval", "--phi", "--t", "0.9", "--q", "0.95", "--x", "0.3"});
  CHECK(r.code == cli::kExitUsage);
  setenv("QAW_MAX_TERMS", "zero", 1);
  CHECK_THROWS_AS(cli::max_terms_from_env(77), DomainError);
  unsetenv("QAW_MAX_TERMS");
}
