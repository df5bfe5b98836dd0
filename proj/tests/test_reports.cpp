#include <catch2/catch_amalgamated.hpp>

#include <cctype>
#include <sstream>

#include "lcoh/connection.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/verification.hpp"

using namespace lcoh;
using nlohmann::json;

namespace {

EngineOptions modular() {
  EngineOptions opt;
  opt.rank.mode = RankMode::modular;
  return opt;
}

}  // namespace

TEST_CASE("dimension reports are deterministic") {
  const auto g = build_h_n(3).algebra;
  const auto a = cohomology_dims(g, ModuleKind::adjoint, ComplexChoice::leibniz, 3, modular());
  const auto b = cohomology_dims(g, ModuleKind::adjoint, ComplexChoice::leibniz, 3, modular());
  const json ja = dims_report_json("h_3", 3, "adjoint", a);
  CHECK(ja.dump() == dims_report_json("h_3", 3, "adjoint", b).dump());
  CHECK(dims_report_table("h_3", 3, "adjoint", a) == dims_report_table("h_3", 3, "adjoint", b));
}

TEST_CASE("dimension report fields") {
  const auto g = build_h_n(3).algebra;
  const auto rep = cohomology_dims(g, ModuleKind::adjoint, ComplexChoice::leibniz, 2, modular());
  const json j = dims_report_json("h_3", 3, "adjoint", rep);
  CHECK(j["algebra"] == "h_3");
  CHECK(j["n"] == 3);
  CHECK(j["coefficients"] == "adjoint");
  CHECK(j["dims"]["1"] == 1);
  CHECK(j["ranks"]["0"]["method"] == "modular");
  CHECK(j["ranks"]["0"]["primes"].size() >= 3);
  CHECK(j["exactness"].is_array());
  // table rows carry the same numbers
  const std::string table = dims_report_table("h_3", 3, "adjoint", rep);
  std::istringstream in(table);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || !std::isdigit(static_cast<unsigned char>(line[0]))) continue;
    const int degree = std::stoi(line);
    const auto last = line.substr(line.find_last_of('\t') + 1);
    CHECK(std::stoull(last) == j["dims"][std::to_string(degree)].get<std::uint64_t>());
    ++rows;
  }
  CHECK(rows == 3);
}

TEST_CASE("LES report lists nodes and maps") {
  const auto g = build_h_n(3).algebra;
  const auto rep = lie_coadjoint_sequence(g, 2, modular());
  const json j = les_report_json("h_3", 3, rep);
  CHECK(j == les_report_json("h_3", 3, lie_coadjoint_sequence(g, 2, modular())));
  CHECK(j.dump().find("HR^") != std::string::npos);
  CHECK(!les_report_table(rep).empty());
}

TEST_CASE("connection report is reproducible from its seed") {
  ConnectionCheckConfig cfg;
  cfg.lemma = "2.1";
  cfg.dim = 1;
  cfg.cases = 5;
  const json a = connection_report_to_json(verify_connection(cfg));
  const json b = connection_report_to_json(verify_connection(cfg));
  CHECK(a == b);
  CHECK(a["seed"] == cfg.seed);
  CHECK(a["passed"] == a["total"]);
  CHECK(a["pass"] == true);
  cfg.seed += 1;
  CHECK(connection_report_to_json(verify_connection(cfg)) != a);
}

TEST_CASE("check lists render as JSON and tables") {
  const std::vector<CheckResult> checks = {{"one", true, ""}, {"two", false, "at (d1)"}};
  const json j = checks_to_json(checks);
  CHECK(j.dump().find("at (d1)") != std::string::npos);
  const std::string t = checks_table(checks);
  CHECK(t.find("PASS one") != std::string::npos);
  CHECK(t.find("FAIL two") != std::string::npos);
  CHECK_FALSE(all_pass(checks));
}

TEST_CASE("algebra selection") {
  CHECK(select_algebra("h_n", 4, "").dim() == 10);
  CHECK(select_algebra("so_n", 4, "").dim() == 6);
  CHECK(select_algebra("j_n", 2, "").dim() == 2);
  CHECK(select_algebra("sl_2", 0, "").dim() == 3);
  CHECK_THROWS_AS(select_algebra("h_n", 0, ""), InvalidDimension);
  CHECK_THROWS_AS(select_algebra("file", 3, "/nonexistent.json"), ParseError);
}
