#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcoh/algebra_io.hpp"
#include "lcoh/connection.hpp"
#include "lcoh/errors.hpp"
#include "lcoh/verification.hpp"

namespace {

using namespace lcoh;
using nlohmann::json;

constexpr int kExitFail = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

struct RunConfig {
  std::string algebra = "h_n";
  std::string file;
  int n = 3;
  std::string coefficients = "adjoint";
  int max_degree = 3;
  std::string rank_mode = "auto";
  std::optional<int> primes;
  std::uint64_t seed = 20240611;
  std::string format = "table";
  std::string output;
  int threads = 0;

  std::string which = "rel";
  std::string lemma = "2.1";
  std::optional<int> dim;
  int degree = 3;
  int cases = 20;
  std::string algebra_file;
};

std::optional<long long> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return std::stoll(v);
  } catch (const std::exception&) {
    throw ParseError(std::string("environment variable ") + name + " is not an integer");
  }
}

EngineOptions engine_options(const RunConfig& cfg) {
  EngineOptions opt;
  opt.rank.mode = parse_rank_mode(cfg.rank_mode);
  opt.rank.seed = cfg.seed;
  if (auto p = env_int("LCOH_PRIMES")) opt.rank.min_primes = static_cast<int>(*p);
  if (auto t = env_int("LCOH_EXACT_THRESHOLD")) opt.rank.exact_threshold = static_cast<std::size_t>(*t);
  if (cfg.primes) opt.rank.min_primes = *cfg.primes;
  if (opt.rank.min_primes < 1) throw ParseError("prime budget must be >= 1");
  opt.rank.prime_budget = std::max(opt.rank.prime_budget, opt.rank.min_primes);
  const unsigned hw = std::thread::hardware_concurrency();
  opt.rank.threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(hw ? hw : 1);
  return opt;
}

void emit(const RunConfig& cfg, const json& j, const std::string& table) {
  const std::string text = cfg.format == "json" ? j.dump(2) + "\n" : table;
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output);
  if (!out) throw Error("cannot write " + cfg.output);
  out << text;
}

std::string display_name(const RunConfig& cfg) {
  if (cfg.algebra == "file") return cfg.file;
  if (cfg.algebra == "sl_2") return "sl_2";
  const std::string base = cfg.algebra.substr(0, cfg.algebra.size() - 2);
  return base + "_" + std::to_string(cfg.n);
}

int run_dims(const RunConfig& cfg, ComplexChoice complex) {
  const LieAlgebra alg = select_algebra(cfg.algebra, cfg.n, cfg.file);
  const ModuleKind coeff = parse_module_kind(cfg.coefficients);
  const CohomologyReport rep = cohomology_dims(alg, coeff, complex, cfg.max_degree, engine_options(cfg));
  const std::string coeff_name = complex == ComplexChoice::cr ? "adjoint" : cfg.coefficients;
  emit(cfg, dims_report_json(display_name(cfg), cfg.n, coeff_name, rep),
       dims_report_table(display_name(cfg), cfg.n, coeff_name, rep));
  return 0;
}

int run_les(const RunConfig& cfg) {
  const LieAlgebra alg = select_algebra(cfg.algebra, cfg.n, cfg.file);
  LESReport rep;
  if (cfg.which == "rel") {
    rep = lie_to_leibniz_sequence(alg, make_module(alg, parse_module_kind(cfg.coefficients)), cfg.max_degree,
                                  engine_options(cfg));
  } else if (cfg.which == "coadjoint") {
    rep = lie_coadjoint_sequence(alg, cfg.max_degree, engine_options(cfg));
  } else {
    throw ParseError("--which must be rel or coadjoint");
  }
  emit(cfg, les_report_json(display_name(cfg), cfg.n, rep), les_report_table(rep));
  return rep.all_exact() ? 0 : kExitFail;
}

int run_checks(const RunConfig& cfg, const std::vector<CheckResult>& checks) {
  json j = checks_to_json(checks);
  j["n"] = cfg.n;
  emit(cfg, j, checks_table(checks));
  return all_pass(checks) ? 0 : kExitFail;
}

int run_connection(const RunConfig& cfg) {
  ConnectionCheckConfig c;
  c.lemma = cfg.lemma;
  c.dim = cfg.dim.value_or(cfg.lemma == "2.1" ? 1 : 2);
  c.degree = cfg.degree;
  c.cases = cfg.cases;
  c.seed = cfg.seed;
  const ConnectionReport rep = verify_connection(c);
  std::ostringstream table;
  for (const auto& k : rep.cases) {
    table << (k.pass ? "PASS " : "FAIL ") << k.name;
    if (!k.pass) table << "  counterexample: " << k.defect;
    table << "\n";
  }
  table << (rep.all_pass() ? "all cases pass\n" : "FAILURES\n");
  emit(cfg, connection_report_to_json(rep), table.str());
  return rep.all_pass() ? 0 : kExitFail;
}

int run_algebra_check(const RunConfig& cfg) {
  try {
    const LieAlgebra alg = load_algebra(cfg.algebra_file);
    json labels = alg.labels();
    emit(cfg, {{"name", alg.name()}, {"dim", alg.dim()}, {"labels", labels}, {"valid", true}},
         "algebra " + alg.name() + ": dim " + std::to_string(alg.dim()) + ", antisymmetry and Jacobi hold\n");
    return 0;
  } catch (const JacobiViolation& e) {
    emit(cfg, {{"valid", false}, {"error", e.what()}}, std::string("invalid algebra: ") + e.what() + "\n");
    return kExitFail;
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, bool algebra_opts, bool degree_opts) {
  if (algebra_opts) {
    sub->add_option("--algebra", cfg.algebra, "h_n | so_n | j_n | sl_2 | file")
        ->check(CLI::IsMember({"h_n", "so_n", "j_n", "sl_2", "file"}));
    sub->add_option("--file", cfg.file, "algebra JSON file for --algebra file");
    sub->add_option("--coefficients", cfg.coefficients, "adjoint | coadjoint | trivial")
        ->check(CLI::IsMember({"adjoint", "coadjoint", "trivial"}));
  }
  sub->add_option("--n", cfg.n, "size parameter")->check(CLI::Range(1, 64));
  if (degree_opts) sub->add_option("--max-degree", cfg.max_degree, "highest degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--rank-mode", cfg.rank_mode, "exact | modular | auto")
      ->check(CLI::IsMember({"exact", "modular", "auto"}));
  sub->add_option("--primes", cfg.primes, "agreeing primes required for modular ranks");
  sub->add_option("--seed", cfg.seed, "seed for primes and random cases");
  sub->add_option("--format", cfg.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  sub->add_option("--output", cfg.output, "write the report here");
  sub->add_option("--threads", cfg.threads, "cap on internal parallelism")->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leibniz and Lie algebra cohomology toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* hl = app.add_subcommand("hl-dims", "Leibniz cohomology dimensions");
  auto* lie = app.add_subcommand("lie-dims", "Chevalley-Eilenberg cohomology dimensions");
  auto* rel = app.add_subcommand("rel-dims", "relative Lie-to-Leibniz cohomology dimensions");
  auto* hr = app.add_subcommand("hr-dims", "relative coadjoint cohomology dimensions");
  auto* les = app.add_subcommand("les", "long exact sequence with connecting maps");
  for (auto* s : {hl, lie, rel, hr, les}) add_common(s, cfg, true, true);
  les->add_option("--which", cfg.which, "rel | coadjoint")->check(CLI::IsMember({"rel", "coadjoint"}));

  auto* verify = app.add_subcommand("verify", "verification batteries");
  verify->require_subcommand(1);
  auto* v_inv = verify->add_subcommand("invariants", "named-cochain relations and invariance");
  auto* v_conn = verify->add_subcommand("connection", "connection identities");
  auto* v_paper = verify->add_subcommand("paper", "every available check for one n");
  for (auto* s : {v_inv, v_conn, v_paper}) add_common(s, cfg, false, false);
  v_conn->add_option("--lemma", cfg.lemma, "2.1 | 2.2 | 2.4 | 2.5")->check(CLI::IsMember({"2.1", "2.2", "2.4", "2.5"}));
  v_conn->add_option("--dim", cfg.dim, "ambient dimension");
  v_conn->add_option("--degree", cfg.degree, "polynomial degree bound")->check(CLI::NonNegativeNumber);
  v_conn->add_option("--cases", cfg.cases, "random cases")->check(CLI::NonNegativeNumber);

  auto* algebra = app.add_subcommand("algebra", "structure-constant files");
  algebra->require_subcommand(1);
  auto* a_check = algebra->add_subcommand("check", "validate antisymmetry and Jacobi");
  a_check->add_option("file", cfg.algebra_file, "algebra JSON file")->required();
  a_check->add_option("--format", cfg.format, "table | json")->check(CLI::IsMember({"table", "json"}));
  a_check->add_option("--output", cfg.output, "write the report here");

  auto* catalog = app.add_subcommand("catalog", "named cochains");
  catalog->require_subcommand(1);
  auto* c_dump = catalog->add_subcommand("dump", "print the catalog as JSON");
  c_dump->add_option("--n", cfg.n, "size parameter")->check(CLI::Range(3, 64));
  c_dump->add_option("--output", cfg.output, "write the catalog here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*hl) return run_dims(cfg, ComplexChoice::leibniz);
    if (*lie) return run_dims(cfg, ComplexChoice::lie);
    if (*rel) return run_dims(cfg, ComplexChoice::relative);
    if (*hr) return run_dims(cfg, ComplexChoice::cr);
    if (*les) return run_les(cfg);
    if (*v_inv) return run_checks(cfg, verify_invariants(cfg.n));
    if (*v_conn) return run_connection(cfg);
    if (*v_paper) return run_checks(cfg, verify_paper(cfg.n, engine_options(cfg), cfg.seed));
    if (*a_check) return run_algebra_check(cfg);
    if (*c_dump) {
      cfg.format = "json";
      const std::string text = catalog_to_json(build_catalog(cfg.n));
      emit(cfg, json::parse(text), {});
      return 0;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidDimension& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
