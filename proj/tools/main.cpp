#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "laxalg/central.hpp"
#include "laxalg/config.hpp"
#include "laxalg/errors.hpp"
#include "laxalg/export.hpp"
#include "laxalg/verify.hpp"

namespace {

constexpr int kExitMath = 1;
constexpr int kExitConfig = 2;

struct SharedOptions {
  std::string config_file;
  std::string family;
  int n = 0;
  std::string tyurin_file;
  std::optional<std::size_t> random_points;
  std::optional<std::uint64_t> seed;
  std::string degrees;
  std::optional<int> max_pole;
  std::optional<std::size_t> trials;
  std::string out;
  std::string format = "json";
};

lax::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw lax::ParseError("cannot open '" + path + "'");
  try {
    return lax::Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw lax::ParseError(path + ": " + e.what());
  }
}

lax::RunConfig build_config(const SharedOptions& o) {
  lax::Json j = o.config_file.empty() ? lax::Json::object() : read_json_file(o.config_file);
  if (!j.is_object()) throw lax::ParseError(o.config_file + ": expected a JSON object");
  if (!o.family.empty()) j["family"] = o.family;
  if (o.n > 0) j["n"] = o.n;
  if (!o.tyurin_file.empty()) {
    lax::Json t = read_json_file(o.tyurin_file);
    if (t.is_object() && t.contains("tyurin")) t = t.at("tyurin");
    if (!t.is_array()) throw lax::ParseError(o.tyurin_file + ": expected a list of Tyurin points");
    j.erase("random_points");
    j["tyurin"] = t;
  }
  if (o.random_points) {
    j.erase("tyurin");
    j["random_points"] = *o.random_points;
  }
  if (o.seed) j["seed"] = *o.seed;
  if (!o.degrees.empty()) j["degrees"] = o.degrees;
  if (o.max_pole) j["max_pole"] = *o.max_pole;
  if (o.trials) j["trials"] = *o.trials;
  return lax::parse_config(j);
}

void add_shared(CLI::App* cmd, SharedOptions& o) {
  cmd->add_option("--config", o.config_file, "JSON run configuration");
  cmd->add_option("--family", o.family, "gl, sl, so or sp");
  cmd->add_option("--n", o.n, "algebra parameter (sp(2n) takes n)");
  cmd->add_option("--tyurin", o.tyurin_file, "JSON list of Tyurin points {z, alpha}");
  cmd->add_option("--random-points", o.random_points, "number of random Tyurin points");
  cmd->add_option("--seed", o.seed, "seed for every random draw");
  cmd->add_option("--degrees", o.degrees, "degree range a..b");
  cmd->add_option("--max-pole", o.max_pole, "largest pole order at P+ tried for Lambda");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

lax::ConnectionForm load_or_build_lambda(const lax::ConfigPtr& config, const lax::RunConfig& run,
                                         const std::string& lambda_file) {
  if (lambda_file.empty()) return lax::construct_connection(config, run.max_pole);
  lax::Json j = read_json_file(lambda_file);
  return lax::connection_from_json(config, j.contains("lambda") ? j.at("lambda") : j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lax operator algebras on the sphere with Tyurin points: exact bases, brackets and cocycles"};
  app.require_subcommand(1);

  SharedOptions verify_opts, basis_opts, bracket_opts, structure_opts, lambda_opts, table_opts;
  std::string verify_lambda, table_lambda;
  std::string lhs_file, rhs_file;
  std::optional<int> bk, bl, sk, sl;
  std::optional<std::size_t> bi, bj;

  auto* verify = app.add_subcommand("verify", "run every verification suite and print a JSON report");
  add_shared(verify, verify_opts);
  verify->add_option("--trials", verify_opts.trials, "random samples per property");
  verify->add_option("--lambda", verify_lambda, "use this connection form instead of constructing one");

  auto* basis = app.add_subcommand("basis", "export bases of g_m for the degree range");
  add_shared(basis, basis_opts);

  auto* bracket = app.add_subcommand("bracket", "bracket two elements and decompose the result");
  add_shared(bracket, bracket_opts);
  bracket->add_option("--lhs", lhs_file, "left element (function JSON)");
  bracket->add_option("--rhs", rhs_file, "right element (function JSON)");
  bracket->add_option("--k", bk, "degree of the left basis element");
  bracket->add_option("--i", bi, "index of the left basis element");
  bracket->add_option("--l", bl, "degree of the right basis element");
  bracket->add_option("--j", bj, "index of the right basis element");

  auto* structure = app.add_subcommand("structure", "structure constants [g_k, g_l] -> g_{k+l}");
  add_shared(structure, structure_opts);
  structure->add_option("--k", sk, "first degree")->required();
  structure->add_option("--l", sl, "second degree")->required();

  auto* lambda = app.add_subcommand("lambda", "construct the connection form Lambda");
  add_shared(lambda, lambda_opts);

  auto* table = app.add_subcommand("cocycle-table", "cocycle values on all basis pairs of the degree range");
  add_shared(table, table_opts);
  table->add_option("--lambda", table_lambda, "use this connection form instead of constructing one");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*verify) {
      const auto run = build_config(verify_opts);
      std::optional<lax::Json> lambda_json;
      if (!verify_lambda.empty()) {
        lax::Json j = read_json_file(verify_lambda);
        lambda_json = j.contains("lambda") ? j.at("lambda") : j;
      }
      const auto report = lax::run_verify(run, lambda_json);
      lax::write_output(lax::dump(lax::to_json(report)), verify_opts.out);
      for (const auto& s : report.suites)
        std::cerr << (s.passed ? "PASS " : "FAIL ") << s.name << ": " << s.detail << "\n";
      return report.passed() ? 0 : kExitMath;
    }

    SharedOptions& o = *basis ? basis_opts
                       : *bracket ? bracket_opts
                       : *structure ? structure_opts
                       : *lambda ? lambda_opts
                                 : table_opts;
    const auto run = build_config(o);
    const auto format = lax::parse_format(o.format);
    const auto config = lax::materialize(run);
    lax::BasisCache cache(config);

    if (*basis) {
      lax::write_output(lax::export_basis(cache, run.degrees, format), o.out);
    } else if (*structure) {
      lax::write_output(lax::export_structure(cache, *sk, *sl, format), o.out);
    } else if (*lambda) {
      lax::write_output(lax::export_lambda(lax::construct_connection(config, run.max_pole), format), o.out);
    } else if (*table) {
      const auto form = load_or_build_lambda(config, run, table_lambda);
      lax::write_output(lax::export_cocycle_table(cache, form, run.degrees, format), o.out);
    } else {
      lax::RationalMatrixFunction left, right;
      int lo = run.degrees.lo;
      int hi = run.degrees.hi;
      if (!lhs_file.empty() || !rhs_file.empty()) {
        if (lhs_file.empty() || rhs_file.empty()) throw lax::ParseError("bracket needs both --lhs and --rhs");
        left = lax::function_from_json(config, read_json_file(lhs_file));
        right = lax::function_from_json(config, read_json_file(rhs_file));
      } else {
        if (!bk || !bi || !bl || !bj) throw lax::ParseError("bracket needs --lhs/--rhs or --k --i --l --j");
        const auto& bkk = cache.at(*bk);
        const auto& bll = cache.at(*bl);
        if (*bi >= bkk.dim() || *bj >= bll.dim()) throw lax::ParseError("basis index out of range");
        left = bkk.elements[*bi];
        right = bll.elements[*bj];
        lo = *bk + *bl - 1;
        hi = *bk + *bl + 1;
      }
      if (format != lax::ExportFormat::json) throw lax::ValidationError("bracket export supports json only");
      const auto result = lax::bracket(left, right);
      lax::Json components = lax::Json::array();
      for (const auto& [m, part] : lax::graded_decompose(cache, result, lo, hi))
        components.push_back(lax::Json{{"degree", m}, {"coefficients", lax::to_json(part.coefficients)}});
      lax::write_output(lax::dump(lax::Json{{"bracket", lax::to_json(result)}, {"components", components}}), o.out);
    }
    return 0;
  } catch (const lax::ParseError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lax::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const lax::LaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
}
