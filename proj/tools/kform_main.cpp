#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "kforms/action.hpp"
#include "kforms/classify.hpp"
#include "kforms/invariants.hpp"
#include "kforms/parse.hpp"
#include "kforms/sample.hpp"
#include "kforms/table.hpp"
#include "kforms/validate.hpp"

namespace {

using kforms::Blade;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfinite = 3;

struct Options {
  std::optional<int> n;
  std::optional<int> k;
  bool json = false;
  std::uint64_t seed = 42;
  std::string catalog_dir;
};

void emit(const Json& report, bool json, const std::string& text) {
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

kforms::KForm parse_input_form(const std::string& expr, const Options& opt) {
  if (!opt.n) throw kforms::ParseError(0, "--n is required (forms do not carry their dimension)");
  return kforms::parse_form(expr, *opt.n, opt.k);
}

Json input_block(const std::string& expr, int n, int k) {
  Json in;
  in["expr"] = expr;
  in["n"] = n;
  in["k"] = k;
  return in;
}

int cmd_analyze(const std::string& expr, const Options& opt) {
  const kforms::KForm alpha = parse_input_form(expr, opt);
  const kforms::Subspace ann = kforms::annihilator(alpha);
  const int kdim = ann.dim();
  const int rank = kforms::orbit_tangent_rank(alpha);
  const kforms::Fingerprint f = kforms::fingerprint(alpha);
  Json rep;
  rep["command"] = "analyze";
  rep["input"] = input_block(expr, alpha.n, alpha.k);
  Json result;
  result["degenerate"] = kdim > 0;
  result["kernel_dim"] = kdim;
  result["annihilator"] = kforms::format_subspace(ann);
  result["stable"] = f["stable"];
  result["stabilizer_dim"] = alpha.n * alpha.n - rank;
  result["orbit_tangent_rank"] = rank;
  result["fingerprint"] = f;
  rep["result"] = std::move(result);
  rep["status"] = kExitOk;

  std::string text;
  text += "form: " + kforms::format_form(alpha) + "  (n = " + std::to_string(alpha.n) +
          ", k = " + std::to_string(alpha.k) + ")\n";
  text += "degenerate: " + std::string(kdim > 0 ? "yes" : "no") + "  (kernel dim " +
          std::to_string(kdim) + ", annihilator " + kforms::format_subspace(ann) + ")\n";
  text += "stable: " + std::string(f["stable"].get<bool>() ? "yes" : "no") + "  (tangent rank " +
          std::to_string(rank) + ")\n";
  text += "stabilizer dim: " + std::to_string(alpha.n * alpha.n - rank) + "\n";
  text += "fingerprint: " + kforms::fingerprint_key(f) + "\n";
  emit(rep, opt.json, text);
  return kExitOk;
}

int cmd_classify(const std::string& expr, const Options& opt) {
  const kforms::KForm alpha = parse_input_form(expr, opt);
  const kforms::Classification c = kforms::classify(alpha);
  Json rep;
  rep["command"] = "classify";
  rep["input"] = input_block(expr, alpha.n, alpha.k);
  Json result;
  result["orbit_id"] = c.orbit_id.empty() ? Json(nullptr) : Json(c.orbit_id);
  result["certainty"] = c.certainty;
  result["candidates"] = c.candidates;
  rep["result"] = std::move(result);
  rep["status"] = kExitOk;

  std::string text;
  if (c.certainty == "ambiguous") {
    text = "ambiguous among:";
    for (const std::string& id : c.candidates) text += " " + id;
    text += "\n";
  } else {
    text = "orbit: " + c.orbit_id + "  (" + c.certainty + ")\n";
  }
  emit(rep, opt.json, text);
  return kExitOk;
}

int cmd_dual(const std::string& expr, const Options& opt) {
  if (!opt.n) throw kforms::ParseError(0, "--n is required");
  const kforms::KVector xi = kforms::parse_multivector(expr, *opt.n, opt.k);
  const kforms::KForm rho = kforms::hodge_dual(xi);
  Json rep;
  rep["command"] = "dual";
  rep["input"] = input_block(expr, xi.n, xi.k);
  Json result;
  result["form"] = kforms::format_form(rho);
  result["k"] = rho.k;
  rep["result"] = std::move(result);
  rep["status"] = kExitOk;
  emit(rep, opt.json, kforms::format_form(rho) + "\n");
  return kExitOk;
}

int cmd_act(const std::string& matrix, const std::string& expr, const Options& opt) {
  const kforms::QMat m = kforms::parse_matrix(matrix);
  Options with_n = opt;
  if (!with_n.n) with_n.n = m.rows;
  const kforms::KForm alpha = parse_input_form(expr, with_n);
  const kforms::GLElement g = kforms::make_gl(m);
  const kforms::KForm out = kforms::act(g, alpha);
  Json rep;
  rep["command"] = "act";
  rep["input"] = input_block(expr, alpha.n, alpha.k);
  rep["input"]["matrix"] = kforms::format_matrix(m);
  Json result;
  result["form"] = kforms::format_form(out);
  result["det"] = kforms::format_rational(g.det);
  rep["result"] = std::move(result);
  rep["status"] = kExitOk;
  emit(rep, opt.json, kforms::format_form(out) + "\n");
  return kExitOk;
}

int cmd_table(bool verify, const Options& opt) {
  const int n_max = opt.n.value_or(9);
  const auto table = kforms::theorem_table(n_max);
  Json rep;
  rep["command"] = "table";
  rep["input"] = Json::object({{"n_max", n_max}, {"verify", verify}});
  Json result;
  result["table"] = kforms::table_json(table);
  int status = kExitOk;
  std::string text = kforms::format_table(table);
  if (verify) {
    const auto mismatches = kforms::verify_table(table);
    result["mismatches"] = mismatches;
    result["verified"] = mismatches.empty();
    if (mismatches.empty()) {
      text += "all cells match the published table\n";
    } else {
      for (const std::string& m : mismatches) text += m + "\n";
      status = kExitVerify;
    }
  }
  rep["result"] = std::move(result);
  rep["status"] = status;
  emit(rep, opt.json, text);
  return status;
}

int cmd_selfcheck(int trials, const Options& opt) {
  const Json result = kforms::selfcheck(opt.seed, trials);
  Json rep;
  rep["command"] = "selfcheck";
  rep["input"] = Json::object({{"seed", opt.seed}, {"trials", trials}});
  rep["result"] = result;
  const bool pass = result["pass"].get<bool>();
  const int status = pass ? kExitOk : kExitVerify;
  rep["status"] = status;
  std::string text;
  for (const Json& s : result["suites"]) {
    text += s["suite"].get<std::string>() + ": " +
            (s["pass"].get<bool>() ? "pass" : "FAIL") + "\n";
    for (const Json& f : s["failures"]) text += "  " + f.get<std::string>() + "\n";
  }
  text += pass ? "selfcheck: pass\n" : "selfcheck: FAIL\n";
  emit(rep, opt.json, text);
  return status;
}

int cmd_sample(const std::string& id, const Options& opt) {
  const kforms::KForm out = kforms::sample_orbit(id, opt.seed);
  Json rep;
  rep["command"] = "sample";
  rep["input"] = Json::object({{"orbit_id", id}, {"seed", opt.seed}});
  Json result;
  result["form"] = kforms::format_form(out);
  result["n"] = out.n;
  result["k"] = out.k;
  rep["result"] = std::move(result);
  rep["status"] = kExitOk;
  emit(rep, opt.json, kforms::format_form(out) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GL-orbit analysis of alternating k-forms"};
  app.require_subcommand(1);
  Options opt;
  int n_flag = 0;
  int k_flag = -1;
  app.add_option("--n", n_flag, "ambient dimension")->check(CLI::PositiveNumber);
  app.add_option("--k", k_flag, "grade (required only for the zero form)");
  app.add_flag("--json", opt.json, "canonical JSON output");
  app.add_option("--seed", opt.seed, "RNG seed");
  app.add_option("--catalog", opt.catalog_dir, "directory overriding the curated catalog files");

  std::string expr;
  std::string matrix;
  std::string orbit_id;
  bool verify = false;
  int trials = 50;

  CLI::App* analyze = app.add_subcommand("analyze", "invariants of one form");
  analyze->add_option("expr", expr, "form expression")->required();
  CLI::App* classify = app.add_subcommand("classify", "orbit membership");
  classify->add_option("expr", expr, "form expression")->required();
  CLI::App* dual = app.add_subcommand("dual", "c(xi) = iota_xi Omega");
  dual->add_option("expr", expr, "multivector expression")->required();
  CLI::App* act = app.add_subcommand("act", "apply a GL element");
  act->add_option("--matrix", matrix, "matrix, rows ';'-separated")->required();
  act->add_option("expr", expr, "form expression")->required();
  CLI::App* table = app.add_subcommand("table", "orbit-count table");
  table->add_flag("--verify", verify, "compare against the published constants");
  CLI::App* selfcheck = app.add_subcommand("selfcheck", "randomized property suites");
  selfcheck->add_option("--trials", trials, "trials per suite and case");
  CLI::App* sample = app.add_subcommand("sample", "seeded random orbit element");
  sample->add_option("orbit_id", orbit_id, "catalog entry id, e.g. 7-3-09")->required();

  // Let the global options (--n, --json, ...) appear after the subcommand.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }
  if (app.count("--n") > 0) opt.n = n_flag;
  if (app.count("--k") > 0) opt.k = k_flag;
  if (!opt.catalog_dir.empty()) kforms::set_catalog_directory(opt.catalog_dir);

  try {
    if (analyze->parsed()) return cmd_analyze(expr, opt);
    if (classify->parsed()) return cmd_classify(expr, opt);
    if (dual->parsed()) return cmd_dual(expr, opt);
    if (act->parsed()) return cmd_act(matrix, expr, opt);
    if (table->parsed()) return cmd_table(verify, opt);
    if (selfcheck->parsed()) return cmd_selfcheck(trials, opt);
    if (sample->parsed()) return cmd_sample(orbit_id, opt);
  } catch (const kforms::InfiniteFamilyError& e) {
    std::cerr << "error: infinite orbit family (table row \"" << e.row() << "\")\n";
    return kExitInfinite;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
