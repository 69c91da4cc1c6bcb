// meandist: batch evaluation of the mean-distance functional and its bounds.
//
//   meandist model-eval --space torus:1,1
//   meandist mesh-eval --generator icosphere:3 --source all
//   meandist verify --suite section2
//   meandist dumbbell-sweep --L 5,10,20,40,80 --rule cube --mode asymptotic
//
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include "meandist/commands.hpp"
#include "meandist/errors.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw meandist::InputError("cannot write " + path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace meandist;
  CLI::App app{"Mean distance functional f(p) = integral of d(p, x) dv: evaluation and bounds"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "json";
  std::string out_path;
  const std::vector<std::string> formats{"json", "csv"};

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
    cmd->add_option("--out", out_path, "Write the report to this file instead of stdout");
  };

  ModelEvalConfig model;
  auto* model_cmd = app.add_subcommand("model-eval", "f, d, V and bound checks on a model space");
  model_cmd->add_option("--space", model.space,
                        "circle:l | sphere:n,k | torus:a,b | ball:n,R | hball:n,R | dumbbell:L,C")
      ->required();
  model_cmd->add_option("--point", model.point, "p|q (dumbbell), s (circle), x,y (torus)");
  model_cmd->add_option("--tolerance", model.tolerance, "Relative equality band for the sphere")
      ->capture_default_str();
  add_common(model_cmd);

  MeshEvalConfig mesh;
  auto* mesh_cmd = app.add_subcommand("mesh-eval", "f per source and bound checks on a mesh");
  auto* mesh_opt = mesh_cmd->add_option("--mesh", mesh.mesh_path, "OFF or OBJ triangle mesh");
  auto* gen_opt = mesh_cmd->add_option(
      "--generator", mesh.generator,
      "icosphere:levels | cycle:N,l | torus:N,a,b | patch:N,side | dumbbell:L,C");
  mesh_opt->excludes(gen_opt);
  mesh_cmd->add_option("--source", mesh.source, "vertex id | name | all | sample:k[,seed]")
      ->capture_default_str();
  mesh_cmd->add_option("--distances", mesh.distances, "graph | fmm | oracle")
      ->check(CLI::IsMember({"graph", "fmm", "oracle"}))
      ->capture_default_str();
  mesh_cmd->add_option("--dim", mesh.dim, "Dimension used for c(n); defaults to the mesh hint");
  mesh_cmd->add_option("--seed", mesh.seed, "Seed for sampled sources and diameters")
      ->capture_default_str();
  mesh_cmd->add_option("--write-off", mesh.write_off, "Also write the input mesh as OFF");
  add_common(mesh_cmd);

  std::string suite = "all";
  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite,
                         "all | t1_1 | p2_5 | t4_1 | t4_2 | lemma3_1 | section2 | bishop_gromov")
      ->capture_default_str();
  verify_cmd->add_option("--tolerance", verify.monotone_tolerance, "Monotonicity band")
      ->capture_default_str();
  verify_cmd->add_option("--slack", verify.slack, "Absolute slack for inequalities")
      ->capture_default_str();
  add_common(verify_cmd);

  SweepConfig sweep_config;
  std::string lengths = "5,10,20,40,80";
  std::string sweep_format = "csv";
  auto* sweep_cmd = app.add_subcommand("dumbbell-sweep", "ratio_p and ratio_q along growing L");
  sweep_cmd->add_option("--L", lengths, "Increasing neck lengths")->capture_default_str();
  sweep_cmd->add_option("--rule", sweep_config.rule, "cube (C = 1/L^3) | fixed:C")
      ->capture_default_str();
  sweep_cmd->add_option("--mode", sweep_config.mode, "asymptotic | mesh")
      ->check(CLI::IsMember({"asymptotic", "mesh"}))
      ->capture_default_str();
  sweep_cmd->add_option("--format", sweep_format, "Output format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "Write the table to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Report report;
    if (model_cmd->parsed()) {
      report = model_eval(model);
    } else if (mesh_cmd->parsed()) {
      report = mesh_eval(mesh);
    } else if (verify_cmd->parsed()) {
      report = verify_report(parse_suite(suite), verify);
    } else {
      sweep_config.lengths = parse_list(lengths);
      const auto rows = dumbbell_sweep(sweep_config);
      emit(sweep_format == "csv" ? sweep_csv(rows) : sweep_json(rows, sweep_inputs(sweep_config)),
           out_path);
      return 0;
    }
    emit(format == "csv" ? to_csv(report) : to_json(report), out_path);
    return report_passed(report) ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
