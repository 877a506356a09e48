#include <iostream>

#include "CLI11.hpp"
#include "qrw/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"qrwlab: quantum random walks on finite-dimensional bialgebras"};
  app.require_subcommand(1);

  std::string config, out = ".", demo;

  auto* verify = app.add_subcommand("verify", "Run the axiom and identity suite for a config");
  verify->add_option("--config", config, "Experiment config (JSON)")->required();
  verify->add_option("--out", out, "Directory for report.json");

  auto* sweep = app.add_subcommand("sweep", "Run the convergence sweep for a config");
  sweep->add_option("--config", config, "Experiment config (JSON)")->required();
  sweep->add_option("--out", out, "Directory for report.json, errors.csv, errors.dat")->required();

  auto* run_demo = app.add_subcommand("demo", "Write a ready-made config and run verify and sweep");
  run_demo->add_option("name", demo, "c-z2 | group-z2 | group-s3 | custom-file")->required();
  run_demo->add_option("--out", out, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*verify) return qrw::cmd_verify(config, out);
    if (*sweep) return qrw::cmd_sweep(config, out);
    return qrw::cmd_demo(demo, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
