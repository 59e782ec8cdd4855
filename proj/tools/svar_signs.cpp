// svar-signs: Bayesian structural VAR estimation with sign, zero and
// narrative restrictions.
//
// Subcommands:
//   run <config.json>            estimate and write outputs
//   validate <config.json>       parse and check a config against its data
//   replicate-optimism <outdir>  run the bundled optimism-shock example
//
// Exit codes: 0 success, 1 configuration error, 2 numerical error,
// 3 no rotation satisfied the restrictions.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "svar/pipeline.hpp"

#include "optimism_data.hpp"

namespace {

const char* kOptimismConfig = R"JSON({
  "data": {"path": "optimism.csv", "start": "1955Q1", "frequency": 4},
  "model": {"p": 4},
  "restrictions": {
    "sign_irf": [
      [1, 1, 0, 0],
      [2, 1, 0, 1]
    ],
    "narrative": [
      {"kind": "shock-sign", "sign": 1, "shock": 1, "variable": 0,
       "start": "1961Q1", "length": 1},
      {"kind": "hd-most-important", "sign": 1, "shock": 1, "variable": 2,
       "start": "1961Q1", "length": 1}
    ]
  },
  "hyper": {
    "estimate": {"mu": true, "delta": true, "lambda": true, "psi": false},
    "S": 6000,
    "burn_in": 2000
  },
  "sampler": {"S": 10000, "max_tries": 100, "M": 1000, "seed": 42, "threads": 4},
  "outputs": {
    "directory": ".",
    "probability": 0.68,
    "irf_horizon": 20,
    "fevd_horizon": 20,
    "forecast_horizon": 8
  }
})JSON";

int run_config(const std::string& path) {
  svar::RunConfig cfg = svar::load_run_config(path);
  svar::RunResult res = svar::run(cfg);
  std::cout << "retained " << res.draws_retained << "/" << res.draws_requested
            << " draws (acceptance " << res.acceptance_rate << ", ess " << res.ess
            << ") in " << res.runtime_seconds << " s\n";
  return 0;
}

int replicate_optimism(const std::string& outdir) {
  std::filesystem::create_directories(outdir);
  {
    std::ofstream data(outdir + "/optimism.csv");
    if (!data) throw svar::ConfigError("cannot write '" + outdir + "/optimism.csv'");
    data << svar::bundled::optimism_csv;
  }
  std::string cfg_path = outdir + "/optimism_config.json";
  {
    std::ofstream cfg(cfg_path);
    if (!cfg) throw svar::ConfigError("cannot write '" + cfg_path + "'");
    cfg << kOptimismConfig << "\n";
  }
  svar::RunConfig cfg = svar::load_run_config(cfg_path);
  cfg.data_path = outdir + "/optimism.csv";
  cfg.out_dir = outdir;
  svar::RunResult res = svar::run(cfg);
  std::cout << "optimism replication: retained " << res.draws_retained << "/"
            << res.draws_requested << " draws (acceptance " << res.acceptance_rate
            << ", ess " << res.ess << ") in " << res.runtime_seconds << " s\n"
            << "outputs written to " << outdir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bayesian SVAR with sign, zero and narrative restrictions"};
  app.require_subcommand(1);

  std::string run_path, validate_path, outdir;
  CLI::App* run_cmd = app.add_subcommand("run", "estimate a model from a JSON config");
  run_cmd->add_option("config", run_path, "path to config JSON")->required();
  CLI::App* val_cmd =
      app.add_subcommand("validate", "check a config against its data, no sampling");
  val_cmd->add_option("config", validate_path, "path to config JSON")->required();
  CLI::App* rep_cmd =
      app.add_subcommand("replicate-optimism", "run the bundled optimism example");
  rep_cmd->add_option("outdir", outdir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run_cmd) return run_config(run_path);
    if (*val_cmd) {
      svar::validate_run(svar::load_run_config(validate_path));
      return 0;
    }
    return replicate_optimism(outdir);
  } catch (const svar::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const svar::ZeroAcceptedError& e) {
    std::cerr << "identification failed: " << e.what() << "\n";
    return 3;
  } catch (const svar::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  }
}
