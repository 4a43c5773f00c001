#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "cstardyn/cli/commands.hpp"

namespace cli = cstardyn::cli;

int main(int argc, char** argv) {
  CLI::App app{"Finite C*-dynamical systems: equivariant representations, multipliers, crossed products"};
  cli::RunConfig config;
  std::string system_file, inline_json, name, out;
  app.add_option("command", config.command, "verify | example | trace-cone | pd")->required();
  app.add_option("--system", system_file, "JSON payload file");
  app.add_option("--inline", inline_json, "JSON payload given on the command line");
  app.add_option("--name", name, "example name: omega_n or sigma_n");
  app.add_option("--n", config.n, "example size")->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();
  app.add_option("--tol", config.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--out", out, "write the JSON report to this file instead of stdout");
  app.add_option("--count", config.count, "trace-cone: Omega_2 samples")->capture_default_str();
  app.add_option("--sigma-count", config.sigma_count, "trace-cone: Sigma_2 samples")->capture_default_str();
  app.add_option("--trials", config.trials, "pd: sampled-definition draws")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }
  if (!system_file.empty()) config.system_file = system_file;
  if (!inline_json.empty()) config.inline_json = inline_json;
  if (!name.empty()) config.name = name;
  if (!out.empty()) config.out = out;

  const auto start = std::chrono::steady_clock::now();
  cli::CommandResult result;
  try {
    result = cli::run_command(config);
  } catch (const cli::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kUsageError;
  }
  const std::string text = result.report.dump(2) + "\n";
  if (config.out) {
    std::ofstream file(*config.out);
    if (!file) {
      std::cerr << "error: cannot write " << *config.out << "\n";
      return cli::kUsageError;
    }
    file << text;
  } else {
    std::cout << text;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cerr << result.summary << " [" << seconds << " s]\n";
  return result.exit_code;
}
