// SPDX-License-Identifier: Apache-2.0
//
// Batch front end for the loop-mirror simulator: runs experiment configs,
// parameter sweeps, and the built-in invariant/regression self-checks.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <folm/experiment.hpp>
#include <folm/selfcheck.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumericalGuard = 2;
constexpr int kExitSelfCheck = 3;

int run_command(const std::string& config_path, const std::string& output_override,
                const std::string& format_override, bool oracle, int fock_dim,
                std::uint64_t seed, bool seed_given, int threads) {
  folm::ExperimentConfig cfg = folm::parse_config_file(config_path);
  if (!output_override.empty()) cfg.output.path = output_override;
  if (!format_override.empty()) {
    if (format_override == "csv") cfg.output.format = folm::OutputFormat::csv;
    else if (format_override == "json") cfg.output.format = folm::OutputFormat::json;
    else throw folm::ConfigError("--format expects 'csv' or 'json'");
  }
  if (oracle) cfg.scenario.oracle = true;
  if (fock_dim > 0) cfg.scenario.fock_dim = fock_dim;
  if (seed_given) cfg.seed = seed;

  const auto rows = folm::run_experiment(cfg, threads);
  const std::string text = folm::render_rows(cfg, rows);

  if (cfg.output.path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output.path, std::ios::binary);
    if (!out) throw folm::ConfigError("cannot open output file: " + cfg.output.path);
    out << text;
  }

  std::set<std::string> warned;
  for (const auto& row : rows)
    if (!row.warnings.empty() && warned.insert(row.warnings).second)
      std::cerr << "warning: " << row.warnings << "\n";
  std::cerr << "wrote " << rows.size() << " row" << (rows.size() == 1 ? "" : "s") << " to "
            << cfg.output.path << "\n";
  return kExitOk;
}

int check_command(std::uint64_t seed, double perturb, bool verbose) {
  const auto results = folm::run_self_checks(seed, perturb);
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (verbose || !r.pass) std::cout << "  (" << r.detail << ")";
    std::cout << "\n";
  }
  const bool ok = folm::all_passed(results);
  std::cout << (ok ? "all checks passed" : "SELF-CHECK FAILURES PRESENT") << "\n";
  return ok ? kExitOk : kExitSelfCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber-loop-mirror / magnetic-sphere interferometer simulator"};
  app.require_subcommand(1);

  std::string config_path, output_override, format_override;
  bool oracle = false;
  int fock_dim = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  double perturb = 0.0;
  bool verbose = false;

  auto* run = app.add_subcommand("run", "Evaluate a config file and write the result table");
  run->add_option("config", config_path, "JSON experiment config")->required();
  run->add_option("--output", output_override, "Output path ('-' for stdout)");
  run->add_option("--format", format_override, "Output format: csv | json");
  run->add_flag("--oracle", oracle, "Also compute the truncated-Fock purity oracle per row");
  run->add_option("--fock-dim", fock_dim, "Override the Fock truncation dimension");
  auto* seed_opt = run->add_option("--seed", seed, "Override the config seed");
  run->add_option("--threads", threads, "Worker threads for sweep points")
      ->check(CLI::PositiveNumber);

  auto* check = app.add_subcommand("check", "Run the invariant and regression self-checks");
  check->add_option("--seed", seed, "Seed for the randomized checks")
      ->default_val(std::uint64_t{20260808});
  check->add_option("--perturb", perturb,
                    "Inject a relative miscalibration into reference comparisons (testing aid)");
  check->add_flag("-v,--verbose", verbose, "Print details for passing checks too");

  auto* defaults = app.add_subcommand("defaults", "Print the default config");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(run))
      return run_command(config_path, output_override, format_override, oracle, fock_dim, seed,
                         seed_opt->count() > 0, threads);
    if (app.got_subcommand(check)) return check_command(seed, perturb, verbose);
    if (app.got_subcommand(defaults)) {
      std::cout << folm::default_config_text();
      return kExitOk;
    }
  } catch (const folm::NumericalGuardError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return kExitNumericalGuard;
  } catch (const folm::TruncationError& e) {
    std::cerr << "numerical guard: " << e.what() << "\n";
    return kExitNumericalGuard;
  } catch (const folm::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
