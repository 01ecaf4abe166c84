// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <folm/interferometer.hpp>

namespace folm {

// Batch front end: experiment configuration files, parameter sweeps, and
// machine-readable result tables. Configs are JSON; results are CSV or JSON
// with floating-point values printed at full round-trip precision, so a
// given config always reproduces a byte-identical output file.

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepAxis {
  std::string parameter;
  double start = 0.0;
  double stop = 0.0;
  int count = 2;
  bool log_scale = false;

  std::vector<double> values() const;
};

enum class OutputFormat { csv, json };

struct OutputSpec {
  std::string path = "results.csv";
  OutputFormat format = OutputFormat::csv;
};

struct ExperimentConfig {
  Scenario scenario;
  std::optional<SweepAxis> sweep;
  std::optional<SweepAxis> inner;  // optional second swept axis
  OutputSpec output;
  std::uint64_t seed = 20260808ull;
};

/// One emitted table row: every input echoed, then the observables.
struct ResultRow {
  int index = 0;
  std::string configuration;
  double Q_s, n_0, lambda_0, l_A;
  double R_s, M_s;
  double omega_m, gamma_e;
  double t1, t2, delta_t, n_F, t_p;
  double t_mag, r_mag, upsilon;
  double collapse_d;
  double alpha_re, alpha_im, alpha_i_re, alpha_i_im, alpha_i_mag;
  double theta_m1, phi_m1, delta_theta_m;
  double ife_enhancement;
  double chi_P_re, chi_P_im, chi_M_re, chi_M_im;
  double eta;
  double p_T_unitary, p_R_unitary, p_T_collapsed, p_R_collapsed;
  double purity_closed_form;
  std::optional<double> purity_oracle;
  double intermediate_purity;
  double L_F, theta_mz, theta_m0, theta_IFE, omega_m_tp_ratio, l_P, l_e_over_l_P;
  std::string warnings;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
std::string default_config_text();

/// Names accepted as sweep parameters.
const std::vector<std::string>& sweepable_parameters();
/// Applies one swept value to a scenario; throws ConfigError on unknown names.
void apply_parameter(Scenario& s, const std::string& parameter, double value);

/// Evaluates every sweep point (row order is by sweep index, regardless of
/// the number of worker threads) and enforces p_T + p_R = 1 per row.
std::vector<ResultRow> run_experiment(const ExperimentConfig& cfg, int threads = 1);

std::string render_csv(const std::vector<ResultRow>& rows);
std::string render_json(const std::vector<ResultRow>& rows);
std::string render_rows(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows);

}  // namespace folm
