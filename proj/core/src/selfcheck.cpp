// SPDX-License-Identifier: Apache-2.0
#include <folm/selfcheck.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include <folm/experiment.hpp>
#include <folm/interferometer.hpp>

namespace folm {

namespace {

using Rng = std::mt19937_64;

std::string expected_actual(double expected, double actual) {
  std::ostringstream ss;
  ss.precision(6);
  ss << "expected " << expected << ", actual " << actual;
  return ss.str();
}

CheckResult relative_check(const std::string& name, double actual, double printed,
                           double rel_tol) {
  const bool ok = std::abs(actual - printed) <= rel_tol * std::abs(printed);
  return {name, ok, expected_actual(printed, actual)};
}

Complex random_phase(Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, two_pi);
  return std::polar(1.0, u(rng));
}

Complex random_in_disk(Rng& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(radius * std::sqrt(u(rng)), two_pi * u(rng));
}

}  // namespace

std::vector<CheckResult> run_self_checks(std::uint64_t seed, double perturb) {
  std::vector<CheckResult> out;
  Rng rng(seed);
  const double miscal = 1.0 + perturb;
  const MaterialParams mat;
  const FieldParams field;

  out.push_back(relative_check("beat_length_7mm", miscal * beat_length(mat), 7.0e-3, 0.05));
  out.push_back(relative_check("fiber_delay_68mm",
                               miscal * fiber_length_for_delay(field, 1.47), 68e-3, 0.05));
  {
    const SphereParams sph;  // 125 um reference radius
    out.push_back(
        relative_check("theta_mz_3.2e-17", miscal * theta_mz(sph, field), 3.2e-17, 0.05));
  }
  {
    const SphereParams sph = SphereParams::from_radius_um(100.0);
    const double coeff =
        theta_ife(mat, sph, field, mat.lambda_0) / theta_mz(sph, field);
    out.push_back(relative_check("theta_ife_coeff_0.18", miscal * coeff, 0.18, 0.05));
  }
  {
    const SphereParams sph;
    const double t0 = magnon_angle_quantum(theta_mz(sph, field));
    const bool ok = t0 > 1e-10 && t0 < 1e-8;
    out.push_back({"theta_m0_order_1e-9", ok, expected_actual(1e-9, t0)});
  }
  {
    const CouplerParams c = CouplerParams::three_db();
    const double p_t = transmission_reflection(c, eta(1.0, 1.0)).p_T;
    out.push_back({"dark_port", std::abs(p_t) <= 1e-12, expected_actual(0.0, p_t)});
  }
  {
    const CouplerParams c = CouplerParams::three_db();
    const Complex chi = random_phase(rng);
    const double full = collapsed_transmission(c, chi, 1.0, CollapseModel{0.0}).p_T;
    const double unit = transmission_reflection(c, eta(chi, 1.0)).p_T;
    const double d1 = collapsed_transmission(c, chi, 1.0, CollapseModel{1.0}).p_T;
    const bool ok = full == 0.5 && d1 == unit;
    out.push_back({"collapse_endpoints", ok, expected_actual(0.5, full)});
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 100; ++i) {
      const CouplerParams c = CouplerParams::from_t_mag(std::sqrt(u(rng)));
      const Eigen::Matrix4cd s = scattering_matrix(c);
      worst = std::max(worst, (s.adjoint() * s - Eigen::Matrix4cd::Identity()).cwiseAbs().maxCoeff());
      worst = std::max(worst, (s - s.transpose()).cwiseAbs().maxCoeff());
    }
    out.push_back({"scattering_unitarity", worst <= 1e-12, expected_actual(0.0, worst)});
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const SphereParams sph;
    for (int i = 0; i < 100; ++i) {
      Orientation o{std::acos(2.0 * u(rng) - 1.0), two_pi * u(rng), 0.05 * u(rng),
                    two_pi * u(rng)};
      const JonesMatrix j = sphere_jones(birefringence(o, mat), sph, mat);
      worst = std::max(worst,
                       (j.adjoint() * j - JonesMatrix::Identity()).cwiseAbs().maxCoeff());
    }
    out.push_back({"sphere_jones_unitarity", worst <= 1e-12, expected_actual(0.0, worst)});
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.05, 0.95);
    for (int i = 0; i < 1000; ++i) {
      const CouplerParams c = CouplerParams::from_t_mag(std::sqrt(u(rng)));
      const Complex chi_p = random_in_disk(rng, 1.0);
      const Complex chi_m = random_in_disk(rng, 1.0);
      const Probabilities p = transmission_reflection(c, eta(chi_p, chi_m));
      worst = std::max(worst, std::abs(p.p_T + p.p_R - 1.0));
    }
    out.push_back({"probability_sum", worst <= 1e-12, expected_actual(0.0, worst)});
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      Orientation o{std::acos(2.0 * u(rng) - 1.0), two_pi * u(rng), 0.05 * u(rng),
                    two_pi * u(rng)};
      const BirefringenceVector b = birefringence(o, mat);
      const PauliDecomposition pd = pauli_reduce(transformed_dielectric(o, mat, mat.n_0));
      const Eigen::Vector3d kb = b.k_B();
      worst = std::max({worst, std::abs(pd.k0 - Complex(b.k_0)),
                        std::abs(pd.k(0) - Complex(kb.x())),
                        std::abs(pd.k(1) - Complex(kb.y())),
                        std::abs(pd.k(2) - Complex(kb.z()))});
    }
    out.push_back({"tensor_reduction", worst <= 1e-10, expected_actual(0.0, worst)});
  }
  {
    double worst = 0.0;
    std::uniform_real_distribution<double> u(0.25, 1.0);
    for (int i = 0; i < 50; ++i) {
      const CouplerParams c = CouplerParams::from_ratio(u(rng));
      const Complex ap = random_in_disk(rng, 4.0);
      const Complex am = random_in_disk(rng, 4.0);
      const double closed = schmidt_decompose(c, ap, am, 64).purity;
      const double oracle = purity_fock_oracle(c, ap, am, 64);
      worst = std::max(worst, std::abs(closed - oracle));
    }
    out.push_back({"purity_oracle_agreement", worst <= 1e-8, expected_actual(0.0, worst)});
  }
  {
    const FieldParams f;
    const CouplerParams c = CouplerParams::three_db();
    double worst = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double dt = (2.0 * k + 1.0) * pi / f.omega_m;
      const Complex alpha = random_in_disk(rng, 2.0);
      const Complex alpha_i = random_in_disk(rng, 2.0);
      const BranchAmplitudes br = branch_amplitudes(alpha, alpha_i, f, dt);
      const double purity = two_branch_purity(c, overlap_analytic(br.plus, br.minus));
      const double p_t = transmission_reflection(c, eta(1.0, overlap_analytic(br.plus, br.minus))).p_T;
      worst = std::max({worst, std::abs(purity - 1.0), std::abs(p_t)});
    }
    out.push_back({"recycling_undo", worst <= 1e-10, expected_actual(0.0, worst)});
  }
  {
    const FieldParams f;
    const Complex alpha_i(1.3, -0.4);
    const double dt = 0.37 * f.period();
    double lo = 2.0, hi = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Complex alpha = random_in_disk(rng, 2.0);
      const BranchAmplitudes br = branch_amplitudes(alpha, alpha_i, f, dt);
      const double p = two_branch_purity(CouplerParams::three_db(),
                                         overlap_analytic(br.plus, br.minus));
      lo = std::min(lo, p);
      hi = std::max(hi, p);
    }
    out.push_back({"alpha_independence", hi - lo < 1e-9, expected_actual(0.0, hi - lo)});
  }
  {
    const SphereParams sph;
    const double ratio = sph.optical_path() / beat_length(mat);
    const double dphi = ratio * magnon_angle_quantum(theta_mz(sph, field));
    // Re chi_P = cos(dphi/2); evaluate 1 - cos through the half-angle form.
    const double dev = 2.0 * std::pow(std::sin(dphi / 4.0), 2);
    const SopVector h = standard_sop('H');
    const Complex chi = chi_p(h, rotation(PoincareVector::UnitY(), 0.2),
                              rotation(PoincareVector::UnitY(), 0.2 + dphi));
    const bool ok = dev < 1e-16 && std::abs(chi.real() - 1.0) < 5e-16;
    out.push_back({"single_magnon_chi_p", ok, expected_actual(0.0, dev)});
  }
  {
    ExperimentConfig cfg = parse_config_text(default_config_text());
    cfg.scenario.perpendicular.alpha_i = Complex(1.0, 0.0);
    cfg.sweep = SweepAxis{"timing.delta_t_periods", 0.0, 1.0, 11, false};
    const auto a = run_experiment(cfg, 1);
    const auto b = run_experiment(cfg, 1);
    const auto c = run_experiment(cfg, 4);
    const bool ok = render_csv(a) == render_csv(b) && render_csv(a) == render_csv(c);
    out.push_back({"determinism", ok, ok ? "serial and parallel runs byte-identical"
                                         : "output differs between runs"});
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

}  // namespace folm
