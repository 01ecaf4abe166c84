// SPDX-License-Identifier: Apache-2.0
#include <folm/interferometer.hpp>

#include <cmath>
#include <stdexcept>

namespace folm {

using namespace std::complex_literals;

CouplerParams CouplerParams::from_ratio(double upsilon) {
  CouplerParams c{upsilon};
  c.validate();
  return c;
}

CouplerParams CouplerParams::from_t_mag(double t_mag) {
  if (!(t_mag > 0.0) || t_mag > 1.0)
    throw std::invalid_argument("coupler: |t| must lie in (0, 1]");
  const double t2 = t_mag * t_mag;
  return from_ratio((1.0 - t2) / t2);
}

CouplerParams CouplerParams::from_magnitudes(double t_mag, double r_mag) {
  const double sum = t_mag * t_mag + r_mag * r_mag;
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("coupler: |t|^2 + |r|^2 must equal 1 (got " +
                                std::to_string(sum) + ")");
  return from_t_mag(t_mag);
}

void CouplerParams::validate() const {
  if (!(upsilon >= 0.0) || !std::isfinite(upsilon))
    throw std::invalid_argument("coupler: |r/t|^2 must be finite and >= 0");
}

Eigen::Matrix4cd scattering_matrix(const CouplerParams& c) {
  const Complex t = c.t(), r = c.r();
  Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
  s(0, 2) = t; s(0, 3) = r;
  s(1, 2) = r; s(1, 3) = t;
  s(2, 0) = t; s(2, 1) = r;
  s(3, 0) = r; s(3, 1) = t;
  return s;
}

double collapsed_eta(Complex chi_P, Complex chi_M, const CollapseModel& cm) {
  return (1.0 - cm.d * (chi_P * chi_M).real()) / 2.0;
}

double eta(Complex chi_P, Complex chi_M) { return collapsed_eta(chi_P, chi_M, CollapseModel{1.0}); }

Probabilities transmission_reflection(const CouplerParams& c, double eta) {
  const double t2 = c.t2(), r2 = c.r2();
  const double diff = t2 - r2;
  return Probabilities{diff * diff + 4.0 * t2 * r2 * eta, 4.0 * t2 * r2 * (1.0 - eta)};
}

void CollapseModel::validate() const {
  if (!(d >= 0.0 && d <= 1.0))
    throw std::invalid_argument("collapse_d must lie in [0, 1]");
}

Probabilities collapsed_transmission(const CouplerParams& c, Complex chi_P, Complex chi_M,
                                     const CollapseModel& cm) {
  cm.validate();
  return transmission_reflection(c, collapsed_eta(chi_P, chi_M, cm));
}

FinalState final_state_symbolic(const CouplerParams& c, Complex chi_P, Complex chi_M) {
  const Complex t = c.t(), r = c.r();
  FinalState f;
  f.amp_a1_cw = t * r;   // clockwise branch exits a1 with amplitude t r'
  f.amp_a1_ccw = r * t;  // counter-clockwise branch, r t'
  f.amp_a2_cw = t * t;   // t t'
  f.amp_a2_ccw = r * r;  // r r'
  f.overlaps = BranchOverlaps{chi_P, chi_M, eta(chi_P, chi_M)};
  const Probabilities p = transmission_reflection(c, f.overlaps.eta);
  f.p_T = p.p_T;
  f.p_R = p.p_R;
  return f;
}

double two_branch_purity(const CouplerParams& c, Complex mu) {
  const double t2 = c.t2();
  const double ups = c.upsilon;
  const double mu_r = mu.real(), mu_i = mu.imag();
  const double nu_p = 2.0 * (1.0 + mu_r);
  const double nu_m = 2.0 * (1.0 - mu_r);
  const double v1_sq = t2 * t2 * ups * nu_p;
  const double w_sq = (1.0 - ups) * (1.0 - ups) + ups * nu_m;
  const double v2_sq = t2 * t2 * w_sq;
  if (v1_sq < 1e-30 || v2_sq < 1e-30) return 1.0 - 2.0 * v1_sq * v2_sq;
  // <m1|m2> = [(1-ups)(1+mu') - i (1+ups) mu''] / sqrt(nu_p w_sq)
  const double num = (1.0 - ups) * (1.0 + mu_r) * (1.0 - ups) * (1.0 + mu_r) +
                     (1.0 + ups) * (1.0 + ups) * mu_i * mu_i;
  const double m12_sq = num / (nu_p * w_sq);
  return 1.0 - 2.0 * v1_sq * v2_sq * (1.0 - m12_sq);
}

double two_branch_purity_vectors(const CouplerParams& c, const Eigen::VectorXcd& ket_plus,
                                 const Eigen::VectorXcd& ket_minus) {
  const Complex t = c.t(), r = c.r();
  const Eigen::VectorXcd u = (t * r) * ket_plus + (r * t) * ket_minus;   // a1 component
  const Eigen::VectorXcd w = (t * t) * ket_plus + (r * r) * ket_minus;  // a2 component
  const double uu = u.squaredNorm();
  const double ww = w.squaredNorm();
  const double uw = std::norm(u.dot(w));
  return uu * uu + ww * ww + 2.0 * uw;
}

SchmidtData schmidt_decompose(const CouplerParams& c, Complex alpha_plus, Complex alpha_minus,
                              int dim) {
  check_truncation(alpha_plus, dim);
  check_truncation(alpha_minus, dim);

  SchmidtData out;
  out.mu = overlap_analytic(alpha_plus, alpha_minus);
  out.nu_plus = 2.0 * (1.0 + out.mu.real());
  out.nu_minus = 2.0 * (1.0 - out.mu.real());

  const double t2 = c.t2();
  const double ups = c.upsilon;
  const FockState f_plus = coherent_state(alpha_plus, dim);
  const FockState f_minus = coherent_state(alpha_minus, dim);

  const FockState g1 = f_plus + f_minus;
  if (out.nu_plus < 1e-14) {
    // Degenerate normalization: fall back on the numerically computed norm.
    const double g1n = g1.norm();
    out.v1 = 1i * t2 * std::sqrt(ups) * g1n;
    out.m1 = g1n > 1e-15 ? FockState(g1 / g1n) : f_plus;
  } else {
    out.v1 = 1i * t2 * std::sqrt(ups * out.nu_plus);
    out.m1 = g1 / std::sqrt(out.nu_plus);
  }

  const double w_sq = (1.0 - ups) * (1.0 - ups) + ups * out.nu_minus;
  const FockState g2 = f_plus - ups * f_minus;
  if (w_sq < 1e-14) {
    const double g2n = g2.norm();
    out.v2 = t2 * g2n;
    out.m2 = g2n > 1e-15 ? FockState(g2 / g2n) : f_plus;
  } else {
    out.v2 = t2 * std::sqrt(w_sq);
    out.m2 = g2 / std::sqrt(w_sq);
  }

  out.purity = two_branch_purity(c, out.mu);
  return out;
}

double purity_symmetric(Complex alpha_i, const FieldParams& f, double delta_t) {
  const double cos_half = std::cos(f.omega_m * delta_t / 2.0);
  return (1.0 + std::exp(-4.0 * std::norm(alpha_i) * cos_half * cos_half)) / 2.0;
}

double purity_fock_oracle(const CouplerParams& c, Complex alpha_plus, Complex alpha_minus,
                          int dim) {
  return two_branch_purity_vectors(c, coherent_state(alpha_plus, dim),
                                   coherent_state(alpha_minus, dim));
}

// ---------------------------------------------------------------------------

void Scenario::validate() const {
  material.validate();
  sphere.validate();
  field.validate();
  timing.validate();
  coupler.validate();
  collapse.validate();
  if (configuration == Configuration::perpendicular) {
    if (!(perpendicular.ife_enhancement > 0.0))
      throw std::invalid_argument("perpendicular.ife_enhancement must be > 0");
  }
  if (fock_dim && *fock_dim < 4)
    throw std::invalid_argument("fock_dim must be >= 4");
}

namespace {

ScenarioResult common_result(const Scenario& s) {
  ScenarioResult r{};
  r.L_F = fiber_length_for_delay(s.field, s.timing.n_F);
  r.theta_mz_value = theta_mz(s.sphere, s.field);
  r.theta_m0 = magnon_angle_quantum(r.theta_mz_value);
  const double enh = s.configuration == Configuration::perpendicular
                         ? s.perpendicular.ife_enhancement
                         : 1.0;
  r.theta_ife_value = theta_ife(s.material, s.sphere, s.field, s.material.lambda_0, enh);
  r.omega_m_tp = s.timing.pulse_shortness(s.field);
  r.beat_length_value = beat_length(s.material);
  r.l_e_over_l_p = s.sphere.optical_path() / r.beat_length_value;
  if (r.omega_m_tp >= 0.1)
    r.warnings.push_back("omega_m * t_p = " + std::to_string(r.omega_m_tp) +
                         " >= 0.1; the instantaneous-kick treatment assumes a short pulse");
  return r;
}

void finish_probabilities(const Scenario& s, ScenarioResult& r) {
  r.eta = eta(r.chi_P, r.chi_M);
  const Probabilities unitary = transmission_reflection(s.coupler, r.eta);
  r.p_T_unitary = unitary.p_T;
  r.p_R_unitary = unitary.p_R;
  const Probabilities col = collapsed_transmission(s.coupler, r.chi_P, r.chi_M, s.collapse);
  r.p_T_collapsed = col.p_T;
  r.p_R_collapsed = col.p_R;
}

ScenarioResult run_parallel(const Scenario& s) {
  ScenarioResult r = common_result(s);

  const double dtheta = s.parallel.delta_theta_m.value_or(r.theta_m0);
  const double dt = s.timing.delta_t();
  Orientation o1{0.0, 0.0, s.parallel.theta_m1, s.parallel.phi_m1};
  Orientation o2 = o1;
  o2.theta_m = s.parallel.theta_m1 + dtheta;
  if (s.parallel.precess) o2.phi_m = s.parallel.phi_m1 - s.field.omega_m * dt;
  if (!o1.theta_m_small() || !o2.theta_m_small())
    r.warnings.push_back("magnetization tilt exceeds 0.3 rad; the first-order birefringence "
                         "forms lose accuracy");

  const JonesMatrix j1 = sphere_jones(birefringence(o1, s.material), s.sphere, s.material);
  const JonesMatrix j2 = sphere_jones(birefringence(o2, s.material), s.sphere, s.material);
  const SopVector p_i = standard_sop(s.parallel.sop);

  r.chi_P = chi_p(p_i, j1, j2);
  r.chi_M = 1.0;
  finish_probabilities(s, r);

  r.purity_closed_form = two_branch_purity(s.coupler, r.chi_P * r.chi_M);
  if (s.oracle) {
    const SopVector p_plus = j1 * p_i;
    const SopVector p_minus = j2 * p_i;
    r.purity_oracle = two_branch_purity_vectors(s.coupler, p_plus, p_minus);
  }

  const Complex mu_int = sop_overlap(SopVector(j1 * p_i), p_i);
  r.intermediate_purity =
      1.0 - 2.0 * s.coupler.t2() * s.coupler.r2() * (1.0 - std::norm(mu_int));
  r.alpha_i_mag = 0.0;
  return r;
}

ScenarioResult run_perpendicular(const Scenario& s) {
  ScenarioResult r = common_result(s);

  const Complex alpha = s.perpendicular.alpha;
  const Complex alpha_i =
      s.perpendicular.alpha_i.value_or(Complex(r.theta_ife_value / r.theta_m0, 0.0));
  r.alpha_i_mag = std::abs(alpha_i);

  const double dt = s.timing.delta_t();
  const BranchAmplitudes br = branch_amplitudes(alpha, alpha_i, s.field, dt);

  r.chi_P = 1.0;
  r.chi_M = overlap_analytic(br.plus, br.minus);
  finish_probabilities(s, r);

  const double max_amp = std::max(std::abs(br.plus), std::abs(br.minus));
  const int dim = s.fock_dim.value_or(default_fock_dim(max_amp));
  r.schmidt = schmidt_decompose(s.coupler, br.plus, br.minus, dim);
  r.purity_closed_form = r.schmidt->purity;
  if (s.oracle) r.purity_oracle = purity_fock_oracle(s.coupler, br.plus, br.minus, dim);

  // State after the t1 kick, before the t2 kick: the branches sit in
  // orthogonal in-loop modes with weights |t|^2 and |r|^2.
  const Complex rot = std::exp(-1i * s.field.omega_m * dt);
  const Complex mu_int = overlap_analytic((alpha + alpha_i) * rot, alpha * rot);
  r.intermediate_purity =
      1.0 - 2.0 * s.coupler.t2() * s.coupler.r2() * (1.0 - std::norm(mu_int));
  return r;
}

}  // namespace

ScenarioResult run_configuration(const Scenario& s) {
  s.validate();
  return s.configuration == Configuration::parallel ? run_parallel(s) : run_perpendicular(s);
}

}  // namespace folm
