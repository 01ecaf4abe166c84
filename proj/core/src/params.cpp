// SPDX-License-Identifier: Apache-2.0
#include <folm/params.hpp>

#include <cmath>
#include <stdexcept>

namespace folm {

MaterialParams MaterialParams::yig_at_nm(double lambda_nm) {
  MaterialParams m;
  m.lambda_0 = lambda_nm * 1e-9;
  return m;
}

void MaterialParams::validate() const {
  if (!(Q_s > 0.0) || Q_s >= 0.01)
    throw std::invalid_argument("material.Q_s must satisfy 0 < Q_s < 0.01");
  if (!(n_0 >= 1.0)) throw std::invalid_argument("material.n_0 must be >= 1");
  if (!(lambda_0 > 0.0)) throw std::invalid_argument("material.lambda_0 must be > 0");
  if (!(l_A > 0.0)) throw std::invalid_argument("material.l_A must be > 0");
}

SphereParams SphereParams::from_radius_um(double radius_um, double M_s) {
  return SphereParams{radius_um * 1e-6, M_s};
}

void SphereParams::validate() const {
  if (!(R_s > 0.0)) throw std::invalid_argument("sphere.R_s must be > 0");
  if (!(M_s > 0.0)) throw std::invalid_argument("sphere.M_s must be > 0");
}

FieldParams FieldParams::from_frequency_ghz(double f_ghz, double gamma_e_ghz_per_t) {
  return FieldParams{two_pi * f_ghz * 1e9, two_pi * gamma_e_ghz_per_t * 1e9};
}

void FieldParams::validate() const {
  if (!(omega_m > 0.0)) throw std::invalid_argument("field.omega_m must be > 0");
  if (!(gamma_e > 0.0)) throw std::invalid_argument("field.gamma_e must be > 0");
}

void TimingParams::validate() const {
  if (t2 < t1) throw std::invalid_argument("timing: t2 must be >= t1");
  if (!(n_F >= 1.0)) throw std::invalid_argument("timing.n_F must be >= 1");
  if (!(t_p > 0.0)) throw std::invalid_argument("timing.t_p must be > 0");
}

double beat_length(const MaterialParams& m) {
  return m.lambda_0 / (m.n_0 * m.Q_s);
}

double theta_mz(const SphereParams& s, const FieldParams& f) {
  return 2.0 * hbar * f.gamma_e / (s.volume() * s.M_s);
}

double stoner_wohlfarth_energy(double theta_m, const FieldParams& f, double theta_mz) {
  if (!(theta_mz > 0.0)) throw std::invalid_argument("theta_mz must be > 0");
  return -2.0 * hbar * f.omega_m * std::cos(theta_m) / theta_mz;
}

double magnon_angle_quantum(double theta_mz) {
  if (!(theta_mz > 0.0)) throw std::invalid_argument("theta_mz must be > 0");
  return std::sqrt(theta_mz);
}

double fiber_length_for_delay(const FieldParams& f, double n_F, double cycles) {
  if (!(cycles > 0.0)) throw std::invalid_argument("cycles must be > 0");
  return cycles * speed_of_light / (n_F * (f.omega_m / two_pi));
}

double ife_field(double omega_e, const MaterialParams& m, const SphereParams& s,
                 const FieldParams& f, double enhancement) {
  if (!(omega_e > 0.0)) throw std::invalid_argument("omega_e must be > 0");
  (void)f;
  return enhancement * 2.0 * hbar * omega_e * m.Q_s / (mu_0 * s.volume() * s.M_s);
}

double theta_ife(const MaterialParams& m, const SphereParams& s, const FieldParams& f,
                 double lambda, double enhancement) {
  const double omega_e = two_pi * speed_of_light / lambda;
  const double h = ife_field(omega_e, m, s, f, enhancement);
  return mu_0 * f.gamma_e * h * (2.0 * m.n_0 * s.R_s / speed_of_light);
}

}  // namespace folm
