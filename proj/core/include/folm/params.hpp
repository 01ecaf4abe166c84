// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <folm/constants.hpp>

namespace folm {

/// Magneto-optic material constants. Defaults are YIG in the telecom band.
struct MaterialParams {
  double Q_s = 1e-4;          ///< magneto-optic coefficient at saturation (dimensionless)
  double n_0 = 2.19;          ///< refractive index
  double lambda_0 = 1550e-9;  ///< free-space wavelength [m]
  double l_A = 0.5;           ///< absorption length [m], figure of merit only

  static MaterialParams yig() { return MaterialParams{}; }
  /// Convenience constructor taking the wavelength in nanometres.
  static MaterialParams yig_at_nm(double lambda_nm);
  void validate() const;
};

/// Ferrimagnetic sphere geometry and magnetization.
struct SphereParams {
  double R_s = 125e-6;  ///< sphere radius [m]
  double M_s = 140e3;   ///< saturation magnetization [A/m]

  double volume() const { return 4.0 * pi * R_s * R_s * R_s / 3.0; }
  /// Effective optical travel length inside the sphere, l_e = 2 R_s.
  double optical_path() const { return 2.0 * R_s; }

  static SphereParams from_radius_um(double radius_um, double M_s = 140e3);
  void validate() const;
};

/// Static field / Kittel-mode frequency group.
struct FieldParams {
  double omega_m = two_pi * 3e9;   ///< Kittel-mode angular frequency [rad/s]
  double gamma_e = two_pi * 28e9;  ///< gyromagnetic ratio [rad/(s T)]

  /// Static field magnitude H_dc = omega_m / (mu_0 gamma_e) [A/m].
  double h_dc() const { return omega_m / (mu_0 * gamma_e); }
  double period() const { return two_pi / omega_m; }

  static FieldParams from_frequency_ghz(double f_ghz, double gamma_e_ghz_per_t = 28.0);
  void validate() const;
};

/// Interaction times and fiber properties.
struct TimingParams {
  double t1 = 0.0;      ///< first interaction time [s]
  double t2 = 1.0 / 6e9;  ///< second interaction time [s]; default is half a 3 GHz period later
  double n_F = 1.47;    ///< fiber effective refractive index
  double t_p = 1e-12;   ///< pulse duration [s]

  double delta_t() const { return t2 - t1; }
  /// Pulse-shortness figure omega_m * t_p; flagged as a warning at >= 0.1.
  double pulse_shortness(const FieldParams& f) const { return f.omega_m * t_p; }

  void validate() const;
};

/// Polarization beat length l_P = lambda_0 / (n_0 Q_s).
double beat_length(const MaterialParams& m);

/// Single-magnon angle constant theta_mz = 2 hbar gamma_e / (V_s M_s).
double theta_mz(const SphereParams& s, const FieldParams& f);

/// Macrospin Zeeman energy E_M = -2 hbar omega_m cos(theta_m) / theta_mz [J].
double stoner_wohlfarth_energy(double theta_m, const FieldParams& f, double theta_mz);

/// Magnetization rotation angle for a single magnon, small-angle form sqrt(theta_mz).
double magnon_angle_quantum(double theta_mz);

/// Fiber length producing `cycles` Kittel periods of delay:
/// L_F = cycles * c / (n_F * omega_m / 2pi).
double fiber_length_for_delay(const FieldParams& f, double n_F, double cycles = 1.0);

/// Effective magnetic field of the inverse Faraday effect [A/m],
/// H_IFE = 2 hbar omega_e Q_s / (mu_0 V_s M_s), scaled by an optional
/// enhancement factor (the semiclassical value is known to be conservative).
double ife_field(double omega_e, const MaterialParams& m, const SphereParams& s,
                 const FieldParams& f, double enhancement = 1.0);

/// Magnetization rotation angle from a single photon at wavelength lambda:
/// theta_IFE = mu_0 gamma_e H_IFE * 2 n_0 R_s / c = 4 pi n_0 Q_s R_s theta_mz / lambda.
double theta_ife(const MaterialParams& m, const SphereParams& s, const FieldParams& f,
                 double lambda, double enhancement = 1.0);

}  // namespace folm
