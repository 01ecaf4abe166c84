// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <folm/jones.hpp>
#include <folm/params.hpp>

namespace folm {

// Dielectric-tensor machinery for a saturated ferrimagnetic sphere:
// builds the magnetization-dependent permittivity, rotates it into the
// propagation frame, reduces it to the effective 2x2 transverse response
// and expresses that response as a birefringence vector in Pauli space,
// from which the sphere's Jones matrix follows.

using Tensor3 = Eigen::Matrix3cd;

/// Propagation direction q (polar angles theta, phi) and magnetization
/// direction m (theta_m, phi_m), both in the lab frame where the static
/// field points along z.
struct Orientation {
  double theta = 0.0;
  double phi = 0.0;
  double theta_m = 0.0;
  double phi_m = 0.0;

  Eigen::Vector3d q_hat() const;
  Eigen::Vector3d m_hat() const;
  /// First-order treatment of the magnetization tilt is reliable below this.
  bool theta_m_small() const { return std::abs(theta_m) < 0.3; }
  void validate() const;  // polar angles in [0, pi]
};

/// Permittivity tensor for magnetization along z: n_0^2 (1 + i Q M_C),
/// with M_C the antisymmetric generator about z.
Tensor3 permittivity(double Q, double n_0);

/// Cross-product matrix C_u, C_u v = u x v. Throws on a non-unit vector.
Eigen::Matrix3d cross_matrix(const Eigen::Vector3d& u);

/// Proper rotation R_u with R_u u = z. Minimal-geodesic convention:
/// rotate about normalize(u x z) by acos(u . z); identity for u = z and a
/// half-turn about x for u = -z.
Eigen::Matrix3d rotation_to_z(const Eigen::Vector3d& u);

/// Propagation-frame dielectric response
/// (R_q R_m^-1 eps_m R_m R_q^-1 + n^2 P_z) / n_0^2 - 1.
Tensor3 transformed_dielectric(const Orientation& o, const MaterialParams& m, double n);

/// Pauli decomposition of the transverse response M_T = k_0 sigma_0 + k_B . sigma,
/// split into the circular (Faraday) and colinear (Voigt) parts.
struct BirefringenceVector {
  double k_0 = 0.0;
  Eigen::Vector3d k_CB = Eigen::Vector3d::Zero();
  Eigen::Vector3d k_LB = Eigen::Vector3d::Zero();

  Eigen::Vector3d k_B() const { return k_CB + k_LB; }
};

/// Quadratic combination S(rho) = [e^{i(rho-pi/4)} Q^2 + e^{-i(rho-pi/4)} Q*^2] / 4
/// entering the colinear birefringence; real for any complex Q.
double squeezing_term(std::complex<double> Q, double rho);

/// Closed-form birefringence vector:
///   k_CB = Q_s (0, q . m, 0),
///   k_LB = Q_s^2 (S(-pi/4), 0, S(pi/4)),  k_0 = -Q_s^2 |Q|^2 / 2,
/// with Q = v_x + i v_y built from the transverse components of the
/// magnetization direction in the propagation frame, v = R_q m. For the
/// untilted magnetization v reduces to -(q_x, q_y) and Q^2 to the
/// lab-frame form (q_x + i q_y)^2.
BirefringenceVector birefringence(const Orientation& o, const MaterialParams& m);

/// Sphere Jones matrix J_S = B(k_B/|k_B|, (l_e/l_P) |k_B|/Q_s); identity when
/// the birefringence vector vanishes.
JonesMatrix sphere_jones(const BirefringenceVector& b, const SphereParams& s,
                         const MaterialParams& m);

/// Recycled-pass SOP overlap chi_P = <p_i| J1^dag J2 |p_i>.
std::complex<double> chi_p(const SopVector& p_i, const JonesMatrix& J1, const JonesMatrix& J2);

/// Effective transverse 2x2 response of a 3x3 tensor: Schur-eliminate the
/// longitudinal row/column against the (3,3) entry and expand in
/// {sigma_0, sigma}. Used as the exact-reduction route checked against the
/// closed forms above.
struct PauliDecomposition {
  std::complex<double> k0;
  Eigen::Vector3cd k;
  Eigen::Matrix2cd transverse;
};
PauliDecomposition pauli_reduce(const Tensor3& M);

}  // namespace folm
