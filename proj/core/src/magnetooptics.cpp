// SPDX-License-Identifier: Apache-2.0
#include <folm/magnetooptics.hpp>

#include <cmath>
#include <stdexcept>

namespace folm {

using namespace std::complex_literals;
using Eigen::Matrix3d;
using Eigen::Vector3d;

Vector3d Orientation::q_hat() const {
  return Vector3d(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                  std::cos(theta));
}

Vector3d Orientation::m_hat() const {
  return Vector3d(std::sin(theta_m) * std::cos(phi_m), std::sin(theta_m) * std::sin(phi_m),
                  std::cos(theta_m));
}

void Orientation::validate() const {
  if (theta < 0.0 || theta > pi)
    throw std::invalid_argument("orientation.theta must be in [0, pi]");
  if (theta_m < 0.0 || theta_m > pi)
    throw std::invalid_argument("orientation.theta_m must be in [0, pi]");
}

Tensor3 permittivity(double Q, double n_0) {
  Tensor3 eps = Tensor3::Identity();
  eps(0, 1) = -1i * Q;
  eps(1, 0) = 1i * Q;
  return n_0 * n_0 * eps;
}

Eigen::Matrix3d cross_matrix(const Vector3d& u) {
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("cross_matrix expects a unit vector");
  Matrix3d c;
  c << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  return c;
}

Eigen::Matrix3d rotation_to_z(const Vector3d& u) {
  if (std::abs(u.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("rotation_to_z expects a unit vector");
  const Vector3d z = Vector3d::UnitZ();
  const double c = u.dot(z);
  if (c > 1.0 - 1e-15) return Matrix3d::Identity();
  if (c < -1.0 + 1e-15) {
    // u = -z: half turn about x
    Matrix3d r = Matrix3d::Identity();
    r(1, 1) = -1.0;
    r(2, 2) = -1.0;
    return r;
  }
  // Rotate u onto z about the normalized axis u x z through the smaller angle.
  const Vector3d axis = u.cross(z).normalized();
  const double angle = std::acos(c);
  const Matrix3d k = (Matrix3d() << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(),
                      axis.x(), 0)
                         .finished();
  return Matrix3d::Identity() + std::sin(angle) * k + (1.0 - std::cos(angle)) * k * k;
}

Tensor3 transformed_dielectric(const Orientation& o, const MaterialParams& m, double n) {
  o.validate();
  const Matrix3d rq = rotation_to_z(o.q_hat());
  const Matrix3d rm = rotation_to_z(o.m_hat());
  const Tensor3 eps = permittivity(m.Q_s, m.n_0);
  const Tensor3 rotated =
      rq.cast<std::complex<double>>() * rm.transpose().cast<std::complex<double>>() * eps *
      rm.cast<std::complex<double>>() * rq.transpose().cast<std::complex<double>>();
  Tensor3 p_z = Tensor3::Zero();
  p_z(2, 2) = n * n;
  return (rotated + p_z) / (m.n_0 * m.n_0) - Tensor3::Identity();
}

double squeezing_term(std::complex<double> Q, double rho) {
  const std::complex<double> q2 = Q * Q;
  const std::complex<double> ph = std::exp(1i * (rho - pi / 4.0));
  return ((ph * q2 + std::conj(ph * q2)) / 4.0).real();
}

BirefringenceVector birefringence(const Orientation& o, const MaterialParams& m) {
  const Vector3d q = o.q_hat();
  const Vector3d mm = o.m_hat();
  const Vector3d v = rotation_to_z(q) * mm;  // magnetization in the propagation frame
  const std::complex<double> Qc(v.x(), v.y());

  BirefringenceVector b;
  b.k_CB = m.Q_s * Vector3d(0.0, q.dot(mm), 0.0);
  const double qs2 = m.Q_s * m.Q_s;
  b.k_LB = qs2 * Vector3d(squeezing_term(Qc, -pi / 4.0), 0.0, squeezing_term(Qc, pi / 4.0));
  b.k_0 = -qs2 * std::norm(Qc) / 2.0;
  return b;
}

JonesMatrix sphere_jones(const BirefringenceVector& b, const SphereParams& s,
                         const MaterialParams& m) {
  const Eigen::Vector3d kb = b.k_B();
  const double mag = kb.norm();
  if (mag == 0.0) return JonesMatrix::Identity();
  const double angle = (s.optical_path() / beat_length(m)) * (mag / m.Q_s);
  return rotation(kb / mag, angle);
}

std::complex<double> chi_p(const SopVector& p_i, const JonesMatrix& J1, const JonesMatrix& J2) {
  return p_i.dot(J1.adjoint() * J2 * p_i);
}

PauliDecomposition pauli_reduce(const Tensor3& M) {
  const std::complex<double> d = M(2, 2);
  if (std::abs(d) < 1e-12)
    throw std::invalid_argument("pauli_reduce: longitudinal entry too small to eliminate");
  Eigen::Matrix2cd t = M.topLeftCorner<2, 2>();
  t -= M.topRightCorner<2, 1>() * M.bottomLeftCorner<1, 2>() / d;

  PauliDecomposition out;
  out.transverse = t;
  out.k0 = (t(0, 0) + t(1, 1)) / 2.0;
  out.k = Eigen::Vector3cd((t(0, 1) + t(1, 0)) / 2.0, (t(1, 0) - t(0, 1)) / 2i,
                           (t(0, 0) - t(1, 1)) / 2.0);
  return out;
}

}  // namespace folm
