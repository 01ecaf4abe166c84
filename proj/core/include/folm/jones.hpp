// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>

namespace folm {

// Two-dimensional polarization calculus. SOP vectors hold the (H, V)
// amplitudes of the transverse field; Jones matrices are the unitary
// transfer matrices acting on them; Poincaré vectors are the real
// three-component image of pure states on the unit sphere.

using SopVector = Eigen::Vector2cd;      // components along |H>, |V>
using JonesMatrix = Eigen::Matrix2cd;
using PoincareVector = Eigen::Vector3d;

inline const JonesMatrix sigma_x = (JonesMatrix() << 0, 1, 1, 0).finished();
inline const JonesMatrix sigma_y =
    (JonesMatrix() << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0).finished();
inline const JonesMatrix sigma_z = (JonesMatrix() << 1, 0, 0, -1).finished();

/// Normalized SOP from raw (H, V) amplitudes. Throws on a zero vector.
SopVector make_sop(std::complex<double> h, std::complex<double> v);

/// One of the six standard SOPs: 'V', 'H', 'D', 'A', 'R', 'L'.
SopVector standard_sop(char label);

/// SU(2) rotation by angle phi about the (Pauli-space) unit axis:
/// B(u, phi) = 1 cos(phi/2) - i (sigma . u) sin(phi/2). Throws on a non-unit axis.
JonesMatrix rotation(const PoincareVector& axis, double phi);

/// Inner product <a|b>.
std::complex<double> sop_overlap(const SopVector& a, const SopVector& b);

/// Poincaré-sphere image of a pure SOP. Sign convention:
/// |V> -> +z, |H> -> -z, |D> -> +x, |A> -> -x, |R> -> -y, |L> -> +y.
PoincareVector poincare_map(const SopVector& s);

/// Pauli-axis image of a Poincaré axis (and vice versa; the map is an
/// involution). Under s -> B(u, phi) s the Poincaré image rotates by phi
/// about poincare_axis(u).
PoincareVector poincare_axis(const PoincareVector& pauli_axis);

/// Mirror reflection of the SOP picked up on loop transmission: sigma_z s.
SopVector mirror_sop(const SopVector& s);

}  // namespace folm
