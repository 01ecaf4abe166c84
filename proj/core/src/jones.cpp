// SPDX-License-Identifier: Apache-2.0
#include <folm/jones.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace folm {

using namespace std::complex_literals;

SopVector make_sop(std::complex<double> h, std::complex<double> v) {
  SopVector s;
  s << h, v;
  const double n = s.norm();
  if (n < 1e-300) throw std::invalid_argument("SOP amplitudes must not both vanish");
  return s / n;
}

SopVector standard_sop(char label) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (label) {
    case 'H': return (SopVector() << 1, 0).finished();
    case 'V': return (SopVector() << 0, 1).finished();
    case 'D': return (SopVector() << inv_sqrt2, inv_sqrt2).finished();
    case 'A': return (SopVector() << inv_sqrt2, -inv_sqrt2).finished();
    case 'R': return (SopVector() << inv_sqrt2, -1i * inv_sqrt2).finished();
    case 'L': return (SopVector() << inv_sqrt2, 1i * inv_sqrt2).finished();
    default:
      throw std::invalid_argument(std::string("unknown SOP label '") + label +
                                  "', expected one of V,H,D,A,R,L");
  }
}

JonesMatrix rotation(const PoincareVector& axis, double phi) {
  if (std::abs(axis.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("rotation axis must be a unit vector");
  const std::complex<double> c = std::cos(phi / 2.0);
  const std::complex<double> s(0.0, -std::sin(phi / 2.0));
  return c * JonesMatrix::Identity() +
         s * (axis.x() * sigma_x + axis.y() * sigma_y + axis.z() * sigma_z);
}

std::complex<double> sop_overlap(const SopVector& a, const SopVector& b) {
  return a.dot(b);
}

PoincareVector poincare_map(const SopVector& s) {
  const std::complex<double> hv = std::conj(s(0)) * s(1);
  const double sx = 2.0 * hv.real();
  const double sy = 2.0 * hv.imag();
  const double sz = std::norm(s(0)) - std::norm(s(1));
  return PoincareVector(sx, sy, -sz);
}

PoincareVector poincare_axis(const PoincareVector& pauli_axis) {
  return PoincareVector(-pauli_axis.x(), -pauli_axis.y(), pauli_axis.z());
}

SopVector mirror_sop(const SopVector& s) { return sigma_z * s; }

}  // namespace folm
