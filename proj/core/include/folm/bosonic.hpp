// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <folm/params.hpp>

namespace folm {

// Truncated Fock-space numerics for the magnon mode. These routines are the
// brute-force counterpart of every closed-form entanglement result: coherent
// states, displacement and free-precession operators, and overlaps, all in a
// finite oscillator basis of dimension `dim`.

using FockState = Eigen::VectorXcd;
using FockOperator = Eigen::MatrixXcd;

/// Thrown when a coherent amplitude is too large for the requested
/// truncation; carries the dimension that would be acceptable.
class TruncationError : public std::invalid_argument {
 public:
  TruncationError(std::complex<double> alpha, int dim, int required);
  int required_dim;
};

/// Truncation that keeps the Poisson tail of |alpha| below ~1e-10.
int default_fock_dim(double max_amplitude);

/// Enforces |alpha|^2 < dim / 4; throws TruncationError otherwise.
void check_truncation(std::complex<double> alpha, int dim);

/// Annihilation operator, a|n> = sqrt(n)|n-1>.
FockOperator annihilation(int dim);

/// Coherent state |alpha>: amplitudes e^{-|alpha|^2/2} alpha^n / sqrt(n!).
FockState coherent_state(std::complex<double> alpha, int dim);

/// Displacement D(alpha) = exp(alpha a^dag - alpha^* a), evaluated through the
/// eigendecomposition of the Hermitian generator i(alpha a^dag - alpha^* a).
FockOperator displacement(std::complex<double> alpha, int dim);

/// Free precession u(t) = exp(-i omega_m t a^dag a), diagonal.
FockOperator free_evolution(const FieldParams& f, double t, int dim);

/// Closed-form coherent overlap <alpha|beta> = exp(-|a|^2/2 - |b|^2/2 + a^* b).
std::complex<double> overlap_analytic(std::complex<double> alpha, std::complex<double> beta);

/// Truncated inner product <a|b>.
std::complex<double> fock_overlap(const FockState& a, const FockState& b);

/// Coherent amplitudes of the two loop branches after both interactions:
/// the clockwise branch is kicked by +alpha_i at t1 and then precesses,
/// the counter-clockwise one precesses and is kicked by -alpha_i at t2.
struct BranchAmplitudes {
  std::complex<double> plus;   // (alpha + alpha_i) e^{-i omega_m dt}
  std::complex<double> minus;  // alpha e^{-i omega_m dt} - alpha_i
};
BranchAmplitudes branch_amplitudes(std::complex<double> alpha, std::complex<double> alpha_i,
                                   const FieldParams& f, double delta_t);

}  // namespace folm
