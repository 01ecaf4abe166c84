// SPDX-License-Identifier: Apache-2.0
#include <folm/bosonic.hpp>

#include <cmath>
#include <string>

namespace folm {

using namespace std::complex_literals;

namespace {
std::string truncation_message(std::complex<double> alpha, int dim, int required) {
  return "coherent amplitude |alpha| = " + std::to_string(std::abs(alpha)) +
         " violates the truncation guard |alpha|^2 < dim/4 at dim = " + std::to_string(dim) +
         "; use dim >= " + std::to_string(required);
}
}  // namespace

TruncationError::TruncationError(std::complex<double> alpha, int dim, int required)
    : std::invalid_argument(truncation_message(alpha, dim, required)), required_dim(required) {}

int default_fock_dim(double max_amplitude) {
  const double m = std::abs(max_amplitude);
  const int tail = static_cast<int>(std::ceil(m * m + 8.0 * m + 20.0));
  const int guard = static_cast<int>(std::ceil(4.0 * m * m)) + 4;
  return std::max({32, tail, guard});
}

void check_truncation(std::complex<double> alpha, int dim) {
  if (dim < 1) throw std::invalid_argument("Fock dimension must be >= 1");
  const double a2 = std::norm(alpha);
  if (!(a2 < dim / 4.0)) {
    const int required = static_cast<int>(std::ceil(4.0 * a2)) + 1;
    throw TruncationError(alpha, dim, std::max(required, default_fock_dim(std::abs(alpha))));
  }
}

FockOperator annihilation(int dim) {
  FockOperator a = FockOperator::Zero(dim, dim);
  for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

FockState coherent_state(std::complex<double> alpha, int dim) {
  check_truncation(alpha, dim);
  FockState s(dim);
  s(0) = std::exp(-std::norm(alpha) / 2.0);
  for (int n = 1; n < dim; ++n) s(n) = s(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return s;
}

FockOperator displacement(std::complex<double> alpha, int dim) {
  check_truncation(alpha, dim);
  const FockOperator a = annihilation(dim);
  const FockOperator gen = alpha * a.adjoint() - std::conj(alpha) * a;
  // gen is anti-Hermitian; exponentiate through the Hermitian i*gen.
  Eigen::SelfAdjointEigenSolver<FockOperator> es(1i * gen);
  const Eigen::VectorXd ev = es.eigenvalues();
  Eigen::VectorXcd phases(dim);
  for (int n = 0; n < dim; ++n) phases(n) = std::exp(-1i * ev(n));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

FockOperator free_evolution(const FieldParams& f, double t, int dim) {
  FockOperator u = FockOperator::Zero(dim, dim);
  for (int n = 0; n < dim; ++n) u(n, n) = std::exp(-1i * f.omega_m * t * static_cast<double>(n));
  return u;
}

std::complex<double> overlap_analytic(std::complex<double> alpha, std::complex<double> beta) {
  return std::exp(-std::norm(alpha) / 2.0 - std::norm(beta) / 2.0 + std::conj(alpha) * beta);
}

std::complex<double> fock_overlap(const FockState& a, const FockState& b) { return a.dot(b); }

BranchAmplitudes branch_amplitudes(std::complex<double> alpha, std::complex<double> alpha_i,
                                   const FieldParams& f, double delta_t) {
  const std::complex<double> rot = std::exp(-1i * f.omega_m * delta_t);
  return BranchAmplitudes{(alpha + alpha_i) * rot, alpha * rot - alpha_i};
}

}  // namespace folm
