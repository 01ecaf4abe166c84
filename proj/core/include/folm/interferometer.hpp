// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <folm/bosonic.hpp>
#include <folm/jones.hpp>
#include <folm/magnetooptics.hpp>
#include <folm/params.hpp>

namespace folm {

// Loop-mirror observables: coupler scattering, the branch-overlap parameter
// eta, transmission/reflection probabilities, the two-term Schmidt
// decomposition of the final state and its purity, and a one-parameter
// collapse model interpolating between unitary evolution and a full
// collapse at the intermediate time.

using Complex = std::complex<double>;

/// Four-port coupler with forward/backward transmission t' = t (real,
/// positive) and reflection r' = r = i t |r/t|. Stored as the intensity
/// ratio upsilon = |r/t|^2 so that |t|^2 + |r|^2 = 1 holds exactly.
struct CouplerParams {
  double upsilon = 1.0;

  double t2() const { return 1.0 / (1.0 + upsilon); }
  double r2() const { return 1.0 - t2(); }
  double t_mag() const { return std::sqrt(t2()); }
  double r_mag() const { return std::sqrt(r2()); }
  Complex t() const { return Complex(t_mag(), 0.0); }
  Complex r() const { return Complex(0.0, r_mag()); }

  static CouplerParams three_db() { return CouplerParams{1.0}; }
  static CouplerParams from_ratio(double upsilon);
  static CouplerParams from_t_mag(double t_mag);
  /// Validates |t|^2 + |r|^2 = 1 to 1e-12 before constructing.
  static CouplerParams from_magnitudes(double t_mag, double r_mag);
  void validate() const;
};

/// Port scattering matrix over (a1, a2, b1, b2); unitary and symmetric.
Eigen::Matrix4cd scattering_matrix(const CouplerParams& c);

struct Probabilities {
  double p_T;
  double p_R;
};

/// Interference suppression parameter eta = (1 - Re(chi_P chi_M)) / 2.
double eta(Complex chi_P, Complex chi_M);

/// p_T = (|t|^2 - |r|^2)^2 + 4 |t r|^2 eta,  p_R = 4 |t r|^2 (1 - eta).
Probabilities transmission_reflection(const CouplerParams& c, double eta);

/// Decoherence retention factor: d = 1 is fully unitary evolution, d = 0 a
/// full collapse at the intermediate time.
struct CollapseModel {
  double d = 1.0;
  void validate() const;
};

/// eta with the coherent cross term scaled by d: (1 - d Re(chi_P chi_M)) / 2.
double collapsed_eta(Complex chi_P, Complex chi_M, const CollapseModel& cm);
Probabilities collapsed_transmission(const CouplerParams& c, Complex chi_P, Complex chi_M,
                                     const CollapseModel& cm);

struct BranchOverlaps {
  Complex chi_P{1.0, 0.0};
  Complex chi_M{1.0, 0.0};
  double eta = 0.0;
};

/// Final-state amplitude structure over the four outcome kets
/// (a1,+), (a1,-), (a2,+), (a2,-) with prefactors t r', r t', t t', r r'.
struct FinalState {
  Complex amp_a1_cw, amp_a1_ccw, amp_a2_cw, amp_a2_ccw;
  BranchOverlaps overlaps;
  double p_T, p_R;
};
FinalState final_state_symbolic(const CouplerParams& c, Complex chi_P, Complex chi_M);

/// Purity of either reduced state of a two-branch superposition
/// t r'|a1,+> + r t'|a1,-> + t t'|a2,+> + r r'|a2,->, where the branch kets
/// have overlap mu = <+|->. Equals 1 for a product state, 1/2 at maximal
/// two-term entanglement.
double two_branch_purity(const CouplerParams& c, Complex mu);

/// Same reduction computed from explicit branch vectors (any dimension) by
/// partial trace over the port; the brute-force route.
double two_branch_purity_vectors(const CouplerParams& c, const Eigen::VectorXcd& ket_plus,
                                 const Eigen::VectorXcd& ket_minus);

/// Two-term Schmidt-form data of the final state for coherent branches.
struct SchmidtData {
  Complex v1, v2;
  FockState m1, m2;
  Complex mu;
  double nu_plus, nu_minus;
  double purity;
};
SchmidtData schmidt_decompose(const CouplerParams& c, Complex alpha_plus, Complex alpha_minus,
                              int dim);

/// Symmetric-coupler closed form
/// [1 + exp(-4 |alpha_i|^2 cos^2(omega_m dt / 2))] / 2; independent of the
/// initial coherent amplitude.
double purity_symmetric(Complex alpha_i, const FieldParams& f, double delta_t);

/// Explicit truncated-Fock partial-trace purity for coherent branches.
double purity_fock_oracle(const CouplerParams& c, Complex alpha_plus, Complex alpha_minus,
                          int dim);

// ---------------------------------------------------------------------------
// Full scenario evaluation
// ---------------------------------------------------------------------------

enum class Configuration { parallel, perpendicular };

/// q || H_dc: the SOP changes through the Faraday effect, the SOM is frozen.
struct ParallelSettings {
  char sop = 'H';                        ///< injected SOP label
  double theta_m1 = 0.0;                 ///< magnetization tilt at t1 [rad]
  double phi_m1 = 0.0;                   ///< magnetization azimuth at t1 [rad]
  std::optional<double> delta_theta_m;   ///< tilt change by t2; default is the single-magnon step
  bool precess = true;                   ///< advance phi_m by -omega_m dt between passes
};

/// q perp H_dc: the SOP is frozen (chi_P = 1), the SOM takes coherent kicks.
struct PerpendicularSettings {
  Complex alpha{0.0, 0.0};          ///< initial SOM coherent amplitude
  std::optional<Complex> alpha_i;   ///< kick amplitude; default theta_IFE / theta_m0
  double ife_enhancement = 1.0;     ///< multiplies the semiclassical H_IFE
};

struct Scenario {
  Configuration configuration = Configuration::perpendicular;
  MaterialParams material;
  SphereParams sphere;
  FieldParams field;
  TimingParams timing;
  CouplerParams coupler = CouplerParams::three_db();
  CollapseModel collapse;
  ParallelSettings parallel;
  PerpendicularSettings perpendicular;
  bool oracle = false;
  std::optional<int> fock_dim;

  void validate() const;
};

struct ScenarioResult {
  Complex chi_P, chi_M;
  double eta;
  double p_T_unitary, p_R_unitary;
  double p_T_collapsed, p_R_collapsed;
  double purity_closed_form;
  std::optional<double> purity_oracle;
  double intermediate_purity;
  std::optional<SchmidtData> schmidt;

  // derived scalars echoed for every run
  double L_F;
  double theta_mz_value;
  double theta_m0;
  double theta_ife_value;
  double alpha_i_mag;
  double omega_m_tp;
  double beat_length_value;
  double l_e_over_l_p;

  std::vector<std::string> warnings;
};

ScenarioResult run_configuration(const Scenario& s);

}  // namespace folm
