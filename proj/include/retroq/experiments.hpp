// Copyright 2026 The retroq developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RETROQ_EXPERIMENTS_HPP
#define RETROQ_EXPERIMENTS_HPP

#include "retroq/infotheory.hpp"

#include <functional>
#include <vector>

namespace retroq {

struct QuadratureSpec {
  double relative_tolerance = 1e-9;
  double absolute_tolerance = 1e-12;
  double truncation_width = 12.0;  // multiples of a beyond +-1
  int max_subdivisions = 50;
};

/// Thrown when adaptive refinement hits max_subdivisions; carries the best
/// estimate reached.
class QuadratureError : public NumericError {
 public:
  QuadratureError(const std::string& what, Eigen::VectorXd best, double error)
      : NumericError(what), best_estimate(std::move(best)), error_estimate(error) {}

  Eigen::VectorXd best_estimate;
  double error_estimate = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Simpson integration of a scalar integrand.
QuadratureResult quad_integrate(const std::function<double(double)>& f, double lo,
                                double hi, const QuadratureSpec& spec);

struct VectorQuadratureResult {
  Eigen::VectorXd value;
  double error_estimate = 0.0;
};

/// Adaptive Simpson integration of a vector-valued integrand. All components
/// share one adaptive partition whose refinement is driven by the component
/// at index `control`.
VectorQuadratureResult quad_integrate_vector(
    const std::function<Eigen::VectorXd(double)>& f, Eigen::Index size,
    Eigen::Index control, double lo, double hi, const QuadratureSpec& spec);

/// Qubit subjected to the continuous Gaussian measurement of strength a and a
/// posterior projective measurement along the Bloch direction (theta, phi).
struct QubitGaussianConfig {
  BlochVector initial;
  double a = 1.0;
  double theta = 0.0;
  double phi = 0.0;
};

/// Joint outcome densities (p(+, V), p(-, V)) from the closed form: two
/// shifted Gaussians weighted by cos^2/sin^2 of theta/2 plus a coherence
/// cross term.
std::pair<double, double> qubit_joint_density(const QubitGaussianConfig& config, double v);

/// Marginal outcome density p(V) of the first measurement.
double qubit_outcome_density(const QubitGaussianConfig& config, double v);

struct QubitSmoothed {
  DensityMatrix rho_plus;
  DensityMatrix rho_minus;
  double p_plus = 0.0;
  double p_minus = 0.0;
  bool plus_reachable = true;
  bool minus_reachable = true;
};

/// Smoothed states rho_+- = integral dV p(V|+-) rho_V by entry-wise
/// quadrature sharing one partition driven by the outcome density.
QubitSmoothed qubit_smoothed(const QubitGaussianConfig& config, const QuadratureSpec& spec);

struct QubitEntropyRow {
  double a = 0.0;
  double s_nonselective = 0.0;   // closed-form nonselective state
  double s_retro_avg = 0.0;      // sum_+- p(+-) S[rho_+-]
  double s_selective_avg = 0.0;  // integral dV p(V) S[rho_V]
  double s_initial = 0.0;
  double h_y = 0.0;  // Shannon entropy of (p(+), p(-))
  double h_v = 0.0;  // differential entropy of p(V); reported, not asserted
};

std::vector<QubitEntropyRow> qubit_entropy_curves(
    const std::vector<QubitGaussianConfig>& grid, const QuadratureSpec& spec);

struct WeakValues {
  double v_omega = 0.0;  // unconditional expectation of V
  double v_plus = 0.0;   // conditional expectations given the second outcome
  double v_minus = 0.0;
  double s_plus = 0.0;   // entropies of the post-selected smoothed states
  double s_minus = 0.0;
  bool plus_reachable = true;
  bool minus_reachable = true;
};

WeakValues weak_values(const QubitGaussianConfig& config, const QuadratureSpec& spec);

/// Hybrid quantum-classical system: a qubit correlated with a classical
/// register of macrostates, rho_I^ab = sum_mu q_mu rho_mu (x) |c_mu><c_mu|.
struct HybridConfig {
  std::vector<double> weights;
  std::vector<BlochVector> bloch_states;
};

struct HybridSystem {
  DensityMatrix rho_ab;
  BipartiteDims dims;
  MeasurementSet first;        // register projectors I_a (x) |c_mu><c_mu|
  MeasurementSet second;       // photon-detection pair lifted to the joint space
  MeasurementSet second_on_a;  // the same pair on the qubit alone
};

HybridSystem hybrid_build(const HybridConfig& config);

struct HybridRow {
  double q = 0.0;
  double s_a_nonsel = 0.0;
  double s_a_retro = 0.0;
  double s_a_sel = 0.0;
  double i_nonsel = 0.0;
  double i_retro = 0.0;
  double i_sel = 0.0;
  double holevo_chi = 0.0;
  double h_my = 0.0;
};

struct HybridReport {
  ProjectiveBipartiteReport report;
  HybridRow row;
};

HybridReport hybrid_report(const HybridConfig& config);

}  // namespace retroq

#endif  // RETROQ_EXPERIMENTS_HPP
