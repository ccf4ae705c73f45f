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

#ifndef RETROQ_MEASUREMENT_HPP
#define RETROQ_MEASUREMENT_HPP

#include "retroq/qmat.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace retroq {

inline constexpr double kCompletenessTol = 1e-9;

/// Ordered Kraus operators {Omega_m} with sum Omega^dag Omega = I.
/// Operators are stored as given; labels are caller-supplied.
class MeasurementSet {
 public:
  explicit MeasurementSet(std::vector<CMatrix> operators,
                          std::vector<std::string> labels = {});

  Eigen::Index dim() const { return dim_; }
  std::size_t size() const { return operators_.size(); }
  const CMatrix& op(std::size_t i) const { return operators_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<CMatrix>& operators() const { return operators_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double completeness_defect() const { return completeness_defect_; }

 private:
  std::vector<CMatrix> operators_;
  std::vector<std::string> labels_;
  Eigen::Index dim_ = 0;
  double completeness_defect_ = 0.0;
};

/// Selective-measurement resolution: outcome states with probabilities.
/// Outcomes with p(m) < kZeroProbability are flagged unreachable and carry a
/// maximally mixed placeholder instead of a 0/0 artifact.
struct OutcomeEnsemble {
  std::vector<double> probabilities;
  std::vector<DensityMatrix> states;
  std::vector<std::string> labels;
  std::vector<bool> reachable;
};

OutcomeEnsemble apply_selective(const DensityMatrix& rho, const MeasurementSet& set);

DensityMatrix apply_nonselective(const DensityMatrix& rho, const MeasurementSet& set);

/// Continuous Gaussian qubit measurement, Omega_V =
/// (2 pi a^2)^(-1/4) exp(-(V - sigma_z)^2 / 4 a^2). Strengths below 1e-3 are
/// rejected: that regime is handled analytically, not by quadrature.
struct GaussianMeasurement {
  explicit GaussianMeasurement(double strength);

  double a = 0.0;
};

inline constexpr double kMinGaussianStrength = 1e-3;

/// Unnormalized post-measurement matrix Omega_V rho Omega_V^dag from the
/// closed form; its trace is the outcome density p(V).
CMatrix gaussian_unnormalized_post(const DensityMatrix& rho, const GaussianMeasurement& g,
                                   double v);

/// Non-selective Gaussian measurement: populations unchanged, coherences
/// damped by exp(-1/(2 a^2)).
DensityMatrix gaussian_nonselective(const DensityMatrix& rho, const GaussianMeasurement& g);

/// rho = G G^dag / Tr[G G^dag] for a seeded complex-Gaussian G. Full rank
/// with probability 1; deterministic per seed.
DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed);

/// Omega_k = G_k S^{-1/2} with S = sum G_k^dag G_k; complete by construction.
MeasurementSet random_measurement_set(Eigen::Index dim, std::size_t count,
                                      std::uint64_t seed);

/// Haar-distributed unitary via QR of a complex-Gaussian matrix with phase
/// normalization of R's diagonal.
CMatrix random_unitary(Eigen::Index dim, std::uint64_t seed);

/// Projective set {|b_m><b_m|} from the columns of an orthonormal basis.
MeasurementSet projective_from_basis(const CMatrix& basis);

/// Qubit projective pair along the Bloch direction (theta, phi):
/// |n_+> = cos(theta/2)|+> + e^{i phi} sin(theta/2)|->,
/// |n_-> = -sin(theta/2)|+> + cos(theta/2) e^{i phi}|->.
MeasurementSet qubit_projective(double theta, double phi);

}  // namespace retroq

#endif  // RETROQ_MEASUREMENT_HPP
