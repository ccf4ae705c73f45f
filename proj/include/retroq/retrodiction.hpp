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

#ifndef RETROQ_RETRODICTION_HPP
#define RETROQ_RETRODICTION_HPP

#include "retroq/measurement.hpp"
#include "retroq/qmat.hpp"

#include <string>
#include <vector>

namespace retroq {

/// Joint outcome table p(y, m) = Tr[Omega_m rho Omega_m^dag M_y^dag M_y],
/// rows indexed by the second outcome y, columns by the first outcome m.
struct JointDistribution {
  Eigen::MatrixXd p;  // (n_y, n_m), entries >= 0, total 1 within 1e-9
  std::vector<std::string> labels_y;
  std::vector<std::string> labels_m;

  Eigen::VectorXd marginal_y() const { return p.rowwise().sum(); }
  Eigen::VectorXd marginal_m() const { return p.colwise().sum().transpose(); }
};

JointDistribution joint_distribution(const DensityMatrix& rho, const MeasurementSet& first,
                                     const MeasurementSet& second);

/// Bayes-inverted conditionals p(m|y) = p(y, m)/p(y). Columns with
/// p(y) < kZeroProbability are flagged unreachable and left zero.
struct RetrodictedConditionals {
  Eigen::MatrixXd p_m_given_y;  // (n_m, n_y)
  Eigen::VectorXd p_y;
  std::vector<bool> reachable_y;
  std::vector<std::string> labels_y;
  std::vector<std::string> labels_m;
};

RetrodictedConditionals retrodict(const JointDistribution& joint);

/// Smoothed states rho_y = sum_m p(m|y) rho_m. Unreachable outcomes carry a
/// maximally mixed placeholder.
std::vector<DensityMatrix> smoothed_states(const OutcomeEnsemble& ensemble,
                                           const RetrodictedConditionals& retro);

struct SmoothingResult {
  JointDistribution joint;
  OutcomeEnsemble ensemble;             // first-measurement resolution {p(m), rho_m}
  Eigen::MatrixXd p_m_given_y;          // (n_m, n_y)
  Eigen::VectorXd p_y;
  std::vector<bool> reachable_y;
  std::vector<DensityMatrix> smoothed;  // rho_y
  DensityMatrix average_state;          // rho_M = sum_y p(y) rho_y
  Eigen::MatrixXd weights;              // w(m, y) = p(m|y)/p(m), 0 where p(m) vanishes
};

/// Full retrodicted-measurement pipeline for a first and second measurement.
SmoothingResult smooth(const DensityMatrix& rho, const MeasurementSet& first,
                       const MeasurementSet& second);

/// Past quantum state Xi = (rho, E); E is the effect of the observed second
/// outcome, Hermitian with spectrum in [0, 1].
struct PastQuantumState {
  PastQuantumState(DensityMatrix rho, CMatrix effect);

  DensityMatrix rho;
  CMatrix effect;
};

/// Retrodicted first-outcome distribution p(m|y) computed directly from the
/// past quantum state, p(m|y) ~ Tr[Omega_m rho Omega_m^dag E].
Eigen::VectorXd retrodict_from_past(const PastQuantumState& xi, const MeasurementSet& first);

}  // namespace retroq

#endif  // RETROQ_RETRODICTION_HPP
