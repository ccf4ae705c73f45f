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

#include "retroq/retrodiction.hpp"

#include <cmath>
#include <utility>

namespace retroq {

namespace {

constexpr double kEntryClamp = -1e-12;
constexpr double kRenormalizationTol = 1e-8;

}  // namespace

JointDistribution joint_distribution(const DensityMatrix& rho, const MeasurementSet& first,
                                     const MeasurementSet& second) {
  if (first.dim() != rho.dim() || second.dim() != rho.dim()) {
    throw DimensionError("joint_distribution: state and measurement dimensions differ");
  }
  JointDistribution joint;
  joint.labels_m = first.labels();
  joint.labels_y = second.labels();
  joint.p.resize(static_cast<Eigen::Index>(second.size()),
                 static_cast<Eigen::Index>(first.size()));
  std::vector<CMatrix> effects;
  effects.reserve(second.size());
  for (std::size_t y = 0; y < second.size(); ++y) {
    effects.push_back(second.op(y).adjoint() * second.op(y));
  }
  double total = 0.0;
  for (std::size_t m = 0; m < first.size(); ++m) {
    const CMatrix post = first.op(m) * rho.matrix() * first.op(m).adjoint();
    for (std::size_t y = 0; y < second.size(); ++y) {
      double p = (post * effects[y]).trace().real();
      if (p < 0.0) {
        if (p < kEntryClamp) {
          throw NumericError("joint_distribution: negative probability " +
                             std::to_string(p));
        }
        p = 0.0;
      }
      joint.p(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(m)) = p;
      total += p;
    }
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw NumericError("joint_distribution: table sums to " + std::to_string(total));
  }
  return joint;
}

RetrodictedConditionals retrodict(const JointDistribution& joint) {
  RetrodictedConditionals out;
  out.labels_y = joint.labels_y;
  out.labels_m = joint.labels_m;
  out.p_y = joint.marginal_y();
  const Eigen::Index n_y = joint.p.rows();
  const Eigen::Index n_m = joint.p.cols();
  out.p_m_given_y = Eigen::MatrixXd::Zero(n_m, n_y);
  out.reachable_y.assign(static_cast<std::size_t>(n_y), false);
  for (Eigen::Index y = 0; y < n_y; ++y) {
    if (out.p_y(y) < kZeroProbability) {
      continue;  // unreachable outcome, excluded from averages
    }
    out.reachable_y[static_cast<std::size_t>(y)] = true;
    Eigen::VectorXd col = joint.p.row(y).transpose() / out.p_y(y);
    const double sum = col.sum();
    if (std::abs(sum - 1.0) > kRenormalizationTol) {
      throw NumericError("retrodict: conditional renormalization defect " +
                         std::to_string(std::abs(sum - 1.0)));
    }
    out.p_m_given_y.col(y) = col / sum;
  }
  return out;
}

std::vector<DensityMatrix> smoothed_states(const OutcomeEnsemble& ensemble,
                                           const RetrodictedConditionals& retro) {
  const Eigen::Index n_m = retro.p_m_given_y.rows();
  if (static_cast<std::size_t>(n_m) != ensemble.states.size()) {
    throw LabelMismatchError("smoothed_states: outcome counts differ");
  }
  if (ensemble.labels != retro.labels_m) {
    throw LabelMismatchError("smoothed_states: first-outcome labels differ");
  }
  const Eigen::Index dim = ensemble.states.front().dim();
  std::vector<DensityMatrix> out;
  out.reserve(retro.reachable_y.size());
  for (Eigen::Index y = 0; y < retro.p_m_given_y.cols(); ++y) {
    if (!retro.reachable_y[static_cast<std::size_t>(y)]) {
      out.push_back(maximally_mixed(dim));
      continue;
    }
    CMatrix mix = CMatrix::Zero(dim, dim);
    for (Eigen::Index m = 0; m < n_m; ++m) {
      if (!ensemble.reachable[static_cast<std::size_t>(m)]) {
        continue;  // p(m) = 0 forces p(m|y) = 0
      }
      mix += retro.p_m_given_y(m, y) * ensemble.states[static_cast<std::size_t>(m)].matrix();
    }
    out.emplace_back(symmetrized(mix));
  }
  return out;
}

SmoothingResult smooth(const DensityMatrix& rho, const MeasurementSet& first,
                       const MeasurementSet& second) {
  JointDistribution joint = joint_distribution(rho, first, second);
  OutcomeEnsemble ensemble = apply_selective(rho, first);
  RetrodictedConditionals retro = retrodict(joint);
  std::vector<DensityMatrix> smoothed = smoothed_states(ensemble, retro);

  CMatrix average = CMatrix::Zero(rho.dim(), rho.dim());
  for (Eigen::Index y = 0; y < retro.p_y.size(); ++y) {
    if (!retro.reachable_y[static_cast<std::size_t>(y)]) {
      continue;
    }
    average += retro.p_y(y) * smoothed[static_cast<std::size_t>(y)].matrix();
  }

  const Eigen::Index n_m = joint.p.cols();
  const Eigen::Index n_y = joint.p.rows();
  Eigen::MatrixXd weights = Eigen::MatrixXd::Zero(n_m, n_y);
  const Eigen::VectorXd p_m = joint.marginal_m();
  for (Eigen::Index m = 0; m < n_m; ++m) {
    if (p_m(m) < kZeroProbability) {
      continue;
    }
    weights.row(m) = retro.p_m_given_y.row(m) / p_m(m);
  }

  SmoothingResult result{std::move(joint),
                         std::move(ensemble),
                         retro.p_m_given_y,
                         retro.p_y,
                         retro.reachable_y,
                         std::move(smoothed),
                         DensityMatrix(symmetrized(average)),
                         std::move(weights)};
  return result;
}

PastQuantumState::PastQuantumState(DensityMatrix state, CMatrix e)
    : rho(std::move(state)), effect(std::move(e)) {
  if (effect.rows() != effect.cols() || effect.rows() != rho.dim()) {
    throw DimensionError("PastQuantumState: effect dimension mismatch");
  }
  const double herm = (effect - effect.adjoint()).cwiseAbs().maxCoeff();
  if (herm > kHermitianTol) {
    throw DomainError("PastQuantumState: effect hermiticity defect " +
                      std::to_string(herm));
  }
  const HermitianEigen eig = hermitian_eigen(effect);
  if (eig.eigenvalues.minCoeff() < kEigenvalueFloor ||
      eig.eigenvalues.maxCoeff() > 1.0 + 1e-10) {
    throw DomainError("PastQuantumState: effect spectrum outside [0, 1]");
  }
}

Eigen::VectorXd retrodict_from_past(const PastQuantumState& xi, const MeasurementSet& first) {
  if (first.dim() != xi.rho.dim()) {
    throw DimensionError("retrodict_from_past: dimensions differ");
  }
  Eigen::VectorXd unnormalized(static_cast<Eigen::Index>(first.size()));
  for (std::size_t m = 0; m < first.size(); ++m) {
    const CMatrix post = first.op(m) * xi.rho.matrix() * first.op(m).adjoint();
    unnormalized(static_cast<Eigen::Index>(m)) = std::max((post * xi.effect).trace().real(), 0.0);
  }
  const double total = unnormalized.sum();
  if (total < kZeroProbability) {
    throw NumericError("retrodict_from_past: unreachable second outcome");
  }
  return unnormalized / total;
}

}  // namespace retroq
