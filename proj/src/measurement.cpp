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

#include "retroq/measurement.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <utility>

namespace retroq {

namespace {

std::vector<std::string> default_labels(std::size_t count) {
  std::vector<std::string> labels;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    labels.push_back(std::to_string(i));
  }
  return labels;
}

CMatrix ginibre(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& engine) {
  std::normal_distribution<double> n01(0.0, 1.0);
  CMatrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = n01(engine);
      const double im = n01(engine);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

MeasurementSet::MeasurementSet(std::vector<CMatrix> operators,
                               std::vector<std::string> labels)
    : operators_(std::move(operators)), labels_(std::move(labels)) {
  if (operators_.empty()) {
    throw DomainError("MeasurementSet: at least one operator required");
  }
  dim_ = operators_.front().rows();
  for (const CMatrix& op : operators_) {
    if (op.rows() != dim_ || op.cols() != dim_) {
      throw DimensionError("MeasurementSet: operators must share one square dimension");
    }
    if (!op.allFinite()) {
      throw DomainError("MeasurementSet: non-finite operator entry");
    }
  }
  if (labels_.empty()) {
    labels_ = default_labels(operators_.size());
  }
  if (labels_.size() != operators_.size()) {
    throw LabelMismatchError("MeasurementSet: one label per operator required");
  }
  CMatrix sum = CMatrix::Zero(dim_, dim_);
  for (const CMatrix& op : operators_) {
    sum += op.adjoint() * op;
  }
  completeness_defect_ = (sum - CMatrix::Identity(dim_, dim_)).cwiseAbs().maxCoeff();
  if (completeness_defect_ > kCompletenessTol) {
    throw DomainError("MeasurementSet: completeness defect " +
                      std::to_string(completeness_defect_));
  }
}

OutcomeEnsemble apply_selective(const DensityMatrix& rho, const MeasurementSet& set) {
  if (set.dim() != rho.dim()) {
    throw DimensionError("apply_selective: state and measurement dimensions differ");
  }
  OutcomeEnsemble out;
  out.labels = set.labels();
  out.probabilities.reserve(set.size());
  out.states.reserve(set.size());
  out.reachable.reserve(set.size());
  for (std::size_t m = 0; m < set.size(); ++m) {
    const CMatrix post = set.op(m) * rho.matrix() * set.op(m).adjoint();
    const double p = std::max(post.trace().real(), 0.0);
    if (p < kZeroProbability) {
      out.probabilities.push_back(p);
      out.states.push_back(maximally_mixed(rho.dim()));
      out.reachable.push_back(false);
      continue;
    }
    out.probabilities.push_back(p);
    out.states.emplace_back(symmetrized(post / p));
    out.reachable.push_back(true);
  }
  double total = 0.0;
  for (double p : out.probabilities) {
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw NumericError("apply_selective: outcome probabilities sum to " +
                       std::to_string(total));
  }
  return out;
}

DensityMatrix apply_nonselective(const DensityMatrix& rho, const MeasurementSet& set) {
  if (set.dim() != rho.dim()) {
    throw DimensionError("apply_nonselective: state and measurement dimensions differ");
  }
  CMatrix sum = CMatrix::Zero(rho.dim(), rho.dim());
  for (std::size_t m = 0; m < set.size(); ++m) {
    sum += set.op(m) * rho.matrix() * set.op(m).adjoint();
  }
  return DensityMatrix(symmetrized(sum));
}

GaussianMeasurement::GaussianMeasurement(double strength) : a(strength) {
  if (!(a >= kMinGaussianStrength)) {
    throw DomainError("GaussianMeasurement: strength must be >= 1e-3");
  }
}

CMatrix gaussian_unnormalized_post(const DensityMatrix& rho, const GaussianMeasurement& g,
                                   double v) {
  if (rho.dim() != 2) {
    throw DimensionError("gaussian_unnormalized_post: qubit states only");
  }
  const double a2 = g.a * g.a;
  const double norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * a2);
  const double g_minus = std::exp(-(v - 1.0) * (v - 1.0) / (2.0 * a2));
  const double g_plus = std::exp(-(v + 1.0) * (v + 1.0) / (2.0 * a2));
  const double g_off = std::exp(-(v * v + 1.0) / (2.0 * a2));
  const CMatrix& m = rho.matrix();
  CMatrix out(2, 2);
  out(0, 0) = norm * g_minus * m(0, 0);
  out(1, 1) = norm * g_plus * m(1, 1);
  out(0, 1) = norm * g_off * m(0, 1);
  out(1, 0) = norm * g_off * m(1, 0);
  return out;
}

DensityMatrix gaussian_nonselective(const DensityMatrix& rho, const GaussianMeasurement& g) {
  if (rho.dim() != 2) {
    throw DimensionError("gaussian_nonselective: qubit states only");
  }
  const double damp = std::exp(-1.0 / (2.0 * g.a * g.a));
  CMatrix out = rho.matrix();
  out(0, 1) *= damp;
  out(1, 0) *= damp;
  return DensityMatrix(std::move(out));
}

DensityMatrix random_density(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 2) {
    throw DimensionError("random_density: dimension must be >= 2");
  }
  std::mt19937_64 engine(seed);
  const CMatrix g = ginibre(dim, dim, engine);
  const CMatrix gg = g * g.adjoint();
  return DensityMatrix(symmetrized(gg / gg.trace().real()));
}

MeasurementSet random_measurement_set(Eigen::Index dim, std::size_t count,
                                      std::uint64_t seed) {
  if (dim < 1 || count < 1) {
    throw DimensionError("random_measurement_set: dim and count must be positive");
  }
  std::mt19937_64 engine(seed);
  std::vector<CMatrix> raw;
  raw.reserve(count);
  CMatrix s = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < count; ++k) {
    raw.push_back(ginibre(dim, dim, engine));
    s += raw.back().adjoint() * raw.back();
  }
  const HermitianEigen eig = hermitian_eigen(s);
  if (eig.eigenvalues.minCoeff() < 1e-12) {
    throw NumericError("random_measurement_set: singular normalization matrix");
  }
  const CMatrix s_inv_sqrt = eig.eigenvectors *
                             eig.eigenvalues.cwiseSqrt().cwiseInverse().asDiagonal() *
                             eig.eigenvectors.adjoint();
  std::vector<CMatrix> ops;
  ops.reserve(count);
  for (const CMatrix& g : raw) {
    ops.push_back(g * s_inv_sqrt);
  }
  return MeasurementSet(std::move(ops));
}

CMatrix random_unitary(Eigen::Index dim, std::uint64_t seed) {
  if (dim < 1) {
    throw DimensionError("random_unitary: dimension must be positive");
  }
  std::mt19937_64 engine(seed);
  const CMatrix g = ginibre(dim, dim, engine);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    const double mag = std::abs(d);
    q.col(i) *= (mag > 0.0) ? d / mag : Complex(1.0, 0.0);
  }
  return q;
}

MeasurementSet projective_from_basis(const CMatrix& basis) {
  if (basis.rows() != basis.cols()) {
    throw DimensionError("projective_from_basis: basis matrix must be square");
  }
  const Eigen::Index dim = basis.rows();
  const double defect =
      (basis.adjoint() * basis - CMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
  if (defect > kHermitianTol) {
    throw DomainError("projective_from_basis: columns are not orthonormal");
  }
  std::vector<CMatrix> ops;
  ops.reserve(dim);
  for (Eigen::Index m = 0; m < dim; ++m) {
    ops.push_back(basis.col(m) * basis.col(m).adjoint());
  }
  return MeasurementSet(std::move(ops));
}

MeasurementSet qubit_projective(double theta, double phi) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  const Complex phase = std::polar(1.0, phi);
  Eigen::Vector2cd n_plus;
  n_plus << Complex(c, 0.0), phase * s;
  Eigen::Vector2cd n_minus;
  n_minus << Complex(-s, 0.0), phase * c;
  std::vector<CMatrix> ops{n_plus * n_plus.adjoint(), n_minus * n_minus.adjoint()};
  return MeasurementSet(std::move(ops), {"+", "-"});
}

}  // namespace retroq
