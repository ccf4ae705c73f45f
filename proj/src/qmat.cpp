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

#include "retroq/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace retroq {

namespace {

constexpr double kHermiticityPre = 1e-8;

std::string violation_text(const std::vector<InvariantViolation>& violations) {
  std::ostringstream os;
  os << "density matrix invariant violation:";
  for (const auto& v : violations) {
    os << " " << v.invariant << " (defect " << v.defect << ")";
  }
  return os.str();
}

}  // namespace

CMatrix symmetrized(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

DensityValidation validate_density(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("validate_density: input must be square");
  }
  DensityValidation result;
  const double herm_defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_defect > kHermitianTol) {
    result.violations.push_back({"hermitian", herm_defect});
  }
  const double trace_defect = std::abs(m.trace().real() - 1.0) + std::abs(m.trace().imag());
  if (trace_defect > kTraceTol) {
    result.violations.push_back({"unit-trace", trace_defect});
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrized(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    result.violations.push_back({"positive-semidefinite",
                                 std::numeric_limits<double>::quiet_NaN()});
    return result;
  }
  const double min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < kEigenvalueFloor) {
    result.violations.push_back({"positive-semidefinite", min_eig});
  }
  if (result.violations.empty()) {
    result.state = DensityMatrix(m, DensityMatrix::Unchecked{});
  }
  return result;
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  DensityValidation check = validate_density(m_);
  if (!check.ok()) {
    throw DomainError(violation_text(check.violations));
  }
}

HermitianEigen hermitian_eigen(const CMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eigen: input must be square");
  }
  const double defect = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (defect > kHermiticityPre) {
    throw DomainError("hermitian_eigen: hermiticity defect " + std::to_string(defect));
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(symmetrized(m));
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian_eigen: decomposition did not converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix partial_trace(const CMatrix& m, const BipartiteDims& dims, Subsystem keep) {
  if (dims.dim_a < 1 || dims.dim_b < 1) {
    throw DimensionError("partial_trace: dimensions must be positive");
  }
  if (m.rows() != m.cols() || m.rows() != dims.total()) {
    throw DimensionError("partial_trace: matrix dimension does not match dim_a * dim_b");
  }
  const Eigen::Index da = dims.dim_a;
  const Eigen::Index db = dims.dim_b;
  if (keep == Subsystem::A) {
    CMatrix out = CMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i) {
      for (Eigen::Index j = 0; j < da; ++j) {
        for (Eigen::Index k = 0; k < db; ++k) {
          out(i, j) += m(i * db + k, j * db + k);
        }
      }
    }
    return out;
  }
  CMatrix out = CMatrix::Zero(db, db);
  for (Eigen::Index i = 0; i < db; ++i) {
    for (Eigen::Index j = 0; j < db; ++j) {
      for (Eigen::Index k = 0; k < da; ++k) {
        out(i, j) += m(k * db + i, k * db + j);
      }
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteDims& dims,
                            Subsystem keep) {
  return DensityMatrix(symmetrized(partial_trace(rho.matrix(), dims, keep)));
}

DensityMatrix bloch_to_density(const BlochVector& b) {
  if (b.r < 0.0 || b.r > 1.0) {
    throw DomainError("bloch_to_density: radius must lie in [0, 1]");
  }
  const double nx = std::sin(b.theta) * std::cos(b.phi);
  const double ny = std::sin(b.theta) * std::sin(b.phi);
  const double nz = std::cos(b.theta);
  CMatrix m(2, 2);
  m(0, 0) = Complex(0.5 * (1.0 + b.r * nz), 0.0);
  m(1, 1) = Complex(0.5 * (1.0 - b.r * nz), 0.0);
  m(0, 1) = 0.5 * b.r * Complex(nx, -ny);
  m(1, 0) = 0.5 * b.r * Complex(nx, ny);
  return DensityMatrix(std::move(m));
}

BlochVector density_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) {
    throw DimensionError("density_to_bloch: qubit states only");
  }
  const CMatrix& m = rho.matrix();
  const double rx = 2.0 * m(1, 0).real();
  const double ry = 2.0 * m(1, 0).imag();
  const double rz = (m(0, 0) - m(1, 1)).real();
  const double r = std::sqrt(rx * rx + ry * ry + rz * rz);
  BlochVector b;
  b.r = std::min(r, 1.0);
  if (r < 1e-15) {
    return b;
  }
  b.theta = std::acos(std::clamp(rz / r, -1.0, 1.0));
  b.phi = std::atan2(ry, rx);
  if (b.phi < 0.0) {
    b.phi += 2.0 * std::numbers::pi;
  }
  return b;
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

DensityMatrix maximally_mixed(Eigen::Index dim) {
  if (dim < 1) {
    throw DimensionError("maximally_mixed: dimension must be positive");
  }
  return DensityMatrix(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

}  // namespace retroq
