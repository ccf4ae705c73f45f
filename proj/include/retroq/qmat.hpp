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

#ifndef RETROQ_QMAT_HPP
#define RETROQ_QMAT_HPP

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace retroq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

class DimensionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class DomainError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class NumericError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class LabelMismatchError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Tolerances shared across the library.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;
inline constexpr double kZeroProbability = 1e-14;

/// Dimensions of a bipartite system A x B with the composite index
/// convention i = i_a * dim_b + i_b.
struct BipartiteDims {
  Eigen::Index dim_a = 0;
  Eigen::Index dim_b = 0;

  Eigen::Index total() const { return dim_a * dim_b; }
};

enum class Subsystem { A, B };

/// Spherical parametrization of a qubit state, rho = (I + r n.sigma)/2 with
/// n = (sin(theta)cos(phi), sin(theta)sin(phi), cos(theta)).
struct BlochVector {
  double r = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

struct InvariantViolation {
  std::string invariant;
  double defect = 0.0;
};

struct DensityValidation;
DensityValidation validate_density(const CMatrix& m);

/// Hermitian, unit-trace, positive-semidefinite matrix. Construction
/// validates all three invariants and throws DomainError on violation.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix m);

  Eigen::Index dim() const { return m_.rows(); }
  const CMatrix& matrix() const { return m_; }

 private:
  struct Unchecked {};
  DensityMatrix(CMatrix m, Unchecked) : m_(std::move(m)) {}

  CMatrix m_;

  friend DensityValidation validate_density(const CMatrix& m);
};

/// Result of checking the DensityMatrix invariants on a square matrix.
/// Violations are data, one entry per failed invariant with its defect.
struct DensityValidation {
  std::optional<DensityMatrix> state;
  std::vector<InvariantViolation> violations;

  bool ok() const { return violations.empty(); }
};

struct HermitianEigen {
  Eigen::VectorXd eigenvalues;  // ascending
  CMatrix eigenvectors;         // columns
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (M + M^dag)/2 before decomposition; a Hermiticity defect above 1e-8 is
/// rejected.
HermitianEigen hermitian_eigen(const CMatrix& m);

/// Kronecker product, entry (i*rb + k, j*cb + l) = a(i, j) * b(k, l).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (!a.allFinite() || !b.allFinite()) {
    throw DomainError("kron: non-finite input");
  }
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Partial trace over the discarded factor of a bipartite matrix. Linear in
/// the input; no state validation is performed.
CMatrix partial_trace(const CMatrix& m, const BipartiteDims& dims, Subsystem keep);

/// Typed overload: partial traces of density matrices are density matrices.
DensityMatrix partial_trace(const DensityMatrix& rho, const BipartiteDims& dims,
                            Subsystem keep);

DensityMatrix bloch_to_density(const BlochVector& b);

/// Inverse of bloch_to_density for qubits. The angles of the zero vector are
/// reported as (0, 0).
BlochVector density_to_bloch(const DensityMatrix& rho);

CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();

/// (M + M^dag)/2. Products assembled from float arithmetic pick up ~1e-16
/// asymmetry; state constructors expect it scrubbed.
CMatrix symmetrized(const CMatrix& m);

DensityMatrix maximally_mixed(Eigen::Index dim);

}  // namespace retroq

#endif  // RETROQ_QMAT_HPP
