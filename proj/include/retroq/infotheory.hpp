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

#ifndef RETROQ_INFOTHEORY_HPP
#define RETROQ_INFOTHEORY_HPP

#include "retroq/retrodiction.hpp"

#include <string>
#include <vector>

namespace retroq {

// All entropic quantities are in nats.

inline constexpr double kInequalitySlack = 1e-8;
inline constexpr double kEqualityTol = 1e-9;

/// Named lhs/rhs pair with margin = lhs - rhs. Bound reports are satisfied
/// when margin >= -1e-8; equality reports when |margin| <= their tolerance.
struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  bool satisfied = false;
  std::string context;
};

InequalityReport bound_report(std::string name, double lhs, double rhs, std::string context,
                              double slack = kInequalitySlack);

InequalityReport equality_report(std::string name, double lhs, double rhs,
                                 std::string context, double tol = kEqualityTol);

/// Serialization shared with the CLI: one flat JSON object per report,
/// {"name": ..., "lhs": ..., "rhs": ..., "margin": ..., "satisfied": ...,
/// "context": ...}.
std::string to_json_line(const InequalityReport& report);

double von_neumann_entropy(const DensityMatrix& rho);

double shannon_entropy(const Eigen::VectorXd& p);
double shannon_entropy(const std::vector<double>& p);

/// H[m|y] = -sum_y p(y) sum_m p(m|y) ln p(m|y).
double conditional_shannon(const JointDistribution& joint);

/// H[m:y] = H[m] + H[y] - H[m,y].
double classical_mutual(const JointDistribution& joint);

/// I[rho^ab] = S[rho^a] + S[rho^b] - S[rho^ab].
double quantum_mutual(const DensityMatrix& rho_ab, const BipartiteDims& dims);

/// Holevo quantity chi = S[sum p_m rho_m] - sum p_m S[rho_m].
double holevo_chi(const Eigen::VectorXd& probs, const std::vector<DensityMatrix>& states);

/// Entropy sandwich of the retrodicted measurement plus the two Shannon gap
/// bounds: S[rho_Omega] >= sum_y p(y) S[rho_y] >= sum_m p(m) S[rho_m],
/// H[y] >= S[rho_Omega] - retro average, H[m] >= retro - selective average.
struct CentralReport {
  double s_nonselective = 0.0;
  double s_retro_avg = 0.0;
  double s_selective_avg = 0.0;
  double h_y = 0.0;
  double h_m = 0.0;
  std::vector<InequalityReport> reports;
};

CentralReport central_report(const DensityMatrix& rho, const MeasurementSet& first,
                             const MeasurementSet& second);

/// Same sandwich evaluated on one subsystem of a bipartite pipeline.
CentralReport subsystem_central_report(const SmoothingResult& smoothing,
                                       const BipartiteDims& dims, Subsystem keep);

/// Mutual-information bounds for bipartite systems: the entropy differences
/// upper-bound the mutual-information differences at the non-selective,
/// retrodicted and selective stages.
std::vector<InequalityReport> mutual_report(const DensityMatrix& rho_ab,
                                            const BipartiteDims& dims,
                                            const MeasurementSet& first,
                                            const MeasurementSet& second);

/// First measurement projective on B in the columns of basis_b, second
/// measurement arbitrary on A.
struct ProjectiveBipartiteReport {
  double h_m = 0.0;
  double h_y = 0.0;
  double h_m_given_y = 0.0;
  double h_joint = 0.0;
  double h_mutual = 0.0;  // H[m:y]

  double s_ab_nonselective = 0.0;
  double s_ab_retro_avg = 0.0;
  double s_ab_selective_avg = 0.0;

  double s_a_nonselective = 0.0;
  double s_a_retro_avg = 0.0;
  double s_a_selective_avg = 0.0;

  double i_nonselective = 0.0;
  double i_retro_avg = 0.0;
  double i_selective_avg = 0.0;

  double holevo = 0.0;           // chi of the first-measurement ensemble on A
  double retro_holevo_rhs = 0.0; // S[sum p(y) rho_y^a] - sum p(y) S[rho_y^a]

  std::vector<InequalityReport> reports;
};

ProjectiveBipartiteReport projective_bipartite_report(const DensityMatrix& rho_ab,
                                                      const BipartiteDims& dims,
                                                      const CMatrix& basis_b,
                                                      const MeasurementSet& second_on_a);

/// Tripartite extensions rho^abc = sum p(y,m) rho_m^ab (x) |y><y| and, per
/// outcome y, rho_y^abc = sum_m p(m|y) rho_m^ab (x) |m><m|: entropy
/// decompositions checked as equalities and strong subadditivity as a bound.
/// Assembled dimensions above 64 are rejected.
std::vector<InequalityReport> tripartite_checks(const JointDistribution& joint,
                                                const std::vector<DensityMatrix>& states_m_ab,
                                                const BipartiteDims& dims);

}  // namespace retroq

#endif  // RETROQ_INFOTHEORY_HPP
