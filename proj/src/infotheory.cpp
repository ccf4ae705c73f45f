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

#include "retroq/infotheory.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

namespace retroq {

namespace {

double entropy_of_eigenvalues(const Eigen::VectorXd& eigenvalues) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) {
    double lambda = eigenvalues(i);
    if (lambda < kEigenvalueFloor) {
      throw DomainError("entropy: eigenvalue " + std::to_string(lambda) +
                        " below the positivity floor");
    }
    if (lambda <= 0.0) {
      continue;  // 0 ln 0 := 0
    }
    s -= lambda * std::log(lambda);
  }
  return std::max(s, 0.0);
}

double entropy_of(const CMatrix& m) {
  return entropy_of_eigenvalues(hermitian_eigen(m).eigenvalues);
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Average of f over the reachable outcomes of an ensemble.
template <typename F>
double weighted_average(const std::vector<double>& probabilities,
                        const std::vector<bool>& reachable, F&& f) {
  double acc = 0.0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (!reachable[k]) {
      continue;
    }
    acc += probabilities[k] * f(k);
  }
  return acc;
}

}  // namespace

InequalityReport bound_report(std::string name, double lhs, double rhs, std::string context,
                              double slack) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.satisfied = r.margin >= -slack;
  r.context = std::move(context);
  return r;
}

InequalityReport equality_report(std::string name, double lhs, double rhs,
                                 std::string context, double tol) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.satisfied = std::abs(r.margin) <= tol;
  r.context = std::move(context);
  return r;
}

std::string to_json_line(const InequalityReport& report) {
  std::string out = "{\"name\":\"" + json_escape(report.name) + "\"";
  out += ",\"lhs\":" + fmt_double(report.lhs);
  out += ",\"rhs\":" + fmt_double(report.rhs);
  out += ",\"margin\":" + fmt_double(report.margin);
  out += report.satisfied ? ",\"satisfied\":true" : ",\"satisfied\":false";
  out += ",\"context\":\"" + json_escape(report.context) + "\"}";
  return out;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of(rho.matrix());
}

double shannon_entropy(const Eigen::VectorXd& p) {
  double sum = 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double q = p(i);
    if (q < 0.0) {
      if (q < -1e-12) {
        throw DomainError("shannon_entropy: negative probability " + std::to_string(q));
      }
      q = 0.0;
    }
    sum += q;
    if (q > 0.0) {
      s -= q * std::log(q);
    }
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("shannon_entropy: probabilities sum to " + std::to_string(sum));
  }
  return std::max(s, 0.0);
}

double shannon_entropy(const std::vector<double>& p) {
  return shannon_entropy(Eigen::Map<const Eigen::VectorXd>(p.data(),
                                                           static_cast<Eigen::Index>(p.size())));
}

double conditional_shannon(const JointDistribution& joint) {
  const Eigen::VectorXd p_y = joint.marginal_y();
  double h = 0.0;
  for (Eigen::Index y = 0; y < joint.p.rows(); ++y) {
    if (p_y(y) < kZeroProbability) {
      continue;
    }
    for (Eigen::Index m = 0; m < joint.p.cols(); ++m) {
      const double cond = joint.p(y, m) / p_y(y);
      if (cond > 0.0) {
        h -= p_y(y) * cond * std::log(cond);
      }
    }
  }
  return std::max(h, 0.0);
}

double classical_mutual(const JointDistribution& joint) {
  const Eigen::VectorXd flat =
      Eigen::Map<const Eigen::VectorXd>(joint.p.data(), joint.p.size());
  return shannon_entropy(joint.marginal_m()) + shannon_entropy(joint.marginal_y()) -
         shannon_entropy(flat);
}

double quantum_mutual(const DensityMatrix& rho_ab, const BipartiteDims& dims) {
  const DensityMatrix rho_a = partial_trace(rho_ab, dims, Subsystem::A);
  const DensityMatrix rho_b = partial_trace(rho_ab, dims, Subsystem::B);
  return von_neumann_entropy(rho_a) + von_neumann_entropy(rho_b) -
         von_neumann_entropy(rho_ab);
}

double holevo_chi(const Eigen::VectorXd& probs, const std::vector<DensityMatrix>& states) {
  if (static_cast<std::size_t>(probs.size()) != states.size() || states.empty()) {
    throw DimensionError("holevo_chi: one probability per state required");
  }
  const Eigen::Index dim = states.front().dim();
  double sum = 0.0;
  double avg_entropy = 0.0;
  CMatrix mix = CMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].dim() != dim) {
      throw DimensionError("holevo_chi: states of mixed dimension");
    }
    const double p = probs(static_cast<Eigen::Index>(k));
    sum += p;
    if (p < kZeroProbability) {
      continue;
    }
    mix += p * states[k].matrix();
    avg_entropy += p * von_neumann_entropy(states[k]);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw DomainError("holevo_chi: probabilities sum to " + std::to_string(sum));
  }
  return entropy_of(symmetrized(mix)) - avg_entropy;
}

CentralReport central_report(const DensityMatrix& rho, const MeasurementSet& first,
                             const MeasurementSet& second) {
  const SmoothingResult sm = smooth(rho, first, second);
  const DensityMatrix rho_omega = apply_nonselective(rho, first);

  CentralReport report;
  report.s_nonselective = von_neumann_entropy(rho_omega);
  report.s_retro_avg = 0.0;
  for (Eigen::Index y = 0; y < sm.p_y.size(); ++y) {
    if (sm.reachable_y[static_cast<std::size_t>(y)]) {
      report.s_retro_avg += sm.p_y(y) * von_neumann_entropy(sm.smoothed[static_cast<std::size_t>(y)]);
    }
  }
  report.s_selective_avg =
      weighted_average(sm.ensemble.probabilities, sm.ensemble.reachable,
                       [&](std::size_t m) { return von_neumann_entropy(sm.ensemble.states[m]); });
  report.h_y = shannon_entropy(sm.p_y);
  report.h_m = shannon_entropy(sm.joint.marginal_m());

  report.reports.push_back(bound_report(
      "central.upper", report.s_nonselective, report.s_retro_avg,
      "nonselective entropy bounds the average retrodicted entropy from above"));
  report.reports.push_back(bound_report(
      "central.lower", report.s_retro_avg, report.s_selective_avg,
      "average retrodicted entropy bounds the average selective entropy from above"));
  report.reports.push_back(bound_report(
      "gap.second_shannon", report.h_y, report.s_nonselective - report.s_retro_avg,
      "Shannon entropy of the second outcomes bounds the nonselective-retrodicted gap"));
  report.reports.push_back(bound_report(
      "gap.first_shannon", report.h_m, report.s_retro_avg - report.s_selective_avg,
      "Shannon entropy of the first outcomes bounds the retrodicted-selective gap"));
  return report;
}

CentralReport subsystem_central_report(const SmoothingResult& smoothing,
                                       const BipartiteDims& dims, Subsystem keep) {
  const char* tag = (keep == Subsystem::A) ? "subsystem_a" : "subsystem_b";

  // Definitional route for the nonselective state: probability mix of the
  // selective resolution, not the smoothed average.
  const Eigen::Index dim = smoothing.ensemble.states.front().dim();
  CMatrix omega_mix = CMatrix::Zero(dim, dim);
  for (std::size_t m = 0; m < smoothing.ensemble.states.size(); ++m) {
    if (smoothing.ensemble.reachable[m]) {
      omega_mix += smoothing.ensemble.probabilities[m] * smoothing.ensemble.states[m].matrix();
    }
  }
  const DensityMatrix rho_omega(symmetrized(omega_mix));

  CentralReport report;
  report.s_nonselective = von_neumann_entropy(partial_trace(rho_omega, dims, keep));
  report.s_retro_avg = 0.0;
  for (Eigen::Index y = 0; y < smoothing.p_y.size(); ++y) {
    if (smoothing.reachable_y[static_cast<std::size_t>(y)]) {
      report.s_retro_avg +=
          smoothing.p_y(y) *
          von_neumann_entropy(partial_trace(smoothing.smoothed[static_cast<std::size_t>(y)], dims, keep));
    }
  }
  report.s_selective_avg = weighted_average(
      smoothing.ensemble.probabilities, smoothing.ensemble.reachable, [&](std::size_t m) {
        return von_neumann_entropy(partial_trace(smoothing.ensemble.states[m], dims, keep));
      });
  report.h_y = shannon_entropy(smoothing.p_y);
  report.h_m = shannon_entropy(smoothing.joint.marginal_m());

  const std::string prefix = std::string("central.") + tag;
  report.reports.push_back(bound_report(
      prefix + ".upper", report.s_nonselective, report.s_retro_avg,
      "entropy sandwich upper bound restricted to one subsystem"));
  report.reports.push_back(bound_report(
      prefix + ".lower", report.s_retro_avg, report.s_selective_avg,
      "entropy sandwich lower bound restricted to one subsystem"));
  report.reports.push_back(bound_report(
      std::string("gap.") + tag + ".second_shannon", report.h_y,
      report.s_nonselective - report.s_retro_avg,
      "second-outcome Shannon entropy bounds the subsystem entropy drop"));
  report.reports.push_back(bound_report(
      std::string("gap.") + tag + ".first_shannon", report.h_m,
      report.s_retro_avg - report.s_selective_avg,
      "first-outcome Shannon entropy bounds the subsystem entropy gain"));
  return report;
}

std::vector<InequalityReport> mutual_report(const DensityMatrix& rho_ab,
                                            const BipartiteDims& dims,
                                            const MeasurementSet& first,
                                            const MeasurementSet& second) {
  if (rho_ab.dim() != dims.total()) {
    throw DimensionError("mutual_report: state dimension does not match dim_a * dim_b");
  }
  const SmoothingResult sm = smooth(rho_ab, first, second);
  const DensityMatrix rho_omega = apply_nonselective(rho_ab, first);

  const double s_nonsel = von_neumann_entropy(rho_omega);
  const double i_nonsel = quantum_mutual(rho_omega, dims);
  double s_retro = 0.0;
  double i_retro = 0.0;
  for (Eigen::Index y = 0; y < sm.p_y.size(); ++y) {
    if (!sm.reachable_y[static_cast<std::size_t>(y)]) {
      continue;
    }
    const DensityMatrix& rho_y = sm.smoothed[static_cast<std::size_t>(y)];
    s_retro += sm.p_y(y) * von_neumann_entropy(rho_y);
    i_retro += sm.p_y(y) * quantum_mutual(rho_y, dims);
  }
  double s_sel = 0.0;
  double i_sel = 0.0;
  for (std::size_t m = 0; m < sm.ensemble.states.size(); ++m) {
    if (!sm.ensemble.reachable[m]) {
      continue;
    }
    s_sel += sm.ensemble.probabilities[m] * von_neumann_entropy(sm.ensemble.states[m]);
    i_sel += sm.ensemble.probabilities[m] * quantum_mutual(sm.ensemble.states[m], dims);
  }

  std::vector<InequalityReport> reports;
  reports.push_back(bound_report(
      "mutual.nonselective_vs_retrodicted", s_nonsel - s_retro, i_nonsel - i_retro,
      "entropy drop bounds the mutual-information drop under retrodiction"));
  reports.push_back(bound_report(
      "mutual.retrodicted_vs_selective", s_retro - s_sel, i_retro - i_sel,
      "entropy gain bounds the mutual-information gain over the selective resolution"));
  return reports;
}

ProjectiveBipartiteReport projective_bipartite_report(const DensityMatrix& rho_ab,
                                                      const BipartiteDims& dims,
                                                      const CMatrix& basis_b,
                                                      const MeasurementSet& second_on_a) {
  if (rho_ab.dim() != dims.total()) {
    throw DimensionError("projective_bipartite_report: state dimension mismatch");
  }
  if (basis_b.rows() != dims.dim_b || basis_b.cols() != dims.dim_b) {
    throw DimensionError("projective_bipartite_report: basis must be dim_b x dim_b");
  }
  const double basis_defect =
      (basis_b.adjoint() * basis_b - CMatrix::Identity(dims.dim_b, dims.dim_b))
          .cwiseAbs()
          .maxCoeff();
  if (basis_defect > kHermitianTol) {
    throw DomainError(
        "projective_bipartite_report: first measurement must be projective in an "
        "orthonormal basis of subsystem B");
  }
  if (second_on_a.dim() != dims.dim_a) {
    throw DimensionError("projective_bipartite_report: second measurement must act on A");
  }

  const CMatrix id_a = CMatrix::Identity(dims.dim_a, dims.dim_a);
  const CMatrix id_b = CMatrix::Identity(dims.dim_b, dims.dim_b);
  std::vector<CMatrix> first_ops;
  first_ops.reserve(static_cast<std::size_t>(dims.dim_b));
  for (Eigen::Index m = 0; m < dims.dim_b; ++m) {
    first_ops.push_back(kron(id_a, CMatrix(basis_b.col(m) * basis_b.col(m).adjoint())));
  }
  const MeasurementSet first(std::move(first_ops));
  std::vector<CMatrix> second_ops;
  second_ops.reserve(second_on_a.size());
  for (std::size_t y = 0; y < second_on_a.size(); ++y) {
    second_ops.push_back(kron(second_on_a.op(y), id_b));
  }
  const MeasurementSet second(std::move(second_ops), second_on_a.labels());

  const SmoothingResult sm = smooth(rho_ab, first, second);
  const DensityMatrix rho_omega = apply_nonselective(rho_ab, first);
  const Eigen::VectorXd p_m = sm.joint.marginal_m();

  ProjectiveBipartiteReport rep;
  rep.h_m = shannon_entropy(p_m);
  rep.h_y = shannon_entropy(sm.p_y);
  rep.h_m_given_y = conditional_shannon(sm.joint);
  rep.h_joint = shannon_entropy(
      Eigen::VectorXd(Eigen::Map<const Eigen::VectorXd>(sm.joint.p.data(), sm.joint.p.size())));
  rep.h_mutual = classical_mutual(sm.joint);

  rep.s_ab_nonselective = von_neumann_entropy(rho_omega);
  rep.s_a_nonselective = von_neumann_entropy(partial_trace(rho_omega, dims, Subsystem::A));
  rep.i_nonselective = quantum_mutual(rho_omega, dims);
  const double s_b_nonselective =
      von_neumann_entropy(partial_trace(rho_omega, dims, Subsystem::B));

  std::vector<DensityMatrix> states_a;
  states_a.reserve(sm.ensemble.states.size());
  double s_b_selective = 0.0;
  for (std::size_t m = 0; m < sm.ensemble.states.size(); ++m) {
    states_a.push_back(partial_trace(sm.ensemble.states[m], dims, Subsystem::A));
    if (!sm.ensemble.reachable[m]) {
      continue;
    }
    const double p = sm.ensemble.probabilities[m];
    rep.s_ab_selective_avg += p * von_neumann_entropy(sm.ensemble.states[m]);
    rep.s_a_selective_avg += p * von_neumann_entropy(states_a.back());
    rep.i_selective_avg += p * quantum_mutual(sm.ensemble.states[m], dims);
    s_b_selective +=
        p * von_neumann_entropy(partial_trace(sm.ensemble.states[m], dims, Subsystem::B));
  }

  CMatrix smoothed_mix_a = CMatrix::Zero(dims.dim_a, dims.dim_a);
  double s_b_retro = 0.0;
  for (Eigen::Index y = 0; y < sm.p_y.size(); ++y) {
    if (!sm.reachable_y[static_cast<std::size_t>(y)]) {
      continue;
    }
    const double p = sm.p_y(y);
    const DensityMatrix& rho_y = sm.smoothed[static_cast<std::size_t>(y)];
    const DensityMatrix rho_y_a = partial_trace(rho_y, dims, Subsystem::A);
    rep.s_ab_retro_avg += p * von_neumann_entropy(rho_y);
    rep.s_a_retro_avg += p * von_neumann_entropy(rho_y_a);
    rep.i_retro_avg += p * quantum_mutual(rho_y, dims);
    s_b_retro += p * von_neumann_entropy(partial_trace(rho_y, dims, Subsystem::B));
    smoothed_mix_a += p * rho_y_a.matrix();
  }

  rep.holevo = holevo_chi(p_m, states_a);
  rep.retro_holevo_rhs =
      entropy_of(symmetrized(smoothed_mix_a)) - rep.s_a_retro_avg;

  auto& reports = rep.reports;
  reports.push_back(equality_report(
      "projective.decomposition.nonselective", rep.s_ab_nonselective,
      rep.h_m + rep.s_a_selective_avg,
      "equality: bipartite nonselective entropy splits into outcome Shannon entropy "
      "plus average conditional entropy on A"));
  reports.push_back(equality_report(
      "projective.decomposition.retrodicted", rep.s_ab_retro_avg,
      rep.h_m_given_y + rep.s_a_selective_avg,
      "equality: average smoothed bipartite entropy splits into conditional Shannon "
      "entropy plus average conditional entropy on A"));
  reports.push_back(equality_report(
      "projective.decomposition.selective", rep.s_ab_selective_avg, rep.s_a_selective_avg,
      "equality: selective bipartite entropies reduce to subsystem-A entropies"));
  reports.push_back(equality_report(
      "projective.selective_mutual_zero", rep.i_selective_avg, 0.0,
      "equality: selective outcomes are product states, their mutual information vanishes"));

  reports.push_back(bound_report(
      "mutual_drop.upper", rep.h_mutual, rep.i_nonselective - rep.i_retro_avg,
      "classical mutual information of the outcomes bounds the quantum "
      "mutual-information drop"));
  reports.push_back(equality_report(
      "mutual_drop.identity", rep.i_nonselective - rep.i_retro_avg,
      rep.s_a_nonselective - rep.s_a_retro_avg,
      "equality: the mutual-information drop equals the subsystem-A entropy drop"));
  reports.push_back(bound_report(
      "mutual_drop.lower", rep.s_a_nonselective - rep.s_a_retro_avg, 0.0,
      "the retrodicted measurement cannot increase the mutual information"));

  reports.push_back(bound_report(
      "mutual_gain.upper", rep.h_m_given_y, rep.i_retro_avg - rep.i_selective_avg,
      "conditional outcome entropy bounds the quantum mutual-information gain over "
      "the selective resolution"));
  reports.push_back(equality_report(
      "mutual_gain.identity", rep.i_retro_avg - rep.i_selective_avg,
      rep.s_a_retro_avg - rep.s_a_selective_avg,
      "equality: the mutual-information gain equals the subsystem-A entropy gain"));
  reports.push_back(bound_report(
      "mutual_gain.lower", rep.s_a_retro_avg - rep.s_a_selective_avg, 0.0,
      "the average smoothed mutual information is at least the selective one"));

  reports.push_back(equality_report(
      "entropy_drop.identity", rep.s_ab_nonselective - rep.s_ab_retro_avg, rep.h_mutual,
      "equality: the bipartite entropy drop equals the classical mutual information"));
  reports.push_back(bound_report(
      "entropy_drop.bound", rep.h_y, rep.h_mutual,
      "second-outcome Shannon entropy bounds the classical mutual information"));
  reports.push_back(equality_report(
      "entropy_gain.identity", rep.s_ab_retro_avg - rep.s_ab_selective_avg, rep.h_m_given_y,
      "equality: the bipartite entropy gain equals the conditional outcome entropy"));
  reports.push_back(bound_report(
      "entropy_gain.bound", rep.h_m, rep.h_m_given_y,
      "first-outcome Shannon entropy bounds the conditional outcome entropy"));

  reports.push_back(bound_report(
      "holevo.upper", rep.holevo, rep.h_mutual,
      "accessible information is bounded by the Holevo quantity of the "
      "first-measurement ensemble"));
  reports.push_back(bound_report(
      "holevo.retrodicted_lower", rep.h_mutual, rep.retro_holevo_rhs,
      "classical mutual information is bounded below by the Holevo quantity of the "
      "smoothed ensemble"));

  reports.push_back(bound_report(
      "central.subsystem_a.upper", rep.s_a_nonselective, rep.s_a_retro_avg,
      "entropy sandwich upper bound on the unmeasured subsystem"));
  reports.push_back(bound_report(
      "central.subsystem_a.lower", rep.s_a_retro_avg, rep.s_a_selective_avg,
      "entropy sandwich lower bound on the unmeasured subsystem"));

  reports.push_back(equality_report(
      "subsystem_b.nonselective", s_b_nonselective, rep.h_m,
      "equality: the measured register dephases to the outcome distribution"));
  reports.push_back(equality_report(
      "subsystem_b.retrodicted", s_b_retro, rep.h_m_given_y,
      "equality: smoothed register entropy reduces to the conditional Shannon entropy"));
  reports.push_back(equality_report(
      "subsystem_b.selective", s_b_selective, 0.0,
      "equality: selective register states are pure"));
  return rep;
}

std::vector<InequalityReport> tripartite_checks(const JointDistribution& joint,
                                                const std::vector<DensityMatrix>& states_m_ab,
                                                const BipartiteDims& dims) {
  const Eigen::Index n_y = joint.p.rows();
  const Eigen::Index n_m = joint.p.cols();
  if (static_cast<std::size_t>(n_m) != states_m_ab.size() || states_m_ab.empty()) {
    throw DimensionError("tripartite_checks: one state per first outcome required");
  }
  const Eigen::Index d_ab = dims.total();
  if (states_m_ab.front().dim() != d_ab) {
    throw DimensionError("tripartite_checks: state dimension does not match dims");
  }
  if (d_ab * n_y > 64 || d_ab * n_m > 64) {
    throw DimensionError("tripartite_checks: assembled dimension above 64 rejected");
  }

  const Eigen::VectorXd p_y = joint.marginal_y();
  const Eigen::VectorXd p_m = joint.marginal_m();

  // Blocks sum_m p(y, m) rho_m^ab = p(y) rho_y^ab of the y-extension.
  std::vector<CMatrix> blocks;
  blocks.reserve(static_cast<std::size_t>(n_y));
  for (Eigen::Index y = 0; y < n_y; ++y) {
    CMatrix block = CMatrix::Zero(d_ab, d_ab);
    for (Eigen::Index m = 0; m < n_m; ++m) {
      block += joint.p(y, m) * states_m_ab[static_cast<std::size_t>(m)].matrix();
    }
    blocks.push_back(std::move(block));
  }

  CMatrix rho_abc = CMatrix::Zero(d_ab * n_y, d_ab * n_y);
  for (Eigen::Index y = 0; y < n_y; ++y) {
    rho_abc.block(y * d_ab, y * d_ab, d_ab, d_ab) = blocks[static_cast<std::size_t>(y)];
  }
  // The register sits in the fast index: rho_abc = sum p(y,m) rho_m^ab (x) |y><y|
  // would interleave; block layout keeps the same spectrum, which is all the
  // entropies see.
  const double s_abc = entropy_of(symmetrized(rho_abc));

  double decomposition_rhs = shannon_entropy(p_y);
  for (Eigen::Index y = 0; y < n_y; ++y) {
    if (p_y(y) < kZeroProbability) {
      continue;
    }
    decomposition_rhs +=
        p_y(y) * entropy_of(symmetrized(blocks[static_cast<std::size_t>(y)] / p_y(y)));
  }

  std::vector<InequalityReport> reports;
  reports.push_back(equality_report(
      "tripartite.decomposition", s_abc, decomposition_rhs,
      "equality: entropy of the outcome-extended state splits into outcome Shannon "
      "entropy plus the average smoothed entropy"));

  for (Eigen::Index y = 0; y < n_y; ++y) {
    if (p_y(y) < kZeroProbability) {
      continue;
    }
    CMatrix rho_y_abc = CMatrix::Zero(d_ab * n_m, d_ab * n_m);
    double rhs = 0.0;
    Eigen::VectorXd cond(n_m);
    for (Eigen::Index m = 0; m < n_m; ++m) {
      const double w = joint.p(y, m) / p_y(y);
      cond(m) = w;
      rho_y_abc.block(m * d_ab, m * d_ab, d_ab, d_ab) =
          w * states_m_ab[static_cast<std::size_t>(m)].matrix();
      if (w > kZeroProbability) {
        rhs += w * von_neumann_entropy(states_m_ab[static_cast<std::size_t>(m)]);
      }
    }
    rhs += shannon_entropy(cond);
    reports.push_back(equality_report(
        "tripartite.decomposition.conditional", entropy_of(symmetrized(rho_y_abc)), rhs,
        "equality: conditional-extension entropy splits into conditional Shannon "
        "entropy plus the average selective entropy, second outcome " +
            joint.labels_y[static_cast<std::size_t>(y)]));
  }

  CMatrix rho_ab_total = CMatrix::Zero(d_ab, d_ab);
  for (Eigen::Index m = 0; m < n_m; ++m) {
    rho_ab_total += p_m(m) * states_m_ab[static_cast<std::size_t>(m)].matrix();
  }
  const double s_ab = entropy_of(symmetrized(rho_ab_total));
  const double s_a = entropy_of(symmetrized(partial_trace(rho_ab_total, dims, Subsystem::A)));
  CMatrix rho_ac = CMatrix::Zero(dims.dim_a * n_y, dims.dim_a * n_y);
  for (Eigen::Index y = 0; y < n_y; ++y) {
    rho_ac.block(y * dims.dim_a, y * dims.dim_a, dims.dim_a, dims.dim_a) =
        partial_trace(blocks[static_cast<std::size_t>(y)], dims, Subsystem::A);
  }
  const double s_ac = entropy_of(symmetrized(rho_ac));
  reports.push_back(bound_report(
      "tripartite.strong_subadditivity", s_ab + s_ac, s_abc + s_a,
      "strong subadditivity of the outcome-extended tripartite state"));
  return reports;
}

}  // namespace retroq
