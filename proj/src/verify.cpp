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

#include "retroq/verify.hpp"

#include <optional>
#include <sstream>
#include <utility>

namespace retroq {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

struct CaseSetup {
  DensityMatrix rho;
  MeasurementSet first;
  MeasurementSet second;
  BipartiteDims dims{0, 0};
  std::optional<CMatrix> basis_b;
  std::optional<MeasurementSet> second_on_a;
};

std::string dump_case(std::size_t index, std::uint64_t case_seed, const std::string& family,
                      const CaseSetup& setup) {
  const Eigen::IOFormat fmt(Eigen::FullPrecision, 0, ", ", "\n  ", "[", "]");
  std::ostringstream os;
  os << "case=" << index << " case_seed=" << case_seed << " family=" << family;
  if (setup.dims.dim_a > 0) {
    os << " dims=(" << setup.dims.dim_a << "," << setup.dims.dim_b << ")";
  }
  os << "\nrho =\n  " << setup.rho.matrix().format(fmt) << "\n";
  for (std::size_t m = 0; m < setup.first.size(); ++m) {
    os << "first[" << setup.first.label(m) << "] =\n  "
       << setup.first.op(m).format(fmt) << "\n";
  }
  for (std::size_t y = 0; y < setup.second.size(); ++y) {
    os << "second[" << setup.second.label(y) << "] =\n  "
       << setup.second.op(y).format(fmt) << "\n";
  }
  return os.str();
}

double max_entry_defect(const CMatrix& a, const CMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

VerifyOutcome run_verify(const VerifyConfig& config) {
  VerifyOutcome outcome;
  for (std::size_t i = 0; i < config.cases; ++i) {
    const std::uint64_t case_seed = mix_seed(config.seed, i);
    const int family = static_cast<int>(i % 3);

    std::vector<InequalityReport> reports;
    std::string family_name;
    CaseSetup setup = [&]() -> CaseSetup {
      if (family == 0) {
        // Every few single-system cases force one of the two extremal pairs,
        // where the sandwich bounds are tight.
        if (i % 12 == 0) {
          family_name = "single.completely_correlated";
          const Eigen::Index dim =
              2 + static_cast<Eigen::Index>(mix_seed(case_seed, 11) % 3);
          const MeasurementSet shared =
              projective_from_basis(random_unitary(dim, mix_seed(case_seed, 2)));
          return CaseSetup{random_density(dim, mix_seed(case_seed, 1)), shared, shared,
                           BipartiteDims{0, 0}, {}, {}};
        }
        if (i % 12 == 3) {
          family_name = "single.statistically_independent";
          return CaseSetup{random_density(2, mix_seed(case_seed, 1)),
                           qubit_projective(0.0, 0.0),
                           qubit_projective(1.5707963267948966, 0.0),
                           BipartiteDims{0, 0}, {}, {}};
        }
        family_name = "single";
        const Eigen::Index dim = 2 + static_cast<Eigen::Index>(mix_seed(case_seed, 11) % 3);
        const std::size_t n1 = 2 + mix_seed(case_seed, 12) % 3;
        const std::size_t n2 = 2 + mix_seed(case_seed, 13) % 3;
        return CaseSetup{random_density(dim, mix_seed(case_seed, 1)),
                         random_measurement_set(dim, n1, mix_seed(case_seed, 2)),
                         random_measurement_set(dim, n2, mix_seed(case_seed, 3)),
                         BipartiteDims{0, 0}, {}, {}};
      }
      if (family == 1) {
        family_name = "bipartite";
        const BipartiteDims dims{2, 2 + static_cast<Eigen::Index>(mix_seed(case_seed, 11) % 2)};
        const std::size_t n1 = 2 + mix_seed(case_seed, 12) % 2;
        const std::size_t n2 = 2 + mix_seed(case_seed, 13) % 2;
        return CaseSetup{random_density(dims.total(), mix_seed(case_seed, 1)),
                         random_measurement_set(dims.total(), n1, mix_seed(case_seed, 2)),
                         random_measurement_set(dims.total(), n2, mix_seed(case_seed, 3)),
                         dims, {}, {}};
      }
      family_name = "projective_bipartite";
      const std::uint64_t pick = mix_seed(case_seed, 11) % 3;
      const BipartiteDims dims{pick == 2 ? 3 : 2, pick == 1 ? 3 : 2};
      const CMatrix basis = random_unitary(dims.dim_b, mix_seed(case_seed, 2));
      std::vector<CMatrix> first_ops;
      const CMatrix id_a = CMatrix::Identity(dims.dim_a, dims.dim_a);
      for (Eigen::Index m = 0; m < dims.dim_b; ++m) {
        first_ops.push_back(kron(id_a, CMatrix(basis.col(m) * basis.col(m).adjoint())));
      }
      const std::size_t n2 = 2 + mix_seed(case_seed, 13) % 3;
      const MeasurementSet second_on_a =
          random_measurement_set(dims.dim_a, n2, mix_seed(case_seed, 3));
      std::vector<CMatrix> second_ops;
      const CMatrix id_b = CMatrix::Identity(dims.dim_b, dims.dim_b);
      for (std::size_t y = 0; y < second_on_a.size(); ++y) {
        second_ops.push_back(kron(second_on_a.op(y), id_b));
      }
      return CaseSetup{random_density(dims.total(), mix_seed(case_seed, 1)),
                       MeasurementSet(std::move(first_ops)),
                       MeasurementSet(std::move(second_ops), second_on_a.labels()), dims,
                       basis, second_on_a};
    }();

    const SmoothingResult sm = smooth(setup.rho, setup.first, setup.second);
    const DensityMatrix rho_omega = apply_nonselective(setup.rho, setup.first);
    reports.push_back(equality_report(
        "average_smoothing.identity",
        max_entry_defect(sm.average_state.matrix(), rho_omega.matrix()), 0.0,
        "the probability-weighted smoothed states recover the nonselective state",
        1e-10));

    const CentralReport central = central_report(setup.rho, setup.first, setup.second);
    reports.insert(reports.end(), central.reports.begin(), central.reports.end());

    if (family_name == "single.completely_correlated") {
      reports.push_back(equality_report(
          "equality.completely_correlated", central.s_retro_avg, central.s_selective_avg,
          "a repeated projective basis pins the retrodicted average to the selective one",
          1e-10));
    } else if (family_name == "single.statistically_independent") {
      reports.push_back(equality_report(
          "equality.statistically_independent", central.s_nonselective, central.s_retro_avg,
          "mutually unbiased projective pairs leave the retrodicted average nonselective",
          1e-10));
    }

    if (family == 1) {
      for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
        const CentralReport sub = subsystem_central_report(sm, setup.dims, keep);
        reports.insert(reports.end(), sub.reports.begin(), sub.reports.end());
      }
      const std::vector<InequalityReport> mutual =
          mutual_report(setup.rho, setup.dims, setup.first, setup.second);
      reports.insert(reports.end(), mutual.begin(), mutual.end());
      const std::vector<InequalityReport> tripartite =
          tripartite_checks(sm.joint, sm.ensemble.states, setup.dims);
      reports.insert(reports.end(), tripartite.begin(), tripartite.end());
    } else if (family == 2) {
      const ProjectiveBipartiteReport proj = projective_bipartite_report(
          setup.rho, setup.dims, *setup.basis_b, *setup.second_on_a);
      reports.insert(reports.end(), proj.reports.begin(), proj.reports.end());
    }

    bool violated = false;
    for (const InequalityReport& report : reports) {
      InequalityReport tagged = report;
      tagged.context = "case=" + std::to_string(i) + " family=" + family_name + "; " +
                       report.context;
      outcome.json_lines.push_back(to_json_line(tagged));
      auto [it, inserted] = outcome.min_margins.try_emplace(report.name, report.margin);
      if (!inserted && report.margin < it->second) {
        it->second = report.margin;
      }
      if (!report.satisfied) {
        outcome.violations += 1;
        violated = true;
      }
    }
    if (violated) {
      outcome.violation_dumps.push_back(dump_case(i, case_seed, family_name, setup));
    }
  }
  return outcome;
}

}  // namespace retroq
