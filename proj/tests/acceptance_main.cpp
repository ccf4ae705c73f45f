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

// Acceptance suite: every release-gating property of the retrodicted
// measurement library, one pass/fail line per criterion.

#include "retroq/verify.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace retroq;

namespace {

constexpr double kPi = std::numbers::pi;

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = true;
  std::string detail;
  double seconds = 0.0;
};

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) {
      failure_ = what;
    }
    ok_ &= ok;
  }

  void note(const std::string& key, double value) {
    std::ostringstream os;
    os << key << "=" << value;
    notes_.push_back(os.str());
  }

  bool ok() const { return ok_; }

  std::string detail() const {
    std::string out = ok_ ? "" : ("FAILED: " + failure_);
    for (const std::string& n : notes_) {
      out += (out.empty() ? "" : "; ") + n;
    }
    return out;
  }

 private:
  bool ok_ = true;
  std::string failure_;
  std::vector<std::string> notes_;
};

struct SingleSuiteCase {
  CentralReport central;
  double iguales_defect = 0.0;
};

std::vector<SingleSuiteCase> single_suite(std::size_t cases, std::uint64_t seed) {
  std::vector<SingleSuiteCase> out;
  out.reserve(cases);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = mix_seed(seed, i);
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(mix_seed(s, 1) % 3);
    const DensityMatrix rho = random_density(dim, mix_seed(s, 2));
    const MeasurementSet first =
        random_measurement_set(dim, 2 + mix_seed(s, 3) % 3, mix_seed(s, 4));
    const MeasurementSet second =
        random_measurement_set(dim, 2 + mix_seed(s, 5) % 3, mix_seed(s, 6));
    const SmoothingResult sm = smooth(rho, first, second);
    const DensityMatrix omega = apply_nonselective(rho, first);
    SingleSuiteCase entry;
    entry.iguales_defect =
        (sm.average_state.matrix() - omega.matrix()).cwiseAbs().maxCoeff();
    entry.central = central_report(rho, first, second);
    out.push_back(std::move(entry));
  }
  return out;
}

struct BipartiteSuiteCase {
  std::vector<CentralReport> subsystem_reports;
  std::vector<InequalityReport> mutual;
};

std::vector<BipartiteSuiteCase> bipartite_suite(std::size_t cases, std::uint64_t seed) {
  std::vector<BipartiteSuiteCase> out;
  out.reserve(cases);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t s = mix_seed(seed ^ 0xB1BA51ULL, i);
    const BipartiteDims dims{2, 2 + static_cast<Eigen::Index>(mix_seed(s, 1) % 2)};
    const DensityMatrix rho = random_density(dims.total(), mix_seed(s, 2));
    const MeasurementSet first =
        random_measurement_set(dims.total(), 2 + mix_seed(s, 3) % 3, mix_seed(s, 4));
    const MeasurementSet second =
        random_measurement_set(dims.total(), 2 + mix_seed(s, 5) % 3, mix_seed(s, 6));
    const SmoothingResult sm = smooth(rho, first, second);
    BipartiteSuiteCase entry;
    entry.subsystem_reports.push_back(subsystem_central_report(sm, dims, Subsystem::A));
    entry.subsystem_reports.push_back(subsystem_central_report(sm, dims, Subsystem::B));
    entry.mutual = mutual_report(rho, dims, first, second);
    out.push_back(std::move(entry));
  }
  return out;
}

const std::vector<SingleSuiteCase>& shared_single_suite() {
  static const std::vector<SingleSuiteCase> suite = single_suite(1000, 0);
  return suite;
}

const std::vector<BipartiteSuiteCase>& shared_bipartite_suite() {
  static const std::vector<BipartiteSuiteCase> suite = bipartite_suite(500, 0);
  return suite;
}

CriterionResult criterion_1() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (const SingleSuiteCase& entry : shared_single_suite()) {
    worst = std::max(worst, entry.iguales_defect);
  }
  check.require(worst <= 1e-10, "average-smoothing defect above 1e-10");
  check.note("max_defect", worst);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
  check.require(seconds < 10.0, "runtime above 10 s");
  return {1, "average-smoothing identity on 1000 seeded configurations", check.ok(),
          check.detail(), seconds};
}

CriterionResult criterion_2() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst = 1.0;
  for (const SingleSuiteCase& entry : shared_single_suite()) {
    for (const InequalityReport& r : entry.central.reports) {
      if (r.name.rfind("central.", 0) == 0) {
        check.require(r.margin >= -1e-8, "sandwich margin below -1e-8: " + r.name);
        worst = std::min(worst, r.margin);
      }
    }
  }
  for (const BipartiteSuiteCase& entry : shared_bipartite_suite()) {
    for (const CentralReport& sub : entry.subsystem_reports) {
      for (const InequalityReport& r : sub.reports) {
        if (r.name.rfind("central.", 0) == 0) {
          check.require(r.margin >= -1e-8, "subsystem margin below -1e-8: " + r.name);
          worst = std::min(worst, r.margin);
        }
      }
    }
  }
  check.note("min_margin", worst);
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
  check.require(seconds < 30.0, "runtime above 30 s");
  return {2, "entropy sandwich on 1000 single + 500 bipartite configurations", check.ok(),
          check.detail(), seconds};
}

CriterionResult criterion_3() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst = 1.0;
  for (const SingleSuiteCase& entry : shared_single_suite()) {
    for (const InequalityReport& r : entry.central.reports) {
      if (r.name.rfind("gap.", 0) == 0) {
        check.require(r.margin >= -1e-8, "gap margin below -1e-8: " + r.name);
        worst = std::min(worst, r.margin);
      }
    }
  }
  for (const BipartiteSuiteCase& entry : shared_bipartite_suite()) {
    for (const CentralReport& sub : entry.subsystem_reports) {
      for (const InequalityReport& r : sub.reports) {
        if (r.name.rfind("gap.", 0) == 0) {
          check.require(r.margin >= -1e-8, "subsystem gap margin below -1e-8: " + r.name);
          worst = std::min(worst, r.margin);
        }
      }
    }
  }
  check.note("min_margin", worst);
  return {3, "Shannon gap bounds on the same suites", check.ok(), check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_4() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst_lower = 0.0;
  double worst_upper = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const DensityMatrix rho = random_density(2, mix_seed(4001, i));
    const MeasurementSet shared = projective_from_basis(random_unitary(2, mix_seed(4002, i)));
    const CentralReport correlated = central_report(rho, shared, shared);
    const double lower_margin =
        std::abs(correlated.s_retro_avg - correlated.s_selective_avg);
    worst_lower = std::max(worst_lower, lower_margin);
    check.require(lower_margin <= 1e-10,
                  "same-basis pair: lower bound not tight");

    const MeasurementSet z = qubit_projective(0.0, 0.0);
    const MeasurementSet x = qubit_projective(kPi / 2.0, 0.0);
    const CentralReport independent = central_report(rho, z, x);
    const double upper_margin =
        std::abs(independent.s_nonselective - independent.s_retro_avg);
    worst_upper = std::max(worst_upper, upper_margin);
    check.require(upper_margin <= 1e-10,
                  "mutually unbiased pair: upper bound not tight");
  }
  check.note("max_lower_gap", worst_lower);
  check.note("max_upper_gap", worst_upper);
  return {4, "equality conditions for the extremal measurement pairs", check.ok(),
          check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_5() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst = 1.0;
  for (const BipartiteSuiteCase& entry : shared_bipartite_suite()) {
    for (const InequalityReport& r : entry.mutual) {
      check.require(r.margin >= -1e-8, "mutual-information margin below -1e-8");
      worst = std::min(worst, r.margin);
    }
  }
  check.note("min_margin", worst);
  return {5, "mutual-information bounds on 500 bipartite configurations", check.ok(),
          check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_6() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst_equality = 0.0;
  double worst_ssa = 1.0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::uint64_t s = mix_seed(6000, i);
    const BipartiteDims dims{2, 2};
    const DensityMatrix rho = random_density(4, mix_seed(s, 1));
    const MeasurementSet first =
        random_measurement_set(4, 2 + mix_seed(s, 2) % 2, mix_seed(s, 3));
    const MeasurementSet second =
        random_measurement_set(4, 2 + mix_seed(s, 4) % 2, mix_seed(s, 5));
    const SmoothingResult sm = smooth(rho, first, second);
    for (const InequalityReport& r :
         tripartite_checks(sm.joint, sm.ensemble.states, dims)) {
      if (r.name == "tripartite.strong_subadditivity") {
        check.require(r.margin >= -1e-8, "strong subadditivity margin below -1e-8");
        worst_ssa = std::min(worst_ssa, r.margin);
      } else {
        check.require(std::abs(r.margin) <= 1e-9, "decomposition defect above 1e-9");
        worst_equality = std::max(worst_equality, std::abs(r.margin));
      }
    }
  }
  check.note("max_equality_defect", worst_equality);
  check.note("min_ssa_margin", worst_ssa);
  return {6, "tripartite decompositions and strong subadditivity on 200 constructions",
          check.ok(), check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_7() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst_equality = 0.0;
  double worst_margin = 1.0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::uint64_t s = mix_seed(7000, i);
    const std::uint64_t pick = mix_seed(s, 1) % 3;
    const BipartiteDims dims{pick == 2 ? 3 : 2, pick == 1 ? 3 : 2};
    const DensityMatrix rho = random_density(dims.total(), mix_seed(s, 2));
    const CMatrix basis = random_unitary(dims.dim_b, mix_seed(s, 3));
    const MeasurementSet second =
        random_measurement_set(dims.dim_a, 2 + mix_seed(s, 4) % 3, mix_seed(s, 5));
    const ProjectiveBipartiteReport rep =
        projective_bipartite_report(rho, dims, basis, second);
    for (const InequalityReport& r : rep.reports) {
      if (r.name.find("decomposition") != std::string::npos ||
          r.name.find("identity") != std::string::npos ||
          r.name.rfind("subsystem_b.", 0) == 0 ||
          r.name == "projective.selective_mutual_zero") {
        check.require(std::abs(r.margin) <= 1e-9, "identity defect above 1e-9: " + r.name);
        worst_equality = std::max(worst_equality, std::abs(r.margin));
      } else {
        check.require(r.margin >= -1e-8, "bound margin below -1e-8: " + r.name);
        worst_margin = std::min(worst_margin, r.margin);
      }
    }
    check.require(rep.holevo >= rep.h_mutual - 1e-8, "Holevo sandwich upper side");
    check.require(rep.h_mutual >= rep.retro_holevo_rhs - 1e-8,
                  "Holevo sandwich lower side");
  }
  check.note("max_identity_defect", worst_equality);
  check.note("min_bound_margin", worst_margin);
  return {7, "projective-bipartite identities and Holevo sandwich on 500 configurations",
          check.ok(), check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_8() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  const QuadratureSpec spec;
  double max_point_seconds = 0.0;

  auto timed_row = [&](const QubitGaussianConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const QubitEntropyRow row = qubit_entropy_curves({config}, spec).front();
    max_point_seconds = std::max(
        max_point_seconds,
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return row;
  };

  const QubitEntropyRow weak = timed_row({{0.9, kPi / 4.0, 0.0}, 100.0, kPi / 4.0, kPi});
  check.require(std::abs(weak.s_nonselective - weak.s_initial) <= 1e-3,
                "weak limit: nonselective entropy");
  check.require(std::abs(weak.s_retro_avg - weak.s_initial) <= 1e-3,
                "weak limit: retrodicted entropy");
  check.require(std::abs(weak.s_selective_avg - weak.s_initial) <= 1e-3,
                "weak limit: selective entropy");

  const QubitEntropyRow aligned = timed_row({{0.9, kPi / 4.0, 0.0}, 0.02, 0.0, kPi});
  check.require(std::abs(aligned.s_retro_avg - aligned.s_selective_avg) <= 1e-3,
                "strong aligned pair: retrodicted equals selective");

  const QubitEntropyRow unbiased =
      timed_row({{0.9, kPi / 4.0, 0.0}, 0.02, kPi / 2.0, kPi});
  check.require(std::abs(unbiased.s_retro_avg - unbiased.s_nonselective) <= 1e-3,
                "strong unbiased pair: retrodicted equals nonselective");

  check.note("max_point_seconds", max_point_seconds);
  check.require(max_point_seconds < 1.0, "grid point above 1 s");
  return {8, "Gaussian qubit strong/weak limits", check.ok(), check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_9() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  const QuadratureSpec spec;

  double worst_unconditional = 0.0;
  double worst_decomposition = 0.0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::uint64_t s = mix_seed(9000, i);
    const QubitGaussianConfig config{
        {0.1 + 0.85 * static_cast<double>(mix_seed(s, 1) % 1000) / 1000.0,
         kPi * static_cast<double>(mix_seed(s, 2) % 1000) / 1000.0,
         2.0 * kPi * static_cast<double>(mix_seed(s, 3) % 1000) / 1000.0},
        0.05 + 10.0 * static_cast<double>(mix_seed(s, 4) % 1000) / 1000.0,
        kPi * static_cast<double>(mix_seed(s, 5) % 1000) / 1000.0,
        2.0 * kPi * static_cast<double>(mix_seed(s, 6) % 1000) / 1000.0};
    const WeakValues w = weak_values(config, spec);
    const QubitSmoothed sm = qubit_smoothed(config, spec);
    const double expected = config.initial.r * std::cos(config.initial.theta);
    worst_unconditional = std::max(worst_unconditional, std::abs(w.v_omega - expected));
    check.require(std::abs(w.v_omega - expected) <= 1e-8,
                  "unconditional average deviates from the polarization");
    const double recombined = sm.p_plus * w.v_plus + sm.p_minus * w.v_minus;
    worst_decomposition = std::max(worst_decomposition, std::abs(recombined - w.v_omega));
    check.require(std::abs(recombined - w.v_omega) <= 1e-8,
                  "outcome decomposition of the average fails");
  }
  check.note("max_unconditional_error", worst_unconditional);
  check.note("max_decomposition_error", worst_decomposition);

  const auto anomalous_at = [&](double a) {
    const WeakValues w =
        weak_values({{0.9, kPi / 4.0, 0.0}, a, kPi / 4.0, kPi}, spec);
    return std::max(std::abs(w.v_plus), std::abs(w.v_minus)) - 1.0;
  };
  for (double a : {0.05, 0.1, 0.2, 0.3, 0.4}) {
    check.require(anomalous_at(a) <= 0.0, "anomalous conditional average below a = 0.4");
  }
  bool found = false;
  double bracket_lo = 0.4;
  double bracket_hi = 20.0;
  for (double a = 0.5; a <= 20.0; a *= 1.5) {
    if (anomalous_at(a) > 0.0) {
      bracket_hi = a;
      found = true;
      break;
    }
    bracket_lo = a;
  }
  check.require(found, "no anomalous conditional average found above a = 0.4");
  if (found) {
    for (int iter = 0; iter < 40; ++iter) {
      const double mid = 0.5 * (bracket_lo + bracket_hi);
      (anomalous_at(mid) > 0.0 ? bracket_hi : bracket_lo) = mid;
    }
    check.note("anomalous_crossing_a", 0.5 * (bracket_lo + bracket_hi));
  }
  return {9, "weak-value expectations, decomposition and anomalous window", check.ok(),
          check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

CriterionResult criterion_10() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();
  double worst_margin = 1.0;
  double worst_sel = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double q = i / 100.0;
    const HybridReport rep = hybrid_report(
        {{q, 1.0 - q}, {BlochVector{0.0, 0.0, 0.0}, BlochVector{1.0, 0.0, 0.0}}});
    check.require(rep.row.s_a_nonsel >= rep.row.s_a_retro - 1e-8,
                  "subsystem sandwich upper side");
    check.require(rep.row.s_a_retro >= rep.row.s_a_sel - 1e-8,
                  "subsystem sandwich lower side");
    check.require(std::abs(rep.row.i_sel) <= 1e-9, "selective mutual information nonzero");
    check.require(rep.row.i_nonsel >= rep.row.i_retro - 1e-8,
                  "mutual-information ordering");
    worst_margin = std::min({worst_margin, rep.row.s_a_nonsel - rep.row.s_a_retro,
                             rep.row.s_a_retro - rep.row.s_a_sel,
                             rep.row.i_nonsel - rep.row.i_retro});
    worst_sel = std::max(worst_sel, std::abs(rep.row.i_sel));
  }
  check.note("min_margin", worst_margin);
  check.note("max_i_sel", worst_sel);

  // Closed-form values at the balanced point, from eigenvalue arithmetic:
  // S_nonsel = H2(3/4), S_retro = 3/4 H2(5/6) + ln2 / 4, S_sel = ln2 / 2.
  const double ln2 = std::numbers::ln2;
  const double expected_nonsel = oracles::binary_entropy(0.75);
  const double expected_retro = 0.75 * oracles::binary_entropy(5.0 / 6.0) + 0.25 * ln2;
  const double expected_sel = 0.5 * ln2;
  check.require(std::abs(expected_nonsel - 0.562335144619) <= 1e-10, "frozen S_nonsel");
  check.require(std::abs(expected_retro - 0.511207701790) <= 1e-10, "frozen S_retro");
  check.require(std::abs(expected_sel - 0.346573590280) <= 1e-10, "frozen S_sel");
  const HybridReport balanced = hybrid_report(
      {{0.5, 0.5}, {BlochVector{0.0, 0.0, 0.0}, BlochVector{1.0, 0.0, 0.0}}});
  check.require(std::abs(balanced.row.s_a_nonsel - expected_nonsel) <= 1e-6,
                "balanced-point nonselective entropy");
  check.require(std::abs(balanced.row.s_a_retro - expected_retro) <= 1e-6,
                "balanced-point retrodicted entropy");
  check.require(std::abs(balanced.row.s_a_sel - expected_sel) <= 1e-6,
                "balanced-point selective entropy");

  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start).count();
  check.require(seconds < 5.0, "runtime above 5 s");
  return {10, "hybrid model sweep and balanced-point closed forms", check.ok(),
          check.detail(), seconds};
}

CriterionResult criterion_11() {
  Checker check;
  const auto start = std::chrono::steady_clock::now();

  double worst_closed = 0.0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::uint64_t s = mix_seed(11000, i);
    const QubitGaussianConfig config{
        {0.05 + 0.9 * static_cast<double>(mix_seed(s, 1) % 1000) / 1000.0,
         kPi * static_cast<double>(mix_seed(s, 2) % 1000) / 1000.0,
         2.0 * kPi * static_cast<double>(mix_seed(s, 3) % 1000) / 1000.0},
        0.3 + 5.0 * static_cast<double>(mix_seed(s, 4) % 1000) / 1000.0,
        kPi * static_cast<double>(mix_seed(s, 5) % 1000) / 1000.0,
        2.0 * kPi * static_cast<double>(mix_seed(s, 6) % 1000) / 1000.0};
    const double v = -3.0 + 6.0 * static_cast<double>(mix_seed(s, 7) % 1000) / 1000.0;

    const DensityMatrix rho = bloch_to_density(config.initial);
    const CMatrix omega = oracles::omega_v_matrix(config.a, v);
    const CMatrix brute_post = oracles::naive_mul(
        oracles::naive_mul(omega, rho.matrix()), oracles::naive_adjoint(omega));
    const CMatrix closed_post =
        gaussian_unnormalized_post(rho, GaussianMeasurement(config.a), v);
    worst_closed =
        std::max(worst_closed, (closed_post - brute_post).cwiseAbs().maxCoeff());
    check.require((closed_post - brute_post).cwiseAbs().maxCoeff() <= 1e-12,
                  "post-measurement closed form deviates from the matrix oracle");

    const auto [p_plus, p_minus] = qubit_joint_density(config, v);
    const double brute_plus = oracles::brute_joint_probability(
        rho.matrix(), omega, oracles::direction_projector(config.theta, config.phi, true));
    const double brute_minus = oracles::brute_joint_probability(
        rho.matrix(), omega, oracles::direction_projector(config.theta, config.phi, false));
    worst_closed = std::max({worst_closed, std::abs(p_plus - brute_plus),
                             std::abs(p_minus - brute_minus)});
    check.require(std::abs(p_plus - brute_plus) <= 1e-12,
                  "joint density closed form deviates from the matrix oracle");
    check.require(std::abs(p_minus - brute_minus) <= 1e-12,
                  "joint density closed form deviates from the matrix oracle");
  }
  check.note("max_closed_form_defect", worst_closed);

  double worst_quad = 0.0;
  const QuadratureSpec spec;
  const std::vector<QubitGaussianConfig> figure_points = {
      {{0.9, kPi / 4.0, 0.0}, 0.5, kPi / 4.0, kPi},
      {{0.9, kPi / 4.0, 0.0}, 1.0, kPi / 4.0, kPi},
      {{0.9, kPi / 4.0, 0.0}, 2.0, kPi / 4.0, kPi},
      {{0.9, kPi / 2.0, 0.0}, 0.5, kPi / 6.0, 0.0},
      {{0.9, kPi / 2.0, 0.0}, 1.0, kPi / 6.0, 0.0},
      {{0.9, kPi / 2.0, 0.0}, 2.0, kPi / 6.0, 0.0}};
  for (const QubitGaussianConfig& config : figure_points) {
    const QubitSmoothed adaptive = qubit_smoothed(config, spec);
    const oracles::RiemannSmoothed reference = oracles::riemann_smoothed(config, 100000);
    const double defect = std::max(
        (adaptive.rho_plus.matrix() - reference.rho_plus).cwiseAbs().maxCoeff(),
        (adaptive.rho_minus.matrix() - reference.rho_minus).cwiseAbs().maxCoeff());
    worst_quad = std::max(worst_quad, defect);
    check.require(defect <= 1e-6, "smoothed state deviates from the fixed-grid oracle");
  }
  check.note("max_quadrature_defect", worst_quad);
  return {11, "closed forms and quadrature against independent oracles", check.ok(),
          check.detail(),
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()};
}

}  // namespace

int main() {
  std::vector<CriterionResult> results;
  results.push_back(criterion_1());
  results.push_back(criterion_2());
  results.push_back(criterion_3());
  results.push_back(criterion_4());
  results.push_back(criterion_5());
  results.push_back(criterion_6());
  results.push_back(criterion_7());
  results.push_back(criterion_8());
  results.push_back(criterion_9());
  results.push_back(criterion_10());
  results.push_back(criterion_11());

  int failures = 0;
  for (const CriterionResult& r : results) {
    failures += r.pass ? 0 : 1;
    std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", r.pass ? "PASS" : "FAIL",
                r.number, r.title.c_str(), r.seconds,
                r.detail.empty() ? "" : " -- ", r.detail.c_str());
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(results.size()) - failures, results.size());
  return failures == 0 ? 0 : 1;
}
