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

#include "retroq/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

namespace retroq {

namespace {

void check_spec(const QuadratureSpec& spec) {
  if (spec.relative_tolerance <= 0.0 || spec.absolute_tolerance <= 0.0) {
    throw DomainError("QuadratureSpec: tolerances must be positive");
  }
  if (spec.truncation_width < 6.0) {
    throw DomainError("QuadratureSpec: truncation width must be >= 6");
  }
  if (spec.max_subdivisions < 1) {
    throw DomainError("QuadratureSpec: max_subdivisions must be positive");
  }
}

struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  Eigen::VectorXd f_lo, f_mid, f_hi;
  Eigen::VectorXd whole;  // Simpson estimate over [lo, hi]
  double eps = 0.0;
  int depth = 0;
};

Eigen::VectorXd simpson(double lo, double hi, const Eigen::VectorXd& f_lo,
                        const Eigen::VectorXd& f_mid, const Eigen::VectorXd& f_hi) {
  return (hi - lo) / 6.0 * (f_lo + 4.0 * f_mid + f_hi);
}

}  // namespace

VectorQuadratureResult quad_integrate_vector(
    const std::function<Eigen::VectorXd(double)>& f, Eigen::Index size,
    Eigen::Index control, double lo, double hi, const QuadratureSpec& spec) {
  check_spec(spec);
  if (size < 1 || control < 0 || control >= size) {
    throw DimensionError("quad_integrate_vector: control component out of range");
  }
  if (!(lo < hi)) {
    throw DomainError("quad_integrate_vector: empty domain");
  }

  Eigen::VectorXd acc = Eigen::VectorXd::Zero(size);
  double err_acc = 0.0;
  bool converged = true;

  Panel root;
  root.lo = lo;
  root.hi = hi;
  root.f_lo = f(lo);
  root.f_mid = f(0.5 * (lo + hi));
  root.f_hi = f(hi);
  root.whole = simpson(lo, hi, root.f_lo, root.f_mid, root.f_hi);
  root.eps = std::max(spec.absolute_tolerance,
                      spec.relative_tolerance * std::abs(root.whole(control)));
  root.depth = 0;

  std::vector<Panel> stack;
  stack.push_back(std::move(root));
  while (!stack.empty()) {
    Panel p = std::move(stack.back());
    stack.pop_back();
    const double mid = 0.5 * (p.lo + p.hi);
    const double lq = 0.5 * (p.lo + mid);
    const double rq = 0.5 * (mid + p.hi);
    Eigen::VectorXd f_lq = f(lq);
    Eigen::VectorXd f_rq = f(rq);
    Eigen::VectorXd left = simpson(p.lo, mid, p.f_lo, f_lq, p.f_mid);
    Eigen::VectorXd right = simpson(mid, p.hi, p.f_mid, f_rq, p.f_hi);
    const Eigen::VectorXd refined = left + right;
    const double delta = refined(control) - p.whole(control);
    if (std::abs(delta) <= 15.0 * p.eps || p.depth >= spec.max_subdivisions) {
      acc += refined + (refined - p.whole) / 15.0;
      err_acc += std::abs(delta) / 15.0;
      if (std::abs(delta) > 15.0 * p.eps) {
        converged = false;
      }
      continue;
    }
    Panel l{p.lo, mid, std::move(p.f_lo), std::move(f_lq), p.f_mid,
            std::move(left), 0.5 * p.eps, p.depth + 1};
    Panel r{mid, p.hi, std::move(p.f_mid), std::move(f_rq), std::move(p.f_hi),
            std::move(right), 0.5 * p.eps, p.depth + 1};
    stack.push_back(std::move(l));
    stack.push_back(std::move(r));
  }
  if (!converged) {
    throw QuadratureError("quad_integrate_vector: refinement limit reached", acc, err_acc);
  }
  return {std::move(acc), err_acc};
}

QuadratureResult quad_integrate(const std::function<double(double)>& f, double lo,
                                double hi, const QuadratureSpec& spec) {
  auto wrapped = [&f](double x) {
    Eigen::VectorXd v(1);
    v(0) = f(x);
    return v;
  };
  try {
    VectorQuadratureResult r = quad_integrate_vector(wrapped, 1, 0, lo, hi, spec);
    return {r.value(0), r.error_estimate};
  } catch (const QuadratureError& e) {
    throw QuadratureError("quad_integrate: refinement limit reached", e.best_estimate,
                          e.error_estimate);
  }
}

namespace {

// Precomputed closed-form pieces of the Gaussian qubit model.
struct QubitModel {
  double a = 0.0;
  double a2 = 0.0;
  double norm = 0.0;  // (2 pi a^2)^{-1/2}
  double rho_pp = 0.0;
  double rho_mm = 0.0;
  Complex rho_pm;
  double cos2_half = 0.0;
  double sin2_half = 0.0;
  double cross = 0.0;  // sin(theta) Re[e^{i phi} <+|rho|->]

  explicit QubitModel(const QubitGaussianConfig& config) {
    GaussianMeasurement g(config.a);  // validates the strength
    a = g.a;
    a2 = a * a;
    norm = 1.0 / std::sqrt(2.0 * std::numbers::pi * a2);
    const DensityMatrix rho = bloch_to_density(config.initial);
    rho_pp = rho.matrix()(0, 0).real();
    rho_mm = rho.matrix()(1, 1).real();
    rho_pm = rho.matrix()(0, 1);
    const double c = std::cos(0.5 * config.theta);
    const double s = std::sin(0.5 * config.theta);
    cos2_half = c * c;
    sin2_half = s * s;
    cross = std::sin(config.theta) * (std::polar(1.0, config.phi) * rho_pm).real();
  }

  double gauss(double x) const { return std::exp(-x * x / (2.0 * a2)); }
  double gauss_off(double v) const { return std::exp(-(v * v + 1.0) / (2.0 * a2)); }

  // Entries of the unnormalized post-measurement matrix rho~_V.
  void post_entries(double v, double& m00, double& m11, Complex& m01) const {
    m00 = norm * gauss(v - 1.0) * rho_pp;
    m11 = norm * gauss(v + 1.0) * rho_mm;
    m01 = norm * gauss_off(v) * rho_pm;
  }

  double outcome_density(double v) const {
    return norm * (gauss(v - 1.0) * rho_pp + gauss(v + 1.0) * rho_mm);
  }

  std::pair<double, double> joint_density(double v) const {
    const double g_minus = norm * gauss(v - 1.0) * rho_pp;
    const double g_plus = norm * gauss(v + 1.0) * rho_mm;
    const double x = norm * gauss_off(v) * cross;
    double p_plus = cos2_half * g_minus + sin2_half * g_plus + x;
    double p_minus = sin2_half * g_minus + cos2_half * g_plus - x;
    return {std::max(p_plus, 0.0), std::max(p_minus, 0.0)};
  }

  // Entropy of the normalized rho_V, from its Bloch length.
  double selective_entropy(double v) const {
    double m00 = 0.0;
    double m11 = 0.0;
    Complex m01;
    post_entries(v, m00, m11, m01);
    const double trace = m00 + m11;
    if (trace <= 0.0) {
      return 0.0;
    }
    const double diff = (m00 - m11) / trace;
    const double off = 2.0 * std::abs(m01) / trace;
    const double length = std::min(std::sqrt(diff * diff + off * off), 1.0);
    const double upper = 0.5 * (1.0 + length);
    const double lower = 0.5 * (1.0 - length);
    double s = 0.0;
    if (upper > 0.0) {
      s -= upper * std::log(upper);
    }
    if (lower > 0.0) {
      s -= lower * std::log(lower);
    }
    return std::max(s, 0.0);
  }
};

// Integration segments covering [-1 - w a, 1 + w a], split at the Gaussian
// peaks so that narrow bumps are not missed by the first Simpson samples.
std::vector<double> integration_segments(double a, double width) {
  const double lo = -1.0 - width * a;
  const double hi = 1.0 + width * a;
  std::vector<double> points{lo, -1.0 - 4.0 * a, -1.0, -1.0 + 4.0 * a, 0.0,
                             1.0 - 4.0 * a, 1.0, 1.0 + 4.0 * a, hi};
  std::sort(points.begin(), points.end());
  std::vector<double> out;
  for (double x : points) {
    const double clamped = std::clamp(x, lo, hi);
    if (out.empty() || clamped - out.back() > 1e-12 * (hi - lo)) {
      out.push_back(clamped);
    }
  }
  return out;
}

VectorQuadratureResult integrate_segmented(const std::function<Eigen::VectorXd(double)>& f,
                                           Eigen::Index size, Eigen::Index control,
                                           const std::vector<double>& segments,
                                           const QuadratureSpec& spec) {
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(size);
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    VectorQuadratureResult r =
        quad_integrate_vector(f, size, control, segments[i], segments[i + 1], spec);
    acc += r.value;
    err += r.error_estimate;
  }
  return {std::move(acc), err};
}

}  // namespace

std::pair<double, double> qubit_joint_density(const QubitGaussianConfig& config, double v) {
  return QubitModel(config).joint_density(v);
}

double qubit_outcome_density(const QubitGaussianConfig& config, double v) {
  return QubitModel(config).outcome_density(v);
}

QubitSmoothed qubit_smoothed(const QubitGaussianConfig& config, const QuadratureSpec& spec) {
  const QubitModel model(config);
  const std::vector<double> segments = integration_segments(model.a, spec.truncation_width);

  // Components: joint density, then the entries of p(+-, V) rho_V.
  auto integrand = [&model](bool plus) {
    return [&model, plus](double v) {
      Eigen::VectorXd out = Eigen::VectorXd::Zero(5);
      double m00 = 0.0;
      double m11 = 0.0;
      Complex m01;
      model.post_entries(v, m00, m11, m01);
      const double trace = m00 + m11;
      if (trace <= 0.0) {
        return out;
      }
      const auto [p_plus, p_minus] = model.joint_density(v);
      const double p = plus ? p_plus : p_minus;
      const double w = p / trace;
      out(0) = p;
      out(1) = w * m00;
      out(2) = w * m01.real();
      out(3) = w * m01.imag();
      out(4) = w * m11;
      return out;
    };
  };

  QubitSmoothed result{maximally_mixed(2), maximally_mixed(2), 0.0, 0.0, true, true};
  for (bool plus : {true, false}) {
    const VectorQuadratureResult r =
        integrate_segmented(integrand(plus), 5, 0, segments, spec);
    const double p = r.value(0);
    if (plus) {
      result.p_plus = p;
    } else {
      result.p_minus = p;
    }
    if (p < kZeroProbability) {
      (plus ? result.plus_reachable : result.minus_reachable) = false;
      continue;
    }
    CMatrix m(2, 2);
    const double trace = r.value(1) + r.value(4);
    m(0, 0) = r.value(1) / trace;
    m(1, 1) = r.value(4) / trace;
    m(0, 1) = Complex(r.value(2), r.value(3)) / trace;
    m(1, 0) = std::conj(m(0, 1));
    if (plus) {
      result.rho_plus = DensityMatrix(std::move(m));
    } else {
      result.rho_minus = DensityMatrix(std::move(m));
    }
  }
  return result;
}

std::vector<QubitEntropyRow> qubit_entropy_curves(
    const std::vector<QubitGaussianConfig>& grid, const QuadratureSpec& spec) {
  std::vector<QubitEntropyRow> rows;
  rows.reserve(grid.size());
  for (const QubitGaussianConfig& config : grid) {
    const QubitModel model(config);
    const DensityMatrix rho_initial = bloch_to_density(config.initial);
    QubitEntropyRow row;
    row.a = config.a;
    row.s_initial = von_neumann_entropy(rho_initial);
    row.s_nonselective =
        von_neumann_entropy(gaussian_nonselective(rho_initial, GaussianMeasurement(config.a)));

    const QubitSmoothed sm = qubit_smoothed(config, spec);
    row.s_retro_avg = 0.0;
    if (sm.plus_reachable) {
      row.s_retro_avg += sm.p_plus * von_neumann_entropy(sm.rho_plus);
    }
    if (sm.minus_reachable) {
      row.s_retro_avg += sm.p_minus * von_neumann_entropy(sm.rho_minus);
    }
    const double total = sm.p_plus + sm.p_minus;
    row.h_y = shannon_entropy(
        std::vector<double>{sm.p_plus / total, sm.p_minus / total});

    auto integrand = [&model](double v) {
      Eigen::VectorXd out = Eigen::VectorXd::Zero(3);
      const double p = model.outcome_density(v);
      if (p <= 0.0) {
        return out;
      }
      out(0) = p;
      out(1) = p * model.selective_entropy(v);
      out(2) = -p * std::log(p);
      return out;
    };
    const VectorQuadratureResult r = integrate_segmented(
        integrand, 3, 0, integration_segments(model.a, spec.truncation_width), spec);
    row.s_selective_avg = r.value(1);
    row.h_v = r.value(2);
    rows.push_back(row);
  }
  return rows;
}

WeakValues weak_values(const QubitGaussianConfig& config, const QuadratureSpec& spec) {
  const QubitModel model(config);
  auto integrand = [&model](double v) {
    Eigen::VectorXd out(6);
    const auto [p_plus, p_minus] = model.joint_density(v);
    const double p = p_plus + p_minus;
    out(0) = p;
    out(1) = v * p;
    out(2) = p_plus;
    out(3) = v * p_plus;
    out(4) = p_minus;
    out(5) = v * p_minus;
    return out;
  };
  const VectorQuadratureResult r = integrate_segmented(
      integrand, 6, 0, integration_segments(model.a, spec.truncation_width), spec);

  WeakValues w;
  w.v_omega = r.value(1);
  w.plus_reachable = r.value(2) >= kZeroProbability;
  w.minus_reachable = r.value(4) >= kZeroProbability;
  w.v_plus = w.plus_reachable ? r.value(3) / r.value(2) : 0.0;
  w.v_minus = w.minus_reachable ? r.value(5) / r.value(4) : 0.0;

  const QubitSmoothed sm = qubit_smoothed(config, spec);
  w.s_plus = sm.plus_reachable ? von_neumann_entropy(sm.rho_plus) : 0.0;
  w.s_minus = sm.minus_reachable ? von_neumann_entropy(sm.rho_minus) : 0.0;
  return w;
}

HybridSystem hybrid_build(const HybridConfig& config) {
  if (config.weights.size() != config.bloch_states.size() || config.weights.size() < 2) {
    throw DomainError("hybrid_build: need matching weights and states, at least two");
  }
  double total = 0.0;
  for (double q : config.weights) {
    if (q < 0.0) {
      throw DomainError("hybrid_build: negative weight");
    }
    total += q;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("hybrid_build: weights sum to " + std::to_string(total));
  }

  const Eigen::Index count = static_cast<Eigen::Index>(config.weights.size());
  const BipartiteDims dims{2, count};
  const CMatrix id_a = CMatrix::Identity(2, 2);

  CMatrix rho_ab = CMatrix::Zero(dims.total(), dims.total());
  std::vector<CMatrix> first_ops;
  std::vector<std::string> first_labels;
  first_ops.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index mu = 0; mu < count; ++mu) {
    CMatrix projector = CMatrix::Zero(count, count);
    projector(mu, mu) = 1.0;
    const DensityMatrix rho_mu =
        bloch_to_density(config.bloch_states[static_cast<std::size_t>(mu)]);
    rho_ab += config.weights[static_cast<std::size_t>(mu)] * kron(rho_mu.matrix(), projector);
    first_ops.push_back(kron(id_a, projector));
    first_labels.push_back(std::to_string(mu + 1));
  }

  // Photon-detection pair on the qubit: M_+ flags the |+> -> |-> transition.
  CMatrix m_plus = CMatrix::Zero(2, 2);
  m_plus(1, 0) = 1.0;
  CMatrix m_minus = CMatrix::Zero(2, 2);
  m_minus(1, 1) = 1.0;
  MeasurementSet second_on_a(std::vector<CMatrix>{m_plus, m_minus}, {"+", "-"});
  const CMatrix id_b = CMatrix::Identity(count, count);
  MeasurementSet second(
      std::vector<CMatrix>{kron(m_plus, id_b), kron(m_minus, id_b)}, {"+", "-"});

  return HybridSystem{DensityMatrix(symmetrized(rho_ab)), dims,
                      MeasurementSet(std::move(first_ops), std::move(first_labels)),
                      std::move(second), std::move(second_on_a)};
}

HybridReport hybrid_report(const HybridConfig& config) {
  const HybridSystem sys = hybrid_build(config);
  const CMatrix basis_b = CMatrix::Identity(sys.dims.dim_b, sys.dims.dim_b);
  ProjectiveBipartiteReport rep =
      projective_bipartite_report(sys.rho_ab, sys.dims, basis_b, sys.second_on_a);

  HybridRow row;
  row.q = config.weights.front();
  row.s_a_nonsel = rep.s_a_nonselective;
  row.s_a_retro = rep.s_a_retro_avg;
  row.s_a_sel = rep.s_a_selective_avg;
  row.i_nonsel = rep.i_nonselective;
  row.i_retro = rep.i_retro_avg;
  row.i_sel = rep.i_selective_avg;
  row.holevo_chi = rep.holevo;
  row.h_my = rep.h_mutual;
  return HybridReport{std::move(rep), row};
}

}  // namespace retroq
