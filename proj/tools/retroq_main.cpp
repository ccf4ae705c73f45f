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

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

namespace {

using namespace retroq;

constexpr int kExitSuccess = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
  double a_min = 0.02;
  double a_max = 20.0;
  std::size_t grid = 60;
  double theta = std::numbers::pi / 4.0;
  double phi = std::numbers::pi;
  double r = 0.9;
  double theta_i = std::numbers::pi / 4.0;
  double phi_i = 0.0;
  std::size_t q_grid = 101;
  std::string out;
  std::string format = "csv";
  bool bits = false;
};

std::string fmt12(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<bool> entropy_column;  // converted by --bits
  std::vector<std::vector<double>> rows;
};

void write_table(const Table& table, const RunConfig& config, std::ostream& os) {
  const double unit = config.bits ? std::numbers::ln2 : 1.0;
  if (config.format == "csv") {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      os << (c ? "," : "") << table.columns[c];
    }
    os << "\n";
    for (const std::vector<double>& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        const double value = table.entropy_column[c] ? row[c] / unit : row[c];
        os << (c ? "," : "") << fmt12(value);
      }
      os << "\n";
    }
    return;
  }
  for (const std::vector<double>& row : table.rows) {
    os << "{";
    for (std::size_t c = 0; c < row.size(); ++c) {
      const double value = table.entropy_column[c] ? row[c] / unit : row[c];
      os << (c ? "," : "") << "\"" << table.columns[c] << "\":" << fmt12(value);
    }
    os << "}\n";
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return file;
}

std::vector<double> log_grid(double lo, double hi, std::size_t count) {
  std::vector<double> out;
  out.reserve(count);
  if (count == 1) {
    out.push_back(lo);
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) /
                                             static_cast<double>(count - 1)));
  }
  return out;
}

int run_verify_command(const RunConfig& config) {
  const VerifyOutcome outcome = run_verify({config.seed, config.cases});
  std::ofstream file = open_output(config.out.empty() ? "verify.jsonl" : config.out);
  for (const std::string& line : outcome.json_lines) {
    file << line << "\n";
  }
  for (const auto& [family, margin] : outcome.min_margins) {
    std::cout << "min margin " << family << " = " << fmt12(margin) << "\n";
  }
  std::cout << (outcome.violations == 0 ? "verify: all inequalities satisfied ("
                                        : "verify: VIOLATIONS FOUND (")
            << config.cases << " cases)\n";
  for (const std::string& dump : outcome.violation_dumps) {
    std::cerr << "violation replay:\n" << dump << "\n";
  }
  return outcome.violations == 0 ? kExitSuccess : kExitViolation;
}

int run_fig2(const RunConfig& config) {
  std::vector<QubitGaussianConfig> grid;
  for (double a : log_grid(config.a_min, config.a_max, config.grid)) {
    grid.push_back({{config.r, config.theta_i, config.phi_i}, a, config.theta, config.phi});
  }
  const std::vector<QubitEntropyRow> rows = qubit_entropy_curves(grid, QuadratureSpec{});
  Table table;
  table.columns = {"a", "s_nonselective", "s_retro_avg", "s_selective_avg", "s_initial"};
  table.entropy_column = {false, true, true, true, true};
  bool ordered = true;
  for (const QubitEntropyRow& row : rows) {
    ordered &= row.s_nonselective >= row.s_retro_avg - 1e-6 &&
               row.s_retro_avg >= row.s_selective_avg - 1e-6;
    table.rows.push_back(
        {row.a, row.s_nonselective, row.s_retro_avg, row.s_selective_avg, row.s_initial});
  }
  std::ofstream file = open_output(config.out.empty() ? "fig2.csv" : config.out);
  write_table(table, config, file);
  if (!ordered) {
    std::cerr << "fig2: entropy sandwich violated on an emitted row\n";
    return kExitViolation;
  }
  return kExitSuccess;
}

int run_fig3(const RunConfig& config) {
  Table table;
  table.columns = {"a",          "v_omega",     "v_plus",         "v_minus",
                   "s_rho_plus", "s_rho_minus", "s_nonselective", "s_selective_avg"};
  table.entropy_column = {false, false, false, false, true, true, true, true};
  const QuadratureSpec spec;
  for (double a : log_grid(config.a_min, config.a_max, config.grid)) {
    const QubitGaussianConfig point{{config.r, config.theta_i, config.phi_i}, a,
                                    config.theta, config.phi};
    const WeakValues w = weak_values(point, spec);
    const std::vector<QubitEntropyRow> row = qubit_entropy_curves({point}, spec);
    table.rows.push_back({a, w.v_omega, w.v_plus, w.v_minus, w.s_plus, w.s_minus,
                          row.front().s_nonselective, row.front().s_selective_avg});
  }
  std::ofstream file = open_output(config.out.empty() ? "fig3.csv" : config.out);
  write_table(table, config, file);
  return kExitSuccess;
}

int run_fig4(const RunConfig& config) {
  Table table;
  table.columns = {"q",       "s_a_nonsel", "s_a_retro",  "s_a_sel", "i_nonsel",
                   "i_retro", "i_sel",      "holevo_chi", "h_my"};
  table.entropy_column = {false, true, true, true, true, true, true, true, true};
  bool ordered = true;
  for (std::size_t i = 0; i < config.q_grid; ++i) {
    const double q = config.q_grid == 1
                         ? 0.0
                         : static_cast<double>(i) / static_cast<double>(config.q_grid - 1);
    const HybridReport rep = hybrid_report(
        {{q, 1.0 - q}, {BlochVector{0.0, 0.0, 0.0}, BlochVector{1.0, 0.0, 0.0}}});
    ordered &= rep.row.s_a_nonsel >= rep.row.s_a_retro - 1e-6 &&
               rep.row.s_a_retro >= rep.row.s_a_sel - 1e-6 &&
               rep.row.i_nonsel >= rep.row.i_retro - 1e-6;
    table.rows.push_back({rep.row.q, rep.row.s_a_nonsel, rep.row.s_a_retro,
                          rep.row.s_a_sel, rep.row.i_nonsel, rep.row.i_retro,
                          rep.row.i_sel, rep.row.holevo_chi, rep.row.h_my});
  }
  std::ofstream file = open_output(config.out.empty() ? "fig4.csv" : config.out);
  write_table(table, config, file);
  if (!ordered) {
    std::cerr << "fig4: entropy or mutual-information ordering violated on an emitted row\n";
    return kExitViolation;
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig config;
  CLI::App app{
      "retroq: retrodicted quantum measurement numerics.\n"
      "Verifies the entropic and mutual-information inequalities of the\n"
      "retrodicted-measurement pipeline on seeded random configurations and\n"
      "generates the Gaussian-qubit and hybrid-model figure data."};
  app.require_subcommand(1);

  CLI::App* verify = app.add_subcommand(
      "verify", "Fuzz the inequality suite; writes one JSON report line per "
                "inequality per case (always JSON, --format does not apply)");
  verify->add_option("--seed", config.seed, "Master seed");
  verify->add_option("--cases", config.cases, "Number of sampled configurations");

  CLI::App* fig2 = app.add_subcommand(
      "fig2", "Average entropies of the Gaussian qubit model over a strength grid");
  CLI::App* fig3 = app.add_subcommand(
      "fig3", "Weak values and post-selected entropies over a strength grid");
  for (CLI::App* fig : {fig2, fig3}) {
    fig->add_option("--a-min", config.a_min, "Smallest measurement strength");
    fig->add_option("--a-max", config.a_max, "Largest measurement strength");
    fig->add_option("--grid", config.grid, "Number of logarithmic grid points");
    fig->add_option("--theta", config.theta, "Second-measurement polar angle");
    fig->add_option("--phi", config.phi, "Second-measurement azimuth");
    fig->add_option("--r", config.r, "Initial Bloch radius");
    fig->add_option("--theta-i", config.theta_i, "Initial polar angle");
    fig->add_option("--phi-i", config.phi_i, "Initial azimuth");
  }

  CLI::App* fig4 = app.add_subcommand(
      "fig4", "Hybrid quantum-classical entropies and mutual informations over a "
              "weight grid");
  fig4->add_option("--q-grid", config.q_grid, "Number of uniform weight grid points");

  for (CLI::App* sub : {verify, fig2, fig3, fig4}) {
    sub->add_option("--out", config.out, "Output file path");
    sub->add_option("--format", config.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--bits", config.bits, "Display entropies in bits instead of nats");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      return run_verify_command(config);
    }
    if (fig2->parsed()) {
      return run_fig2(config);
    }
    if (fig3->parsed()) {
      return run_fig3(config);
    }
    return run_fig4(config);
  } catch (const QuadratureError& e) {
    std::cerr << "numeric non-convergence: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
