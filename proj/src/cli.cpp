// Copyright 2026 The spinsim authors
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

#include "spinsim/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spinsim/config.hpp"
#include "spinsim/product_operator.hpp"
#include "spinsim/sequence.hpp"
#include "spinsim/spectrometer.hpp"

namespace spinsim {

namespace {

constexpr const char* kVersion = "0.1.0";

// Report values are rounded to 12 significant digits; the CSV writers keep
// full precision.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// Eigendecomposition noise on structurally exact phases is suppressed for
// display.
double snap(double v) { return std::abs(v) <= 1e-12 ? 0.0 : v; }

std::string bits_string(int state, int n) {
  std::string s;
  for (int i = n - 1; i >= 0; --i) s += ((state >> i) & 1) ? '1' : '0';
  return s;
}

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> toks;
  std::istringstream is(s);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

Operator read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  int dim = 0;
  if (!(in >> dim) || dim < 1 || dim > 4096) {
    throw std::invalid_argument("matrix file: bad dimension");
  }
  Operator m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      double re = 0, im = 0;
      if (!(in >> re >> im)) {
        throw std::invalid_argument("matrix file: not enough entries");
      }
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

void write_matrix_file(const std::string& path, const Operator& m) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write matrix file: " + path);
  out << m.rows() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << fmt(m(r, c).real()) << ' ' << fmt(m(r, c).imag());
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

Decomposition read_terms_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open terms file: " + path);
  Decomposition d;
  d.identity_part = 1.0;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw std::invalid_argument("terms file line " + std::to_string(line_no) +
                                  ": expected '<label> <coefficient>'");
    }
    const double coeff = std::stod(toks[1]);
    if (toks[0] == "identity") {
      d.identity_part = coeff;
    } else {
      ProductTerm t = parse_term_label(toks[0], n);
      t.coefficient = coeff;
      d.terms.push_back(std::move(t));
    }
  }
  return d;
}

Operator build_state(const Config& cfg, const std::string& source,
                     double epsilon) {
  const int n = cfg.system.n;
  if (source == "eq") return equilibrium_state(n, epsilon);
  if (source == "mixed") return equilibrium_state(n, 0.0);
  if (source == "in" || source == "out") {
    if (n != 3) {
      throw std::invalid_argument("state '" + source +
                                  "' requires a 3-spin system");
    }
    Operator rho = prepare_input(epsilon);
    if (source == "out") rho = apply_unitary(rho, fredkin_sequence());
    return rho;
  }
  return compose(read_terms_file(source, n), n);
}

void print_header(std::ostream& out, const char* command) {
  out << "spinsim_version: " << kVersion << '\n';
  out << "command: " << command << '\n';
}

// --------------------------------------------------------------------------
// verify-gate
// --------------------------------------------------------------------------

struct VerifyGateArgs {
  std::string config_path;
  std::string sequence_path;
  std::string target = "fredkin";
  std::string target_matrix_path;
  std::string model = "ideal";
  double tolerance = -1.0;
};

int cmd_verify_gate(const VerifyGateArgs& a, std::ostream& out) {
  const Config cfg = parse_config_file(a.config_path);
  const double tol = a.tolerance > 0 ? a.tolerance : cfg.defaults.tolerance;
  const Sequence seq = parse_sequence_file(a.sequence_path, cfg.system.n);
  const Model model = a.model == "soft" ? Model::Soft : Model::Ideal;
  const Operator rho0 = equilibrium_state(cfg.system.n, 0.0);
  const Operator total =
      run_sequence(cfg.system, seq, rho0, model).total_unitary;

  Operator target;
  if (!a.target_matrix_path.empty()) {
    target = read_matrix_file(a.target_matrix_path);
  } else if (a.target == "fredkin") {
    if (cfg.system.n != 3) {
      throw std::invalid_argument("fredkin target requires a 3-spin system");
    }
    target = ideal_gate({FredkinSpec{1, 2, 3}, 3});
  } else {
    throw std::invalid_argument("unknown target '" + a.target + "'");
  }
  if (target.rows() != total.rows()) {
    throw std::invalid_argument("target dimension does not match the system");
  }

  const EquivalenceReport rep = equivalence(target, total, tol);
  print_header(out, "verify-gate");
  out << "target: " << (a.target_matrix_path.empty() ? a.target : a.target_matrix_path) << '\n';
  out << "model: " << a.model << '\n';
  out << "tolerance: " << fmt(tol) << '\n';
  out << "exact: " << (rep.exact ? "true" : "false") << '\n';
  out << "global_phase: " << (rep.global_phase ? "true" : "false") << '\n';
  out << "monomial_phase: " << (rep.monomial_phase ? "true" : "false") << '\n';
  out << "fidelity: " << fmt(rep.fidelity) << '\n';
  for (const PhaseTableEntry& e : rep.phase_table) {
    out << "phase_" << bits_string(e.state, cfg.system.n) << ": "
        << fmt(snap(e.phase.real())) << ' ' << fmt(snap(e.phase.imag()))
        << '\n';
  }
  out << "verdict: " << (rep.monomial_phase ? "equivalent" : "not-equivalent")
      << '\n';
  return rep.monomial_phase ? kExitOk : kExitVerificationFailed;
}

// --------------------------------------------------------------------------
// simulate
// --------------------------------------------------------------------------

struct SimulateArgs {
  std::string config_path;
  std::string sequence_path;
  std::string initial = "eq";
  std::string model = "ideal";
  double epsilon = -1.0;
  std::string write_matrix_path;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const Config cfg = parse_config_file(a.config_path);
  const double eps = a.epsilon >= 0 ? a.epsilon : cfg.defaults.epsilon;
  const Sequence seq = parse_sequence_file(a.sequence_path, cfg.system.n);
  const Model model = a.model == "soft" ? Model::Soft : Model::Ideal;
  const Operator rho0 = build_state(cfg, a.initial, eps);
  const SequenceResult res = run_sequence(cfg.system, seq, rho0, model);
  const Decomposition d = decompose(res.rho);

  print_header(out, "simulate");
  out << "initial: " << a.initial << '\n';
  out << "model: " << a.model << '\n';
  out << "epsilon: " << fmt(eps) << '\n';
  out << "identity_part: " << fmt(d.identity_part) << '\n';
  out << "terms: " << d.terms.size() << '\n';
  for (const ProductTerm& t : d.terms) {
    out << "term " << t.label() << ": " << fmt(t.coefficient) << '\n';
  }
  if (!a.write_matrix_path.empty()) {
    write_matrix_file(a.write_matrix_path, res.rho);
    out << "matrix_file: " << a.write_matrix_path << '\n';
  }
  return kExitOk;
}

// --------------------------------------------------------------------------
// spectrum
// --------------------------------------------------------------------------

struct SpectrumArgs {
  std::string config_path;
  std::string state = "out";
  int spin = 1;
  double phase_correction_deg = 0.0;
  double readout_deg = 0.0;
  double epsilon = -1.0;
  std::string out_dir;
  double min_peak_fraction = 0.2;
};

int cmd_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const Config cfg = parse_config_file(a.config_path);
  const int n = cfg.system.n;
  if (a.spin < 1 || a.spin > n) {
    throw std::invalid_argument("--spin out of range");
  }
  const double eps = a.epsilon >= 0 ? a.epsilon : cfg.defaults.epsilon;
  Operator rho = build_state(cfg, a.state, eps);
  if (a.readout_deg != 0.0) {
    std::vector<int> all;
    for (int k = 1; k <= n; ++k) all.push_back(k);
    rho = readout_pulse(rho, all, a.readout_deg * std::numbers::pi / 180.0,
                        Axis::Y, n);
  }

  FidParams params = default_acquisition(cfg.system, a.spin);
  params.points = cfg.defaults.points;
  params.line_broadening_hz = cfg.defaults.line_broadening_hz;
  const Hamiltonian h = hamiltonian(cfg.system, CouplingMode::Weak);
  const std::vector<Complex> series = fid(rho, h, cfg.system, params);
  const std::vector<SpectrumPoint> spec = spectrum(series, params);
  const std::vector<SpectrumLine> found =
      peaks(spec, a.min_peak_fraction, a.phase_correction_deg,
            transitions(cfg.system), n);

  const std::string spec_path =
      a.out_dir + "/spectrum_spin" + std::to_string(a.spin) + ".csv";
  const std::string peaks_path =
      a.out_dir + "/peaks_spin" + std::to_string(a.spin) + ".csv";
  {
    std::ofstream f(spec_path, std::ios::binary);
    if (!f) throw IoError("cannot write " + spec_path);
    write_spectrum_csv(f, spec);
    if (!f) throw IoError("write failed: " + spec_path);
  }
  {
    std::ofstream f(peaks_path, std::ios::binary);
    if (!f) throw IoError("cannot write " + peaks_path);
    write_peaks_csv(f, found, n);
    if (!f) throw IoError("write failed: " + peaks_path);
  }

  print_header(out, "spectrum");
  out << "state: " << a.state << '\n';
  out << "spin: " << a.spin << '\n';
  out << "epsilon: " << fmt(eps) << '\n';
  out << "frame_offset_hz: " << fmt(params.frame_offset_hz) << '\n';
  out << "points: " << params.points << '\n';
  out << "dwell_s: " << fmt(params.dwell_s) << '\n';
  out << "phase_correction_deg: " << fmt(a.phase_correction_deg) << '\n';
  out << "readout_deg: " << fmt(a.readout_deg) << '\n';
  out << "peaks: " << found.size() << '\n';
  out << "spectrum_csv: " << spec_path << '\n';
  out << "peaks_csv: " << peaks_path << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------------
// plan
// --------------------------------------------------------------------------

struct PlanArgs {
  std::string config_path;
  std::string gate;
  double resolution_hz = 0.5;
};

int cmd_plan(const PlanArgs& a, std::ostream& out) {
  const Config cfg = parse_config_file(a.config_path);
  const GateSpec gate = parse_gate_spec(tokenize(a.gate), cfg.system.n);
  const PulsePlan plan =
      plan_transition_pulse(cfg.system, gate, a.resolution_hz);

  print_header(out, "plan");
  out << "gate: " << a.gate << '\n';
  out << "resolution_hz: " << fmt(a.resolution_hz) << '\n';
  out << "target_lines: " << plan.target_lines_hz.size() << '\n';
  for (size_t i = 0; i < plan.target_lines_hz.size(); ++i) {
    out << "target_line_" << (i + 1) << "_hz: " << fmt(plan.target_lines_hz[i])
        << '\n';
  }
  out << "spread_hz: " << fmt(plan.spread_hz) << '\n';
  out << "required_selectivity_hz: " << fmt(plan.required_selectivity_hz)
      << '\n';
  out << "single_pulse_feasible: "
      << (plan.single_pulse_feasible ? "true" : "false") << '\n';
  return plan.single_pulse_feasible ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"spinsim: density-matrix simulator for coupled spin-1/2 systems"};
  app.require_subcommand(1);

  VerifyGateArgs vg;
  CLI::App* verify = app.add_subcommand(
      "verify-gate", "check a pulse sequence against a target gate");
  verify->add_option("--config", vg.config_path)->required();
  verify->add_option("--sequence", vg.sequence_path)->required();
  verify->add_option("--target", vg.target, "fredkin (default)");
  verify->add_option("--target-matrix", vg.target_matrix_path,
                     "file with a custom target matrix");
  verify->add_option("--model", vg.model)
      ->check(CLI::IsMember({"ideal", "soft"}));
  verify->add_option("--tolerance", vg.tolerance);

  SimulateArgs sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "run a sequence on a state and report "
                                     "its product-operator expansion");
  simulate->add_option("--config", sim.config_path)->required();
  simulate->add_option("--sequence", sim.sequence_path)->required();
  simulate->add_option("--initial", sim.initial,
                       "eq | in | <terms file> (default eq)");
  simulate->add_option("--model", sim.model)
      ->check(CLI::IsMember({"ideal", "soft"}));
  simulate->add_option("--epsilon", sim.epsilon);
  simulate->add_option("--write-matrix", sim.write_matrix_path);

  SpectrumArgs sp;
  CLI::App* spectrum_cmd = app.add_subcommand(
      "spectrum", "synthesize the spectrum of a state in one spin's window");
  spectrum_cmd->add_option("--config", sp.config_path)->required();
  spectrum_cmd->add_option("--state", sp.state,
                           "eq | in | out | mixed | <terms file> (default out)");
  spectrum_cmd->add_option("--spin", sp.spin)->required();
  spectrum_cmd->add_option("--phase-correction", sp.phase_correction_deg);
  spectrum_cmd->add_option("--readout", sp.readout_deg,
                           "y-axis readout pulse angle in degrees");
  spectrum_cmd->add_option("--epsilon", sp.epsilon);
  spectrum_cmd->add_option("--out", sp.out_dir)->required();
  spectrum_cmd->add_option("--min-peak-fraction", sp.min_peak_fraction);

  PlanArgs pl;
  CLI::App* plan_cmd = app.add_subcommand(
      "plan", "transition-pulse feasibility for a gate on this system");
  plan_cmd->add_option("--config", pl.config_path)->required();
  plan_cmd->add_option("--gate", pl.gate, "e.g. 'tcnot 3 2' or 'ttoffoli 1 2 3'")
      ->required();
  plan_cmd->add_option("--resolution", pl.resolution_hz);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify_gate(vg, out);
    if (simulate->parsed()) return cmd_simulate(sim, out);
    if (spectrum_cmd->parsed()) return cmd_spectrum(sp, out);
    if (plan_cmd->parsed()) return cmd_plan(pl, out);
    err << "error: no subcommand\n";
    return kExitInputError;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const ConfigError& e) {
    err << "error: config " << e.what() << '\n';
    return kExitInputError;
  } catch (const SequenceParseError& e) {
    err << "error: sequence " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace spinsim
