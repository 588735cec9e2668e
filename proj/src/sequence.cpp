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

#include "spinsim/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

namespace spinsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream is(line);
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

double parse_num(const std::string& tok, int line_no, const char* what) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw SequenceParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
  }
  if (used != tok.size() || !std::isfinite(v)) {
    throw SequenceParseError(line_no, std::string("bad ") + what + " '" + tok + "'");
  }
  return v;
}

}  // namespace

Operator equilibrium_state(int n, double epsilon) {
  const int dim = 1 << n;
  Operator rho = (1.0 / dim) * Operator::Identity(dim, dim);
  for (int k = 1; k <= n; ++k) {
    rho += epsilon * angular_momentum(Axis::Z, k, n);
  }
  return rho;
}

Operator prepare_input(double epsilon) {
  const Operator r1 = ideal_gate({RotationSpec{1, Axis::Y, kPi / 2}, 3});
  const Operator r3 = ideal_gate({RotationSpec{3, Axis::Y, kPi / 2}, 3});
  const Operator u = r3 * r1;
  return u * equilibrium_state(3, epsilon) * u.adjoint();
}

Operator apply_unitary(const Operator& rho, const Operator& u) {
  if (rho.rows() != u.rows() || rho.cols() != u.cols() || u.rows() != u.cols()) {
    throw std::invalid_argument("apply_unitary: dimension mismatch");
  }
  if (!is_unitary(u, 1e-10)) {
    throw std::invalid_argument("apply_unitary: u is not unitary");
  }
  return u * rho * u.adjoint();
}

Operator internal_hamiltonian_hz(const SpinSystem& sys,
                                 double frame_offset_hz) {
  const int n = sys.n;
  Operator h = Operator::Zero(sys.dim(), sys.dim());
  for (int k = 1; k <= n; ++k) {
    h += (sys.offset(k) - frame_offset_hz) * angular_momentum(Axis::Z, k, n);
  }
  for (int k = 1; k <= n; ++k) {
    for (int l = k + 1; l <= n; ++l) {
      h += sys.j(k, l) * angular_momentum(Axis::Z, k, n) *
           angular_momentum(Axis::Z, l, n);
    }
  }
  return h;
}

Operator soft_pulse_unitary(const SpinSystem& sys, const SoftPulseEvent& pulse,
                            double frame_hz, double start_time_s) {
  if (pulse.duration_s < 0 || pulse.amplitude_hz < 0) {
    throw std::invalid_argument("soft pulse: negative duration or amplitude");
  }
  const int n = sys.n;
  const double phi = pulse.phase_deg * kPi / 180.0;
  Operator h = internal_hamiltonian_hz(sys, pulse.carrier_hz);
  for (int k = 1; k <= n; ++k) {
    h += pulse.amplitude_hz * (std::cos(phi) * angular_momentum(Axis::X, k, n) +
                               std::sin(phi) * angular_momentum(Axis::Y, k, n));
  }
  const Operator uc = expm_hermitian(h, -kTwoPi * pulse.duration_s);

  // Frame conversions so that consecutive events compose at frame_hz.
  const Operator sz = total_angular_momentum_z(n);
  const double dv = pulse.carrier_hz - frame_hz;
  const Operator z_end =
      expm_hermitian(sz, -kTwoPi * dv * (start_time_s + pulse.duration_s));
  const Operator z_start = expm_hermitian(sz, kTwoPi * dv * start_time_s);
  return z_end * uc * z_start;
}

SequenceResult run_sequence(const SpinSystem& sys, const Sequence& seq,
                            const Operator& rho0, Model model,
                            double frame_hz) {
  if (rho0.rows() != sys.dim() || rho0.cols() != sys.dim()) {
    throw std::invalid_argument("run_sequence: state dimension mismatch");
  }
  SequenceResult res;
  res.total_unitary = Operator::Identity(sys.dim(), sys.dim());
  double t = 0.0;
  for (const PulseEvent& ev : seq.events) {
    Operator u;
    if (const auto* ideal = std::get_if<IdealEvent>(&ev)) {
      if (ideal->gate.n != sys.n) {
        throw std::invalid_argument("run_sequence: gate arity mismatch");
      }
      u = ideal_gate(ideal->gate);
    } else if (const auto* soft = std::get_if<SoftPulseEvent>(&ev)) {
      if (model != Model::Soft) {
        throw std::invalid_argument(
            "run_sequence: soft pulse event requires the soft model");
      }
      u = soft_pulse_unitary(sys, *soft, frame_hz, t);
      t += soft->duration_s;
    } else {
      const auto& d = std::get<DelayEvent>(ev);
      if (d.duration_s < 0) {
        throw std::invalid_argument("run_sequence: negative delay");
      }
      u = expm_hermitian(internal_hamiltonian_hz(sys, frame_hz),
                         -kTwoPi * d.duration_s);
      t += d.duration_s;
    }
    res.total_unitary = u * res.total_unitary;
  }
  res.rho = res.total_unitary * rho0 * res.total_unitary.adjoint();
  res.total_time_s = t;
  return res;
}

Sequence parse_sequence(std::istream& in, int n) {
  Sequence seq;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::vector<std::string> toks = split_tokens(line);
    if (toks.empty()) continue;
    const std::string kind = toks[0];
    if (kind == "ideal") {
      if (toks.size() < 2) {
        throw SequenceParseError(line_no, "ideal event needs a gate spec");
      }
      std::vector<std::string> gate_toks(toks.begin() + 1, toks.end());
      try {
        seq.events.push_back(IdealEvent{parse_gate_spec(gate_toks, n)});
      } catch (const std::invalid_argument& e) {
        throw SequenceParseError(line_no, e.what());
      }
    } else if (kind == "soft") {
      if (toks.size() != 5) {
        throw SequenceParseError(
            line_no, "soft event takes carrier, amplitude, phase, duration");
      }
      SoftPulseEvent p;
      p.carrier_hz = parse_num(toks[1], line_no, "carrier");
      p.amplitude_hz = parse_num(toks[2], line_no, "amplitude");
      p.phase_deg = parse_num(toks[3], line_no, "phase");
      p.duration_s = parse_num(toks[4], line_no, "duration");
      if (p.amplitude_hz < 0 || p.duration_s < 0) {
        throw SequenceParseError(line_no,
                                 "amplitude and duration must be >= 0");
      }
      seq.events.push_back(p);
    } else if (kind == "delay") {
      if (toks.size() != 2) {
        throw SequenceParseError(line_no, "delay takes one duration");
      }
      const double d = parse_num(toks[1], line_no, "duration");
      if (d < 0) throw SequenceParseError(line_no, "duration must be >= 0");
      seq.events.push_back(DelayEvent{d});
    } else {
      throw SequenceParseError(line_no, "unknown event '" + kind + "'");
    }
  }
  return seq;
}

Sequence parse_sequence_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open sequence file: " + path);
  }
  return parse_sequence(in, n);
}

PhaseCancellationResult phase_cancellation_experiment(const SpinSystem& sys,
                                                      double shift_interval_s,
                                                      Model model,
                                                      double pulse_duration_s) {
  if (sys.n != 3) {
    throw std::invalid_argument(
        "phase_cancellation_experiment requires a 3-spin system");
  }
  if (shift_interval_s < 0) {
    throw std::invalid_argument("shift interval must be >= 0");
  }
  const double t_pulse = pulse_duration_s;
  const double amp = 1.0 / (2.0 * t_pulse);  // nominal pi nutation
  const double carrier_cnot = sys.offset(2) - 0.5 * sys.j(2, 3);
  const double carrier_tof =
      sys.offset(3) - 0.5 * (sys.j(1, 3) + sys.j(2, 3));

  auto build = [&](double third_phase_deg) {
    Sequence seq;
    if (model == Model::Soft) {
      seq.events.push_back(SoftPulseEvent{carrier_cnot, amp, 0.0, t_pulse});
      seq.events.push_back(DelayEvent{shift_interval_s});
      seq.events.push_back(SoftPulseEvent{carrier_tof, amp, 90.0, t_pulse});
      seq.events.push_back(DelayEvent{shift_interval_s});
      seq.events.push_back(
          SoftPulseEvent{carrier_cnot, amp, third_phase_deg, t_pulse});
    } else {
      // Transmitter phase 0 realizes the sense -1 transition CNOT, 180 the
      // sense +1 one.
      const int third_sense = third_phase_deg == 180.0 ? +1 : -1;
      seq.events.push_back(IdealEvent{{TransitionCnotSpec{3, 2, -1, true}, 3}});
      seq.events.push_back(DelayEvent{shift_interval_s});
      seq.events.push_back(
          IdealEvent{{TransitionToffoliSpec{1, 2, 3, true, true}, 3}});
      seq.events.push_back(DelayEvent{shift_interval_s});
      seq.events.push_back(
          IdealEvent{{TransitionCnotSpec{3, 2, third_sense, true}, 3}});
    }
    return run_sequence(sys, seq, Operator::Identity(8, 8), model).total_unitary;
  };

  const Operator target = fredkin_sequence();
  PhaseCancellationResult r;
  r.fid_inverted = monomial_phase_insensitive_fidelity(target, build(180.0));
  r.fid_same = monomial_phase_insensitive_fidelity(target, build(0.0));
  return r;
}

PulsePlan plan_transition_pulse(const SpinSystem& sys, const GateSpec& gate,
                                double resolution_hz) {
  if (resolution_hz <= 0) {
    throw std::invalid_argument("plan: resolution must be > 0");
  }
  int target = 0;
  std::vector<std::pair<int, bool>> controls;  // spin, condition_on_one
  if (const auto* tc = std::get_if<TransitionCnotSpec>(&gate.op)) {
    target = tc->target;
    controls.push_back({tc->control, tc->condition_on_one});
  } else if (const auto* tt = std::get_if<TransitionToffoliSpec>(&gate.op)) {
    target = tt->target;
    controls.push_back({tt->control1, tt->c1_on_one});
    controls.push_back({tt->control2, tt->c2_on_one});
  } else {
    throw std::invalid_argument("plan: gate must be a transition pulse");
  }
  const int n = sys.n;
  if (gate.n != n) throw std::invalid_argument("plan: gate arity mismatch");
  if (target < 1 || target > n) {
    throw std::invalid_argument("plan: target spin out of range");
  }
  for (auto [c, on] : controls) {
    if (c < 1 || c > n || c == target) {
      throw std::invalid_argument("plan: invalid control spin");
    }
  }

  // All single-quantum lines of the target spin, one per spectator pattern.
  std::vector<int> others;
  for (int k = 1; k <= n; ++k) {
    if (k != target) others.push_back(k);
  }
  PulsePlan plan;
  const int patterns = 1 << (n - 1);
  for (int p = 0; p < patterns; ++p) {
    double freq = sys.offset(target);
    bool is_target = true;
    for (size_t i = 0; i < others.size(); ++i) {
      const int spin = others[i];
      const int bit = (p >> (n - 2 - static_cast<int>(i))) & 1;
      const double m = bit ? -0.5 : 0.5;
      freq += sys.j(target, spin) * m;
      for (auto [c, on] : controls) {
        if (c == spin && bit != (on ? 1 : 0)) is_target = false;
      }
    }
    (is_target ? plan.target_lines_hz : plan.other_lines_hz).push_back(freq);
  }
  std::sort(plan.target_lines_hz.begin(), plan.target_lines_hz.end());
  std::sort(plan.other_lines_hz.begin(), plan.other_lines_hz.end());

  plan.spread_hz = plan.target_lines_hz.back() - plan.target_lines_hz.front();
  plan.required_selectivity_hz = std::numeric_limits<double>::infinity();
  for (double f : plan.other_lines_hz) {
    const double lo = plan.target_lines_hz.front();
    const double hi = plan.target_lines_hz.back();
    const double d = f < lo ? lo - f : (f > hi ? f - hi : 0.0);
    plan.required_selectivity_hz = std::min(plan.required_selectivity_hz, d);
  }
  plan.single_pulse_feasible =
      plan.spread_hz <= resolution_hz &&
      plan.required_selectivity_hz > plan.spread_hz + resolution_hz;
  return plan;
}

}  // namespace spinsim
