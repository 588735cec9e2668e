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

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "spinsim/gates.hpp"
#include "spinsim/spin_system.hpp"

namespace spinsim {

// ---------------------------------------------------------------------------
// Pulse-sequence events
// ---------------------------------------------------------------------------

struct IdealEvent { GateSpec gate; };

/// Constant-amplitude RF pulse. carrier_hz is the transmitter offset in the
/// same coordinate as the chemical-shift offsets; amplitude_hz is the nutation
/// frequency omega_1 / 2pi; phase_deg selects the drive axis
/// cos(phi) x + sin(phi) y.
struct SoftPulseEvent {
  double carrier_hz = 0.0;
  double amplitude_hz = 0.0;
  double phase_deg = 0.0;
  double duration_s = 0.0;
};

struct DelayEvent { double duration_s = 0.0; };

using PulseEvent = std::variant<IdealEvent, SoftPulseEvent, DelayEvent>;

struct Sequence {
  std::vector<PulseEvent> events;
};

enum class Model { Ideal, Soft };

struct SequenceParseError : std::runtime_error {
  int line = 0;
  SequenceParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

/// Parse the line-oriented sequence script: one event per line,
///   ideal <gate-spec>
///   soft <carrier_hz> <amplitude_hz> <phase_deg> <duration_s>
///   delay <duration_s>
/// '#' starts a comment. Throws SequenceParseError with the line number.
Sequence parse_sequence(std::istream& in, int n);
Sequence parse_sequence_file(const std::string& path, int n);

// ---------------------------------------------------------------------------
// State preparation and propagation
// ---------------------------------------------------------------------------

/// Thermal state (1/2^n) I + epsilon * sum_k I_z^k. Hermitian, unit trace.
Operator equilibrium_state(int n, double epsilon);

/// Three-spin input state obtained from the equilibrium state by ideal
/// R_y(pi/2) rotations on spins 1 and 3:
/// (1/8) I + epsilon (I_x^1 + I_z^2 + I_x^3).
Operator prepare_input(double epsilon);

/// u * rho * u^dagger. Preserves trace, hermiticity and the eigenvalue
/// multiset. Throws on dimension mismatch or non-unitary u.
Operator apply_unitary(const Operator& rho, const Operator& u);

/// Weak-coupling internal Hamiltonian in Hz, in a frame rotating at
/// frame_offset_hz: sum_k (nu_k - frame) I_z^k + sum_{k<l} J_kl I_z^k I_z^l.
Operator internal_hamiltonian_hz(const SpinSystem& sys,
                                 double frame_offset_hz = 0.0);

/// Propagator of one soft square pulse, expressed in the common frame rotating
/// at frame_hz. The pulse Hamiltonian is constant in its own carrier frame,
///   H/h = sum_k (nu_k - carrier) I_z^k + sum_{k<l} J_kl I_z^k I_z^l
///         + amplitude (cos phi I_x^k + sin phi I_y^k summed over k),
/// exponentiated once over the full duration, then wrapped with the frame
/// conversions exp(-i 2 pi (carrier - frame) t Sum I_z) at the start and end
/// times so that consecutive events compose in the common frame.
/// start_time_s is the accumulated sequence time at which the pulse begins.
Operator soft_pulse_unitary(const SpinSystem& sys, const SoftPulseEvent& pulse,
                            double frame_hz, double start_time_s);

struct SequenceResult {
  Operator rho;
  Operator total_unitary;
  double total_time_s = 0.0;
};

/// Left-to-right application of event propagators. Delay events always evolve
/// under the internal Hamiltonian; soft pulses are only legal under
/// Model::Soft (in Model::Ideal they raise std::invalid_argument).
SequenceResult run_sequence(const SpinSystem& sys, const Sequence& seq,
                            const Operator& rho0, Model model,
                            double frame_hz = 0.0);

// ---------------------------------------------------------------------------
// Phase-inversion cancellation experiment
// ---------------------------------------------------------------------------

struct PhaseCancellationResult {
  double fid_inverted = 0.0;
  double fid_same = 0.0;
};

/// Builds the three-transition-pulse network twice on the given 3-spin system:
/// once with the transmitter phases (0, 90, 180) degrees and once with
/// (0, 90, 0), inserting a delay of shift_interval_s on each side of the
/// middle pulse, and returns the monomial-phase-insensitive fidelity of each
/// total propagator against fredkin_sequence(). Under Model::Soft the pulses
/// are square pulses of pulse_duration_s with amplitude 1/(2T), carriers
/// placed on the conditioned target lines; under Model::Ideal they are the
/// ideal transition gates (phase 0 -> sense -1, phase 180 -> sense +1).
PhaseCancellationResult phase_cancellation_experiment(
    const SpinSystem& sys, double shift_interval_s, Model model = Model::Soft,
    double pulse_duration_s = 0.06656);

// ---------------------------------------------------------------------------
// Transition-pulse planning
// ---------------------------------------------------------------------------

struct PulsePlan {
  std::vector<double> target_lines_hz;  // lines the pulse must cover
  std::vector<double> other_lines_hz;   // lines it must not touch
  double spread_hz = 0.0;               // width of the target-line band
  double required_selectivity_hz = 0.0; // gap from the band to the nearest other line
  bool single_pulse_feasible = false;
};

/// Enumerate the single-quantum lines of the gate's target spin, split into
/// those whose control spins are in the conditioning state (targets) and the
/// rest. A single pulse is deemed feasible when the target-line spread is at
/// most `resolution_hz` while every non-target line lies farther from the
/// target band than spread + resolution. Throws on non-transition gate specs
/// or invalid spins.
PulsePlan plan_transition_pulse(const SpinSystem& sys, const GateSpec& gate,
                                double resolution_hz);

}  // namespace spinsim
