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

#include <string>
#include <variant>
#include <vector>

#include "spinsim/operator_algebra.hpp"
#include "spinsim/spin_ops.hpp"

namespace spinsim {

// ---------------------------------------------------------------------------
// Gate specifications
// ---------------------------------------------------------------------------

struct TransitionCnotSpec {
  int control = 0;
  int target = 0;
  int sense = +1;               // sign of the exponent
  bool condition_on_one = true; // drive the control = |1> manifold
};
struct TransitionToffoliSpec {
  int control1 = 0, control2 = 0, target = 0;
  bool c1_on_one = true, c2_on_one = true;
};
struct RotationSpec {
  int spin = 0;
  Axis axis = Axis::X;
  double angle_rad = 0.0;
};
struct CnotSpec { int control = 0, target = 0; };
struct ToffoliSpec { int control1 = 0, control2 = 0, target = 0; };
struct FredkinSpec { int control = 0, target1 = 0, target2 = 0; };
struct RawGateSpec { Operator u; };

struct GateSpec {
  std::variant<TransitionCnotSpec, TransitionToffoliSpec, RotationSpec,
               CnotSpec, ToffoliSpec, FredkinSpec, RawGateSpec> op;
  int n = 0;
};

/// Parse a gate from whitespace tokens, e.g. {"tcnot32","+"}, {"rot","1","y","90"},
/// {"cnot","3","2"}, {"fredkin","1","2","3"}, {"ttoffoli","1","2","3"}.
/// Rotation angles are given in degrees. Throws std::invalid_argument.
GateSpec parse_gate_spec(const std::vector<std::string>& tokens, int n);

/// Matrix of any gate spec. Rotations are R_alpha(theta) = exp(-i theta/2 sigma_alpha);
/// with this sign R_y(pi/2) maps I_z to I_x. Controlled gates are 0/1-basis
/// permutation matrices. Throws on invalid or coincident spin indices.
Operator ideal_gate(const GateSpec& spec);

// ---------------------------------------------------------------------------
// Transition-selective pulse unitaries (ideal limit)
// ---------------------------------------------------------------------------

/// Conditional pi rotation of `target` about y, active on the manifold where
/// `control` is |1> (or |0> when condition_on_one = false):
///   exp(i * sense * pi * 1/4 * sigma_y^target * (1 -+ sigma_z^control)).
Operator transition_cnot(int control, int target, int sense, int n,
                         bool condition_on_one = true);

/// Conditional pi rotation of `target` about x, active where both controls are
/// in their conditioning state:
///   exp(-i pi 1/8 (1 -+ sigma_z^c1)(1 -+ sigma_z^c2) sigma_x^target).
Operator transition_toffoli(int control1, int control2, int target, int n,
                            bool c1_on_one = true, bool c2_on_one = true);

/// Three-spin specializations with control 3 / target 2 and controls 1,2 /
/// target 3. transition_cnot_32(+1) and transition_cnot_32(-1) are adjoints of
/// each other; transition_toffoli_123() equals blockdiag(I6, -i sigma_x).
Operator transition_cnot_32(int sense);
Operator transition_toffoli_123();

/// Propagator of the three-transition-pulse network realizing the conditional
/// swap: the sense -1 transition CNOT is applied first, then the transition
/// Toffoli, then the sense +1 transition CNOT. Equals
/// blockdiag(I5, -i sigma_x, 1): a controlled swap carrying a -i phase on the
/// swapped pair |101> <-> |110>.
Operator fredkin_sequence();

/// Textbook construction: cnot(3,2) * toffoli(1,2;3) * cnot(3,2). Equals the
/// ideal Fredkin gate exactly (a permutation identity).
Operator fredkin_via_cnot_toffoli();

// ---------------------------------------------------------------------------
// Equivalence checking
// ---------------------------------------------------------------------------

struct PhaseTableEntry {
  int state = 0;        // basis index
  Complex phase{1, 0};  // per-basis-state phase factor of v relative to u
};

/// Verdicts of comparing two unitaries u (reference) and v (candidate):
///   exact          entrywise equal,
///   global_phase   v = e^{i phi} u,
///   monomial_phase v = D u with D diagonal and unit-modulus, i.e. v agrees
///                  with u up to a phase per basis state (the permutation
///                  parts must match; v * u^dagger is tested for diagonality).
/// exact implies global_phase implies monomial_phase. fidelity is
/// |Tr(u^dagger v)| / dim. phase_table holds diag(v u^dagger) when monomial.
struct EquivalenceReport {
  bool exact = false;
  bool global_phase = false;
  bool monomial_phase = false;
  double fidelity = 0.0;
  std::vector<PhaseTableEntry> phase_table;
};

/// Throws std::invalid_argument unless both inputs are unitary with equal dims.
EquivalenceReport equivalence(const Operator& u, const Operator& v,
                              double tol = 1e-10);

/// Fidelity insensitive to any per-basis-state phase: with M = u_ref^dagger u,
/// the mean over rows of the largest entry magnitude. Equals 1 exactly when u
/// is u_ref times any unit-modulus monomial factor.
double monomial_phase_insensitive_fidelity(const Operator& u_ref,
                                           const Operator& u);

}  // namespace spinsim
