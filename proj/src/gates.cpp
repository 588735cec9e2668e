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

#include "spinsim/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinsim {

namespace {

constexpr double kPi = std::numbers::pi;

void check_distinct_spins(std::initializer_list<int> spins, int n) {
  for (int s : spins) {
    if (s < 1 || s > n) {
      throw std::invalid_argument("gate spin index out of range");
    }
  }
  for (auto it = spins.begin(); it != spins.end(); ++it) {
    for (auto jt = std::next(it); jt != spins.end(); ++jt) {
      if (*it == *jt) {
        throw std::invalid_argument("gate spin indices must be distinct");
      }
    }
  }
}

Operator permutation_gate(int n, auto&& map_bits) {
  const int dim = 1 << n;
  Operator u = Operator::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) u(map_bits(c), c) = 1.0;
  return u;
}

int parse_spin_token(const std::string& tok, int n) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected spin index, got '" + tok + "'");
  }
  if (used != tok.size() || v < 1 || v > n) {
    throw std::invalid_argument("spin index out of range: '" + tok + "'");
  }
  return v;
}

double parse_double_token(const std::string& tok) {
  size_t used = 0;
  double v = 0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("expected number, got '" + tok + "'");
  }
  if (used != tok.size()) {
    throw std::invalid_argument("expected number, got '" + tok + "'");
  }
  return v;
}

}  // namespace

Operator transition_cnot(int control, int target, int sense, int n,
                         bool condition_on_one) {
  check_distinct_spins({control, target}, n);
  if (sense != 1 && sense != -1) {
    throw std::invalid_argument("transition_cnot: sense must be +1 or -1");
  }
  const Operator proj =
      identity_op(n) +
      (condition_on_one ? -1.0 : 1.0) * pauli(Axis::Z, control, n);
  const Operator gen = 0.25 * pauli(Axis::Y, target, n) * proj;
  return expm_hermitian(gen, sense * kPi);
}

Operator transition_toffoli(int control1, int control2, int target, int n,
                            bool c1_on_one, bool c2_on_one) {
  check_distinct_spins({control1, control2, target}, n);
  const Operator p1 =
      identity_op(n) + (c1_on_one ? -1.0 : 1.0) * pauli(Axis::Z, control1, n);
  const Operator p2 =
      identity_op(n) + (c2_on_one ? -1.0 : 1.0) * pauli(Axis::Z, control2, n);
  const Operator gen = 0.125 * p1 * p2 * pauli(Axis::X, target, n);
  return expm_hermitian(gen, -kPi);
}

Operator transition_cnot_32(int sense) { return transition_cnot(3, 2, sense, 3); }

Operator transition_toffoli_123() { return transition_toffoli(1, 2, 3, 3); }

Operator fredkin_sequence() {
  // Temporal order: sense -1 CNOT pulse, Toffoli pulse, sense +1 CNOT pulse.
  return transition_cnot_32(+1) * transition_toffoli_123() *
         transition_cnot_32(-1);
}

Operator fredkin_via_cnot_toffoli() {
  GateSpec c{CnotSpec{3, 2}, 3};
  GateSpec t{ToffoliSpec{1, 2, 3}, 3};
  return ideal_gate(c) * ideal_gate(t) * ideal_gate(c);
}

Operator ideal_gate(const GateSpec& spec) {
  const int n = spec.n;
  if (n < 1 || n > kMaxSpins) {
    throw std::invalid_argument("ideal_gate: spin count out of range");
  }
  return std::visit(
      [n](const auto& g) -> Operator {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TransitionCnotSpec>) {
          return transition_cnot(g.control, g.target, g.sense, n,
                                 g.condition_on_one);
        } else if constexpr (std::is_same_v<T, TransitionToffoliSpec>) {
          return transition_toffoli(g.control1, g.control2, g.target, n,
                                    g.c1_on_one, g.c2_on_one);
        } else if constexpr (std::is_same_v<T, RotationSpec>) {
          check_distinct_spins({g.spin}, n);
          return expm_hermitian(pauli(g.axis, g.spin, n), -0.5 * g.angle_rad);
        } else if constexpr (std::is_same_v<T, CnotSpec>) {
          check_distinct_spins({g.control, g.target}, n);
          const int cb = 1 << (n - g.control);
          const int tb = 1 << (n - g.target);
          return permutation_gate(
              n, [cb, tb](int c) { return (c & cb) ? (c ^ tb) : c; });
        } else if constexpr (std::is_same_v<T, ToffoliSpec>) {
          check_distinct_spins({g.control1, g.control2, g.target}, n);
          const int c1 = 1 << (n - g.control1);
          const int c2 = 1 << (n - g.control2);
          const int tb = 1 << (n - g.target);
          return permutation_gate(n, [c1, c2, tb](int c) {
            return ((c & c1) && (c & c2)) ? (c ^ tb) : c;
          });
        } else if constexpr (std::is_same_v<T, FredkinSpec>) {
          check_distinct_spins({g.control, g.target1, g.target2}, n);
          const int cb = 1 << (n - g.control);
          const int t1 = 1 << (n - g.target1);
          const int t2 = 1 << (n - g.target2);
          return permutation_gate(n, [cb, t1, t2](int c) {
            if (!(c & cb)) return c;
            const bool b1 = (c & t1) != 0;
            const bool b2 = (c & t2) != 0;
            if (b1 == b2) return c;
            return c ^ t1 ^ t2;
          });
        } else {
          static_assert(std::is_same_v<T, RawGateSpec>);
          if (g.u.rows() != (1 << n) || g.u.cols() != (1 << n)) {
            throw std::invalid_argument("raw gate dimension mismatch");
          }
          return g.u;
        }
      },
      spec.op);
}

GateSpec parse_gate_spec(const std::vector<std::string>& tokens, int n) {
  if (tokens.empty()) throw std::invalid_argument("empty gate spec");
  const std::string& kind = tokens[0];
  auto want = [&](size_t count) {
    if (tokens.size() != count) {
      throw std::invalid_argument("gate '" + kind +
                                  "' takes " + std::to_string(count - 1) +
                                  " arguments");
    }
  };
  if (kind == "tcnot32") {
    want(2);
    if (n != 3) throw std::invalid_argument("tcnot32 requires a 3-spin system");
    if (tokens[1] != "+" && tokens[1] != "-") {
      throw std::invalid_argument("tcnot32 sense must be + or -");
    }
    return {TransitionCnotSpec{3, 2, tokens[1] == "+" ? +1 : -1, true}, n};
  }
  if (kind == "tcnot") {
    // sense token is optional; planning only needs the geometry
    if (tokens.size() != 3 && tokens.size() != 4) {
      throw std::invalid_argument("tcnot takes: <control> <target> [+|-]");
    }
    int sense = +1;
    if (tokens.size() == 4) {
      if (tokens[3] != "+" && tokens[3] != "-") {
        throw std::invalid_argument("tcnot sense must be + or -");
      }
      sense = tokens[3] == "+" ? +1 : -1;
    }
    return {TransitionCnotSpec{parse_spin_token(tokens[1], n),
                               parse_spin_token(tokens[2], n), sense, true},
            n};
  }
  if (kind == "ttoffoli123") {
    want(1);
    if (n != 3) {
      throw std::invalid_argument("ttoffoli123 requires a 3-spin system");
    }
    return {TransitionToffoliSpec{1, 2, 3, true, true}, n};
  }
  if (kind == "ttoffoli") {
    want(4);
    return {TransitionToffoliSpec{parse_spin_token(tokens[1], n),
                                  parse_spin_token(tokens[2], n),
                                  parse_spin_token(tokens[3], n), true, true},
            n};
  }
  if (kind == "rot") {
    want(4);
    Axis ax;
    if (tokens[2] == "x") ax = Axis::X;
    else if (tokens[2] == "y") ax = Axis::Y;
    else if (tokens[2] == "z") ax = Axis::Z;
    else throw std::invalid_argument("rotation axis must be x, y or z");
    const double deg = parse_double_token(tokens[3]);
    return {RotationSpec{parse_spin_token(tokens[1], n), ax,
                         deg * kPi / 180.0},
            n};
  }
  if (kind == "cnot") {
    want(3);
    return {CnotSpec{parse_spin_token(tokens[1], n),
                     parse_spin_token(tokens[2], n)},
            n};
  }
  if (kind == "toffoli") {
    want(4);
    return {ToffoliSpec{parse_spin_token(tokens[1], n),
                        parse_spin_token(tokens[2], n),
                        parse_spin_token(tokens[3], n)},
            n};
  }
  if (kind == "fredkin") {
    want(4);
    return {FredkinSpec{parse_spin_token(tokens[1], n),
                        parse_spin_token(tokens[2], n),
                        parse_spin_token(tokens[3], n)},
            n};
  }
  throw std::invalid_argument("unknown gate '" + kind + "'");
}

EquivalenceReport equivalence(const Operator& u, const Operator& v,
                              double tol) {
  if (u.rows() != v.rows() || u.cols() != v.cols()) {
    throw std::invalid_argument("equivalence: dimension mismatch");
  }
  if (!is_unitary(u, 1e-10) || !is_unitary(v, 1e-10)) {
    throw std::invalid_argument("equivalence: inputs must be unitary");
  }
  const int dim = static_cast<int>(u.rows());
  EquivalenceReport rep;
  const Operator m = v * u.adjoint();
  rep.fidelity = std::abs(m.trace()) / dim;

  rep.exact = max_abs_diff(u, v) <= tol;

  const Complex c = m.trace() / static_cast<double>(dim);
  rep.global_phase = std::abs(std::abs(c) - 1.0) <= tol &&
                     max_abs_diff(m, c * Operator::Identity(dim, dim)) <= tol;

  bool diag_ok = true;
  for (int r = 0; r < dim && diag_ok; ++r) {
    for (int col = 0; col < dim && diag_ok; ++col) {
      if (r == col) {
        if (std::abs(std::abs(m(r, col)) - 1.0) > tol) diag_ok = false;
      } else if (std::abs(m(r, col)) > tol) {
        diag_ok = false;
      }
    }
  }
  rep.monomial_phase = diag_ok;
  if (diag_ok) {
    rep.phase_table.reserve(static_cast<size_t>(dim));
    for (int r = 0; r < dim; ++r) rep.phase_table.push_back({r, m(r, r)});
  }
  // exact => global phase => monomial phase
  rep.global_phase = rep.global_phase || rep.exact;
  rep.monomial_phase = rep.monomial_phase || rep.global_phase;
  return rep;
}

double monomial_phase_insensitive_fidelity(const Operator& u_ref,
                                           const Operator& u) {
  if (u_ref.rows() != u.rows() || u_ref.cols() != u.cols()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  const Operator m = u_ref.adjoint() * u;
  double acc = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    acc += m.row(r).cwiseAbs().maxCoeff();
  }
  return acc / static_cast<double>(m.rows());
}

}  // namespace spinsim
