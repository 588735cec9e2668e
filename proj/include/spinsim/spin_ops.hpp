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

#include <span>

#include "spinsim/operator_algebra.hpp"

namespace spinsim {

// Basis convention, fixed for the whole library:
//   - spin 1 is the most significant bit, so |b1 b2 ... bn> has index
//     sum_k b_k * 2^(n-k);
//   - |0> is the sigma_z = +1 eigenstate (m = +1/2, "up").
// Under this convention the transition-gate constructors in gates.hpp
// reproduce their conventional matrix forms entrywise.

enum class Axis { X, Y, Z };

inline constexpr int kMaxSpins = 10;

/// Basis index of the state with the given bits (bits.size() = n, spin 1 first).
int basis_index(std::span<const int> bits);

/// Identity on n spins.
Operator identity_op(int n);

/// Pauli matrix on spin k (1-based) embedded in the n-spin space:
/// I (x) ... (x) sigma_axis (x) ... (x) I with sigma at position k.
/// Hermitian, unitary, traceless. Throws if k or n is out of range.
Operator pauli(Axis axis, int k, int n);

/// Angular-momentum component I_axis^k = pauli(axis,k,n) / 2.
Operator angular_momentum(Axis axis, int k, int n);

/// sum_k I_z^k over all n spins.
Operator total_angular_momentum_z(int n);

}  // namespace spinsim
