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

#include <complex>

#include <Eigen/Dense>

namespace spinsim {

using Complex = std::complex<double>;

/// Dense complex matrix, the universal value type of the operator algebra.
/// All values are immutable after construction in the sense that no library
/// function mutates its arguments; operations are pure and thread-compatible.
using Operator = Eigen::MatrixXcd;

// Tolerance ladder: exact algebra / hermiticity checks / soft-pulse physics.
inline constexpr double kAlgebraTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kPhysicsTol = 1e-6;

bool is_hermitian(const Operator& a, double tol = kHermitianTol);
bool is_unitary(const Operator& a, double tol = kAlgebraTol);

/// Largest entrywise |a - b|.
double max_abs_diff(const Operator& a, const Operator& b);

/// Hilbert-Schmidt inner product Tr(a^dagger * b). Throws on dimension mismatch.
Complex trace_inner(const Operator& a, const Operator& b);

/// exp(i * scale * h) for Hermitian h, computed by eigendecomposition of the
/// generator. The result is unitary to kAlgebraTol. Throws std::invalid_argument
/// if h is not Hermitian to kHermitianTol.
Operator expm_hermitian(const Operator& h, double scale);

}  // namespace spinsim
