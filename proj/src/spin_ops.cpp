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

#include "spinsim/spin_ops.hpp"

#include <stdexcept>

namespace spinsim {

namespace {

void check_spin_range(int k, int n) {
  if (n < 1 || n > kMaxSpins) {
    throw std::invalid_argument("spin count out of range [1, 10]");
  }
  if (k < 1 || k > n) {
    throw std::invalid_argument("spin index out of range [1, n]");
  }
}

}  // namespace

int basis_index(std::span<const int> bits) {
  int idx = 0;
  for (int b : bits) idx = (idx << 1) | (b & 1);
  return idx;
}

Operator identity_op(int n) {
  if (n < 1 || n > kMaxSpins) {
    throw std::invalid_argument("spin count out of range [1, 10]");
  }
  return Operator::Identity(1 << n, 1 << n);
}

Operator pauli(Axis axis, int k, int n) {
  check_spin_range(k, n);
  const int dim = 1 << n;
  const int bit = 1 << (n - k);  // spin 1 is the most significant bit
  Operator m = Operator::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    const bool set = (c & bit) != 0;
    switch (axis) {
      case Axis::X:
        m(c ^ bit, c) = 1.0;
        break;
      case Axis::Y:
        // <1|sigma_y|0> = +i, <0|sigma_y|1> = -i
        m(c ^ bit, c) = set ? Complex(0, -1) : Complex(0, 1);
        break;
      case Axis::Z:
        m(c, c) = set ? -1.0 : 1.0;
        break;
    }
  }
  return m;
}

Operator angular_momentum(Axis axis, int k, int n) {
  return 0.5 * pauli(axis, k, n);
}

Operator total_angular_momentum_z(int n) {
  Operator m = Operator::Zero(1 << n, 1 << n);
  for (int k = 1; k <= n; ++k) m += angular_momentum(Axis::Z, k, n);
  return m;
}

}  // namespace spinsim
