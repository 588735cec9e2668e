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

#include <doctest.h>

#include <numbers>

#include "spinsim/operator_algebra.hpp"
#include "spinsim/spin_ops.hpp"
#include "test_helpers.hpp"

using namespace spinsim;
namespace th = spinsim::test;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE("spin core") {

TEST_CASE("single-spin pauli matrices") {
  Operator z = pauli(Axis::Z, 1, 1);
  CHECK(z(0, 0) == Complex(1, 0));
  CHECK(z(1, 1) == Complex(-1, 0));
  CHECK(z(0, 1) == Complex(0, 0));

  // bit flip on the LSB spin of two
  Operator x2 = pauli(Axis::X, 2, 2);
  int from = basis_index(std::array{0, 0});
  int to = basis_index(std::array{0, 1});
  CHECK(x2(to, from) == Complex(1, 0));
  CHECK(x2(from, from) == Complex(0, 0));
}

TEST_CASE("embedded paulis match the kronecker brute force") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
        CHECK(max_abs_diff(pauli(ax, k, n), th::pauli_bruteforce(ax, k, n)) ==
              0.0);
      }
    }
  }
}

TEST_CASE("pauli y on the middle of three spins") {
  Operator y = pauli(Axis::Y, 2, 3);
  // nonzero entries only between indices differing in the value-2 bit
  for (int r = 0; r < 8; ++r) {
    for (int c = 0; c < 8; ++c) {
      if ((r ^ c) != 2) CHECK(y(r, c) == Complex(0, 0));
    }
  }
  CHECK(y(2, 0) == Complex(0, 1));
  CHECK(y(0, 2) == Complex(0, -1));
}

TEST_CASE("pauli ops are hermitian, unitary, traceless and orthogonal") {
  for (int n = 1; n <= 4; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
        Operator p = pauli(ax, k, n);
        CHECK(is_hermitian(p, 1e-15));
        CHECK(is_unitary(p, 1e-12));
        CHECK(std::abs(p.trace()) <= 1e-15);
      }
    }
    // distinct single-spin pauli embeddings are trace-orthogonal
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
          for (Axis b : {Axis::X, Axis::Y, Axis::Z}) {
            if (k == l && a == b) continue;
            CHECK(std::abs(trace_inner(pauli(a, k, n), pauli(b, l, n))) <=
                  1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("angular momentum is half a pauli") {
  Operator iz = angular_momentum(Axis::Z, 1, 1);
  CHECK(iz(0, 0) == Complex(0.5, 0));
  CHECK(iz(1, 1) == Complex(-0.5, 0));
  CHECK(max_abs_diff(2.0 * angular_momentum(Axis::X, 1, 1),
                     pauli(Axis::X, 1, 1)) == 0.0);
  Operator iz23 = angular_momentum(Axis::Z, 2, 3);
  CHECK(std::abs(trace_inner(iz23, iz23) - Complex(2, 0)) <= 1e-15);
}

TEST_CASE("trace inner product") {
  Operator i8 = identity_op(3);
  CHECK(std::abs(trace_inner(i8, i8) - Complex(8, 0)) <= 1e-15);
  CHECK(std::abs(trace_inner(pauli(Axis::X, 1, 3), pauli(Axis::Y, 1, 3))) <=
        1e-15);
  CHECK(std::abs(trace_inner(pauli(Axis::X, 2, 3), pauli(Axis::X, 2, 3)) -
                 Complex(8, 0)) <= 1e-15);
  CHECK_THROWS_AS(trace_inner(identity_op(2), identity_op(3)),
                  std::invalid_argument);
}

TEST_CASE("expm_hermitian basics") {
  CHECK(max_abs_diff(expm_hermitian(pauli(Axis::X, 1, 1), 0.0),
                     identity_op(1)) <= 1e-15);

  // exp(i pi/2 sigma_y) = i sigma_y = [[0,1],[-1,0]]
  Operator u = expm_hermitian(pauli(Axis::Y, 1, 1), kPi / 2);
  Operator expected(2, 2);
  expected << 0, 1, -1, 0;
  CHECK(max_abs_diff(u, expected) <= 1e-12);

  CHECK_THROWS_AS(expm_hermitian(pauli(Axis::X, 1, 1) * Complex(0, 1), 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(pauli(Axis::X, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(pauli(Axis::X, 1, 11), std::invalid_argument);
}

TEST_CASE("conditional-pi generator reproduces the reference matrix") {
  Operator gen = 0.25 * pauli(Axis::Y, 2, 3) *
                 (identity_op(3) - pauli(Axis::Z, 3, 3));
  Operator u = expm_hermitian(gen, kPi);
  CHECK(max_abs_diff(u, th::expected_transition_cnot(+1)) <= 1e-12);

  // Closed-form Euler route: identity off the conditioned manifold and
  // i sigma_y on it. Both routes must agree.
  Operator proj = 0.5 * (identity_op(3) - pauli(Axis::Z, 3, 3));
  Operator closed = identity_op(3) - proj +
                    Complex(0, 1) * pauli(Axis::Y, 2, 3) * proj;
  CHECK(max_abs_diff(u, closed) <= 1e-12);
}

TEST_CASE("exponential group properties") {
  Operator h = pauli(Axis::Y, 2, 3) + 0.3 * pauli(Axis::Z, 1, 3);
  Operator u1 = expm_hermitian(h, 0.7);
  CHECK(is_unitary(u1, 1e-12));
  CHECK(max_abs_diff(expm_hermitian(h, -0.7), u1.adjoint()) <= 1e-12);
  CHECK(max_abs_diff(u1 * expm_hermitian(h, 0.4), expm_hermitian(h, 1.1)) <=
        1e-12);
}

}  // TEST_SUITE
