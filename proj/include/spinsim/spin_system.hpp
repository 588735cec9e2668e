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
#include <vector>

#include <Eigen/Dense>

namespace spinsim {

/// A system of n weakly coupled spin-1/2 nuclei. Chemical-shift offsets are in
/// Hz relative to a declared reference frequency; j_hz is the signed symmetric
/// scalar-coupling matrix in Hz with zero diagonal. Coupling signs are
/// significant and preserved throughout (they decide which multiplet lines are
/// inner vs outer). Immutable after construction.
struct SpinSystem {
  int n = 0;
  std::vector<double> offsets_hz;
  Eigen::MatrixXd j_hz;
  std::vector<std::string> labels;
  double reference_mhz = 0.0;  // metadata only

  SpinSystem(int n_spins, std::vector<double> offsets, Eigen::MatrixXd j,
             std::vector<std::string> spin_labels = {}, double ref_mhz = 0.0);

  int dim() const { return 1 << n; }

  /// Coupling between spins k and l, 1-based.
  double j(int k, int l) const { return j_hz(k - 1, l - 1); }
  double offset(int k) const { return offsets_hz[static_cast<size_t>(k - 1)]; }
};

}  // namespace spinsim
