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

#include "spinsim/spin_system.hpp"

#include <cmath>
#include <stdexcept>

#include "spinsim/spin_ops.hpp"

namespace spinsim {

SpinSystem::SpinSystem(int n_spins, std::vector<double> offsets,
                       Eigen::MatrixXd j, std::vector<std::string> spin_labels,
                       double ref_mhz)
    : n(n_spins),
      offsets_hz(std::move(offsets)),
      j_hz(std::move(j)),
      labels(std::move(spin_labels)),
      reference_mhz(ref_mhz) {
  if (n < 1 || n > kMaxSpins) {
    throw std::invalid_argument("SpinSystem: n must be in [1, 10]");
  }
  if (static_cast<int>(offsets_hz.size()) != n) {
    throw std::invalid_argument("SpinSystem: offsets size must equal n");
  }
  for (double o : offsets_hz) {
    if (!std::isfinite(o)) {
      throw std::invalid_argument("SpinSystem: offsets must be finite");
    }
  }
  if (j_hz.rows() != n || j_hz.cols() != n) {
    throw std::invalid_argument("SpinSystem: J matrix must be n x n");
  }
  for (int k = 0; k < n; ++k) {
    if (j_hz(k, k) != 0.0) {
      throw std::invalid_argument("SpinSystem: J diagonal must be zero");
    }
    for (int l = 0; l < n; ++l) {
      if (!std::isfinite(j_hz(k, l))) {
        throw std::invalid_argument("SpinSystem: J entries must be finite");
      }
      if (j_hz(k, l) != j_hz(l, k)) {
        throw std::invalid_argument("SpinSystem: J matrix must be symmetric");
      }
    }
  }
  if (labels.empty()) {
    labels.reserve(static_cast<size_t>(n));
    for (int k = 1; k <= n; ++k) labels.push_back("S" + std::to_string(k));
  }
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("SpinSystem: labels size must equal n");
  }
}

}  // namespace spinsim
