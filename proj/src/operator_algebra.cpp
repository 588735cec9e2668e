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

#include "spinsim/operator_algebra.hpp"

#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace spinsim {

bool is_hermitian(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_unitary(const Operator& a, double tol) {
  if (a.rows() != a.cols()) return false;
  Operator g = a.adjoint() * a;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff() <= tol;
}

double max_abs_diff(const Operator& a, const Operator& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

Complex trace_inner(const Operator& a, const Operator& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace_inner: dimension mismatch");
  }
  return (a.adjoint() * b).trace();
}

Operator expm_hermitian(const Operator& h, double scale) {
  if (!is_hermitian(h, kHermitianTol)) {
    throw std::invalid_argument("expm_hermitian: generator is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Operator> es(h);
  const auto& w = es.eigenvalues();
  const auto& v = es.eigenvectors();
  Eigen::VectorXcd ph(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    ph(i) = std::exp(Complex(0.0, scale * w(i)));
  }
  return v * ph.asDiagonal() * v.adjoint();
}

}  // namespace spinsim
