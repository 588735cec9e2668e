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
#include <string_view>
#include <vector>

#include "spinsim/operator_algebra.hpp"

namespace spinsim {

/// Per-spin factor of a product-operator basis element: identity or one of the
/// angular-momentum components.
enum class TermAxis : unsigned char { E, X, Y, Z };

// Coefficients whose magnitude falls below this are dropped from reports.
inline constexpr double kCoefficientCutoff = 1e-12;

/// One product-operator basis element with a real coefficient. The operator it
/// denotes is prefactor * prod_k I^k_{axes[k]} with the conventional prefactor
/// 2^(q-1), q the number of non-identity factors. With this normalization every
/// basis element with q >= 1 has trace_inner(B, B) = 2^(n-2) and terms such as
/// 2I1zI3x or 4I1xI2zI3z are literally basis elements.
struct ProductTerm {
  std::vector<TermAxis> axes;  // size n
  double coefficient = 0.0;

  int order() const;        // q = number of non-identity factors
  double prefactor() const; // 2^(q-1)

  /// Canonical label, e.g. "I2z", "2I1zI3x", "4I1xI2zI3z".
  std::string label() const;

  /// Dense matrix of prefactor * prod I (coefficient not included).
  Operator matrix() const;
};

/// A density matrix expressed over the product-operator basis:
/// rho = (identity_part / 2^n) I + sum_t coefficient_t * B_t.
struct Decomposition {
  double identity_part = 0.0;
  std::vector<ProductTerm> terms;  // canonical order, nonzero coefficients
};

/// All 4^n - 1 non-identity basis elements (coefficient-free) in canonical
/// order: by q ascending, then by the tuple of active spin indices, then by
/// axis pattern with x < y < z. Throws if n is outside [1, 10].
std::vector<ProductTerm> product_basis(int n);

/// Expand a Hermitian matrix over the product-operator basis. Coefficient of
/// element B is trace_inner(B, rho) / trace_inner(B, B); identity_part is
/// Tr(rho). Coefficients below `cutoff` are dropped. Throws on non-Hermitian
/// input.
Decomposition decompose(const Operator& rho, double cutoff = kCoefficientCutoff);

/// Exact inverse of decompose.
Operator compose(const Decomposition& d, int n);

/// Parse a canonical term label back into a ProductTerm (coefficient 0).
/// Throws std::invalid_argument on malformed labels, spins out of range, or a
/// prefactor that does not match 2^(q-1).
ProductTerm parse_term_label(std::string_view label, int n);

}  // namespace spinsim
