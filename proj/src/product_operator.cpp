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

#include "spinsim/product_operator.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "spinsim/spin_ops.hpp"

namespace spinsim {

namespace {

char axis_char(TermAxis a) {
  switch (a) {
    case TermAxis::X: return 'x';
    case TermAxis::Y: return 'y';
    case TermAxis::Z: return 'z';
    default: return 'e';
  }
}

// Each basis element has exactly one nonzero entry per row. For row r the
// column is r xor the x/y flip mask and the value is the product of the
// per-spin factors times the prefactor.
struct SparseRow {
  int col;
  Complex value;
};

SparseRow term_row(const std::vector<TermAxis>& axes, double prefactor, int r) {
  const int n = static_cast<int>(axes.size());
  int col = r;
  Complex v(prefactor, 0.0);
  for (int k = 1; k <= n; ++k) {
    const int bit = 1 << (n - k);
    const bool set = (r & bit) != 0;
    switch (axes[static_cast<size_t>(k - 1)]) {
      case TermAxis::E:
        break;
      case TermAxis::X:
        col ^= bit;
        v *= 0.5;
        break;
      case TermAxis::Y:
        col ^= bit;
        v *= set ? Complex(0, 0.5) : Complex(0, -0.5);
        break;
      case TermAxis::Z:
        v *= set ? -0.5 : 0.5;
        break;
    }
  }
  return {col, v};
}

void append_axis_patterns(int n, const std::vector<int>& spins,
                          std::vector<ProductTerm>& out) {
  const int q = static_cast<int>(spins.size());
  const TermAxis choices[3] = {TermAxis::X, TermAxis::Y, TermAxis::Z};
  std::vector<int> odo(static_cast<size_t>(q), 0);
  while (true) {
    ProductTerm t;
    t.axes.assign(static_cast<size_t>(n), TermAxis::E);
    for (int i = 0; i < q; ++i) {
      t.axes[static_cast<size_t>(spins[static_cast<size_t>(i)] - 1)] =
          choices[odo[static_cast<size_t>(i)]];
    }
    out.push_back(std::move(t));
    int i = q - 1;
    while (i >= 0 && odo[static_cast<size_t>(i)] == 2) {
      odo[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++odo[static_cast<size_t>(i)];
  }
}

void enumerate_spin_subsets(int n, int q, int first, std::vector<int>& cur,
                            std::vector<ProductTerm>& out) {
  if (static_cast<int>(cur.size()) == q) {
    append_axis_patterns(n, cur, out);
    return;
  }
  for (int k = first; k <= n; ++k) {
    cur.push_back(k);
    enumerate_spin_subsets(n, q, k + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

int ProductTerm::order() const {
  int q = 0;
  for (TermAxis a : axes) {
    if (a != TermAxis::E) ++q;
  }
  return q;
}

double ProductTerm::prefactor() const {
  return std::ldexp(1.0, order() - 1);
}

std::string ProductTerm::label() const {
  const int q = order();
  std::string s;
  if (q >= 2) s = std::to_string(1 << (q - 1));
  for (size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] == TermAxis::E) continue;
    s += 'I';
    s += std::to_string(i + 1);
    s += axis_char(axes[i]);
  }
  return s;
}

Operator ProductTerm::matrix() const {
  const int n = static_cast<int>(axes.size());
  const int dim = 1 << n;
  const double pf = prefactor();
  Operator m = Operator::Zero(dim, dim);
  for (int r = 0; r < dim; ++r) {
    SparseRow sr = term_row(axes, pf, r);
    m(r, sr.col) = sr.value;
  }
  return m;
}

std::vector<ProductTerm> product_basis(int n) {
  if (n < 1 || n > kMaxSpins) {
    throw std::invalid_argument("product_basis: n out of range [1, 10]");
  }
  std::vector<ProductTerm> out;
  out.reserve((1u << (2 * n)) - 1);
  std::vector<int> cur;
  for (int q = 1; q <= n; ++q) enumerate_spin_subsets(n, q, 1, cur, out);
  return out;
}

Decomposition decompose(const Operator& rho, double cutoff) {
  const int dim = static_cast<int>(rho.rows());
  int n = 0;
  while ((1 << n) < dim) ++n;
  if ((1 << n) != dim || rho.cols() != dim) {
    throw std::invalid_argument("decompose: dimension is not 2^n");
  }
  if (!is_hermitian(rho, kHermitianTol)) {
    throw std::invalid_argument("decompose: input is not Hermitian");
  }
  Decomposition d;
  d.identity_part = rho.trace().real();
  const double norm = std::ldexp(1.0, n - 2);  // trace_inner(B, B)
  for (ProductTerm& t : product_basis(n)) {
    const double pf = t.prefactor();
    Complex acc(0, 0);
    for (int r = 0; r < dim; ++r) {
      SparseRow sr = term_row(t.axes, pf, r);
      acc += std::conj(sr.value) * rho(r, sr.col);
    }
    const double c = acc.real() / norm;
    if (std::abs(c) >= cutoff) {
      t.coefficient = c;
      d.terms.push_back(std::move(t));
    }
  }
  return d;
}

Operator compose(const Decomposition& d, int n) {
  const int dim = 1 << n;
  Operator rho = (d.identity_part / dim) * Operator::Identity(dim, dim);
  for (const ProductTerm& t : d.terms) {
    if (static_cast<int>(t.axes.size()) != n) {
      throw std::invalid_argument("compose: term arity does not match n");
    }
    const double pf = t.prefactor();
    for (int r = 0; r < dim; ++r) {
      SparseRow sr = term_row(t.axes, pf, r);
      rho(r, sr.col) += t.coefficient * sr.value;
    }
  }
  return rho;
}

ProductTerm parse_term_label(std::string_view label, int n) {
  size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("bad term label '" + std::string(label) +
                                "': " + why);
  };
  long pref = 1;
  if (pos < label.size() && std::isdigit(static_cast<unsigned char>(label[pos]))) {
    pref = 0;
    while (pos < label.size() &&
           std::isdigit(static_cast<unsigned char>(label[pos]))) {
      pref = pref * 10 + (label[pos] - '0');
      ++pos;
    }
  }
  ProductTerm t;
  t.axes.assign(static_cast<size_t>(n), TermAxis::E);
  int q = 0;
  while (pos < label.size()) {
    if (label[pos] != 'I') fail("expected factor 'I<spin><axis>'");
    ++pos;
    int spin = 0;
    if (pos >= label.size() || !std::isdigit(static_cast<unsigned char>(label[pos]))) {
      fail("missing spin index");
    }
    while (pos < label.size() &&
           std::isdigit(static_cast<unsigned char>(label[pos]))) {
      spin = spin * 10 + (label[pos] - '0');
      ++pos;
    }
    if (spin < 1 || spin > n) fail("spin index out of range");
    if (pos >= label.size()) fail("missing axis");
    TermAxis ax;
    switch (label[pos]) {
      case 'x': ax = TermAxis::X; break;
      case 'y': ax = TermAxis::Y; break;
      case 'z': ax = TermAxis::Z; break;
      default: fail("axis must be x, y or z"); ax = TermAxis::X;
    }
    ++pos;
    if (t.axes[static_cast<size_t>(spin - 1)] != TermAxis::E) {
      fail("duplicate spin factor");
    }
    t.axes[static_cast<size_t>(spin - 1)] = ax;
    ++q;
  }
  if (q == 0) fail("no factors");
  if (pref != (1L << (q - 1))) fail("prefactor must be 2^(q-1)");
  return t;
}

}  // namespace spinsim
