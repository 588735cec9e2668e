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

#include "spinsim/spectrometer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spinsim/fft.hpp"
#include "spinsim/sequence.hpp"

namespace spinsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void check_fid_params(const FidParams& p) {
  if (p.dwell_s <= 0) throw std::invalid_argument("fid: dwell must be > 0");
  if (p.points < 256 || (p.points & (p.points - 1)) != 0) {
    throw std::invalid_argument("fid: points must be a power of two >= 256");
  }
}

double wrap_phase_deg(double deg) {
  while (deg > 180.0) deg -= 360.0;
  while (deg <= -180.0) deg += 360.0;
  return deg;
}

}  // namespace

Hamiltonian hamiltonian(const SpinSystem& sys, CouplingMode mode) {
  Operator h = internal_hamiltonian_hz(sys, 0.0);
  if (mode == CouplingMode::Full) {
    for (int k = 1; k <= sys.n; ++k) {
      for (int l = k + 1; l <= sys.n; ++l) {
        h += sys.j(k, l) *
             (angular_momentum(Axis::X, k, sys.n) *
                  angular_momentum(Axis::X, l, sys.n) +
              angular_momentum(Axis::Y, k, sys.n) *
                  angular_momentum(Axis::Y, l, sys.n));
      }
    }
  }
  return {std::move(h), mode};
}

std::vector<SpectrumLine> transitions(const SpinSystem& sys) {
  std::vector<SpectrumLine> lines;
  const int n = sys.n;
  lines.reserve(static_cast<size_t>(n) << (n - 1));
  for (int k = 1; k <= n; ++k) {
    const int patterns = 1 << (n - 1);
    for (int p = 0; p < patterns; ++p) {
      SpectrumLine line;
      line.flipping_spin = k;
      line.spectator_bits = p;
      line.amplitude = Complex(1.0, 0.0);
      double freq = sys.offset(k);
      int i = 0;
      for (int l = 1; l <= n; ++l) {
        if (l == k) continue;
        const int bit = (p >> (n - 2 - i)) & 1;
        freq += sys.j(k, l) * (bit ? -0.5 : 0.5);
        ++i;
      }
      line.freq_hz = freq;
      lines.push_back(line);
    }
  }
  return lines;
}

std::string spectator_string(int spectator_bits, int n) {
  std::string s;
  for (int i = n - 2; i >= 0; --i) {
    s += ((spectator_bits >> i) & 1) ? '1' : '0';
  }
  return s;
}

std::vector<SpectrumLine> line_amplitudes(const Operator& rho,
                                          const SpinSystem& sys, int spin) {
  if (spin < 1 || spin > sys.n) {
    throw std::invalid_argument("line_amplitudes: spin out of range");
  }
  if (rho.rows() != sys.dim() || rho.cols() != sys.dim()) {
    throw std::invalid_argument("line_amplitudes: dimension mismatch");
  }
  const int n = sys.n;
  const int spin_bit = 1 << (n - spin);
  std::vector<SpectrumLine> lines = transitions(sys);
  std::vector<SpectrumLine> out;
  for (SpectrumLine& line : lines) {
    if (line.flipping_spin != spin) continue;
    // Rebuild the full basis indices from the spectator pattern.
    int idx_up = 0;
    int i = 0;
    for (int l = 1; l <= n; ++l) {
      if (l == spin) continue;
      const int bit = (line.spectator_bits >> (n - 2 - i)) & 1;
      if (bit) idx_up |= 1 << (n - l);
      ++i;
    }
    const int idx_down = idx_up | spin_bit;
    line.amplitude = rho(idx_up, idx_down);
    line.phase_deg = wrap_phase_deg(std::arg(line.amplitude) * 180.0 /
                                    std::numbers::pi);
    out.push_back(line);
  }
  return out;
}

FidParams default_acquisition(const SpinSystem& sys, int spin) {
  if (spin < 1 || spin > sys.n) {
    throw std::invalid_argument("default_acquisition: spin out of range");
  }
  double coupling_span = 0.0;
  for (int l = 1; l <= sys.n; ++l) {
    if (l != spin) coupling_span += std::abs(sys.j(spin, l));
  }
  // Cover the multiplet with >= 20% margin plus a fixed floor.
  const double halfwidth = 1.2 * (coupling_span / 2.0) + 10.0;
  FidParams p;
  p.frame_offset_hz = sys.offset(spin);
  p.dwell_s = 1.0 / (2.0 * halfwidth);
  p.points = 8192;
  p.line_broadening_hz = 0.2;
  p.observe_spins = {spin};
  return p;
}

std::vector<Complex> fid(const Operator& rho, const Hamiltonian& h,
                         const SpinSystem& sys, const FidParams& params) {
  check_fid_params(params);
  if (rho.rows() != h.op_hz.rows() || rho.rows() != sys.dim()) {
    throw std::invalid_argument("fid: dimension mismatch");
  }
  const int dim = sys.dim();
  Operator detect = Operator::Zero(dim, dim);
  for (int k : params.observe_spins) {
    if (k < 1 || k > sys.n) {
      throw std::invalid_argument("fid: observed spin out of range");
    }
    detect += pauli(Axis::X, k, sys.n) * 0.5 -
              Complex(0, 0.5) * pauli(Axis::Y, k, sys.n);
  }

  const Operator h_frame =
      h.op_hz - params.frame_offset_hz * total_angular_momentum_z(sys.n);

  Eigen::VectorXd evals;
  Operator rho_e, detect_e;
  if (h.mode == CouplingMode::Weak) {
    // Weak-coupling H is diagonal in the computational basis.
    evals = h_frame.diagonal().real();
    rho_e = rho;
    detect_e = detect;
  } else {
    Eigen::SelfAdjointEigenSolver<Operator> es(h_frame);
    evals = es.eigenvalues();
    const Operator& v = es.eigenvectors();
    rho_e = v.adjoint() * rho * v;
    detect_e = v.adjoint() * detect * v;
  }

  // s(t) = sum_ab rho_ab detect_ba exp(-2 pi i (E_a - E_b) t)
  struct Term {
    Complex weight;
    double freq;
  };
  std::vector<Term> terms;
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) {
      const Complex w = rho_e(a, b) * detect_e(b, a);
      if (std::abs(w) > 1e-18) {
        terms.push_back({w, evals(a) - evals(b)});
      }
    }
  }

  std::vector<Complex> series(static_cast<size_t>(params.points));
  for (int j = 0; j < params.points; ++j) {
    const double t = j * params.dwell_s;
    Complex s(0, 0);
    for (const Term& term : terms) {
      s += term.weight * std::exp(Complex(0.0, -kTwoPi * term.freq * t));
    }
    series[static_cast<size_t>(j)] =
        s * std::exp(-std::numbers::pi * params.line_broadening_hz * t);
  }
  return series;
}

std::vector<SpectrumPoint> spectrum(const std::vector<Complex>& series,
                                    const FidParams& params) {
  check_fid_params(params);
  const int npts = static_cast<int>(series.size());
  if (npts != params.points) {
    throw std::invalid_argument("spectrum: series length != params.points");
  }
  std::vector<Complex> data = series;
  fft_radix2(data, +1);
  const double df = 1.0 / (npts * params.dwell_s);
  std::vector<SpectrumPoint> out(static_cast<size_t>(npts));
  for (int i = 0; i < npts; ++i) {
    const int m = i - npts / 2;  // signed bin
    const int src = (m + npts) % npts;
    out[static_cast<size_t>(i)].freq_hz = params.frame_offset_hz + m * df;
    out[static_cast<size_t>(i)].value =
        params.dwell_s * data[static_cast<size_t>(src)];
  }
  return out;
}

std::vector<SpectrumLine> peaks(const std::vector<SpectrumPoint>& spec,
                                double min_amplitude_fraction,
                                double phase_correction_deg,
                                const std::vector<SpectrumLine>& reference,
                                int n) {
  if (min_amplitude_fraction <= 0 || min_amplitude_fraction >= 1) {
    throw std::invalid_argument("peaks: fraction must be in (0, 1)");
  }
  double gmax = 0.0;
  for (const SpectrumPoint& p : spec) gmax = std::max(gmax, std::abs(p.value));
  if (gmax == 0.0) return {};

  double min_gap = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < reference.size(); ++i) {
    for (size_t j = i + 1; j < reference.size(); ++j) {
      min_gap = std::min(
          min_gap, std::abs(reference[i].freq_hz - reference[j].freq_hz));
    }
  }
  const double assign_radius = min_gap / 2.0;
  const Complex corr =
      std::exp(Complex(0.0, phase_correction_deg * std::numbers::pi / 180.0));

  std::vector<SpectrumLine> out;
  for (size_t i = 1; i + 1 < spec.size(); ++i) {
    const double mag = std::abs(spec[i].value);
    if (mag <= std::abs(spec[i - 1].value) || mag < std::abs(spec[i + 1].value))
      continue;
    if (mag < min_amplitude_fraction * gmax) continue;
    SpectrumLine line;
    line.freq_hz = spec[i].freq_hz;
    line.amplitude = spec[i].value * corr;
    line.phase_deg = wrap_phase_deg(std::arg(line.amplitude) * 180.0 /
                                    std::numbers::pi);
    line.assigned = false;
    line.flipping_spin = 0;
    // nearest reference line, flagged instead of guessed on ties
    double best = std::numeric_limits<double>::infinity();
    double second = best;
    const SpectrumLine* match = nullptr;
    for (const SpectrumLine& ref : reference) {
      const double d = std::abs(ref.freq_hz - line.freq_hz);
      if (d < best) {
        second = best;
        best = d;
        match = &ref;
      } else if (d < second) {
        second = d;
      }
    }
    if (match != nullptr && best <= assign_radius) {
      if (second - best <= 1e-9) {
        line.ambiguous = true;
      } else {
        line.assigned = true;
        line.flipping_spin = match->flipping_spin;
        line.spectator_bits = match->spectator_bits;
      }
    }
    out.push_back(line);
  }
  (void)n;
  return out;
}

Operator readout_pulse(const Operator& rho, const std::vector<int>& spins,
                       double angle_rad, Axis axis, int n) {
  Operator u = identity_op(n);
  for (int k : spins) {
    if (k < 1 || k > n) {
      throw std::invalid_argument("readout_pulse: spin out of range");
    }
    u = expm_hermitian(pauli(axis, k, n), -0.5 * angle_rad) * u;
  }
  return u * rho * u.adjoint();
}

void write_spectrum_csv(std::ostream& out,
                        const std::vector<SpectrumPoint>& spec) {
  out << "freq_hz,re,im,magnitude,phase_deg\n";
  for (const SpectrumPoint& p : spec) {
    const double mag = std::abs(p.value);
    const double ph =
        wrap_phase_deg(std::arg(p.value) * 180.0 / std::numbers::pi);
    out << fmt(p.freq_hz) << ',' << fmt(p.value.real()) << ','
        << fmt(p.value.imag()) << ',' << fmt(mag) << ',' << fmt(ph) << '\n';
  }
}

void write_peaks_csv(std::ostream& out, const std::vector<SpectrumLine>& peaks,
                     int n) {
  out << "spin,freq_hz,magnitude,phase_deg,spectators\n";
  for (const SpectrumLine& p : peaks) {
    out << p.flipping_spin << ',' << fmt(p.freq_hz) << ','
        << fmt(std::abs(p.amplitude)) << ',' << fmt(p.phase_deg) << ',';
    if (p.assigned) {
      out << spectator_string(p.spectator_bits, n);
    } else {
      out << (p.ambiguous ? "?" : "-");
    }
    out << '\n';
  }
}

}  // namespace spinsim
