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

#include <iosfwd>
#include <vector>

#include "spinsim/spin_ops.hpp"
#include "spinsim/spin_system.hpp"

namespace spinsim {

enum class CouplingMode { Weak, Full };

/// Internal Hamiltonian in frequency units (H/h, Hz). Weak mode keeps only the
/// secular zz couplings, H/h = sum nu_k I_z^k + sum_{k<l} J_kl I_z^k I_z^l,
/// so that the splitting between lines whose spectators differ in one spin is
/// exactly J_kl; it is diagonal in the computational basis. Full mode adds the
/// flip-flop terms J_kl (I_x^k I_x^l + I_y^k I_y^l).
struct Hamiltonian {
  Operator op_hz;
  CouplingMode mode = CouplingMode::Weak;
};

Hamiltonian hamiltonian(const SpinSystem& sys,
                        CouplingMode mode = CouplingMode::Weak);

/// One resolved NMR line. spectator_bits holds the computational-basis bits of
/// the non-flipping spins in ascending spin order, most significant first
/// (bit 0 value = |0> = m up). For unassigned detected peaks flipping_spin is 0.
struct SpectrumLine {
  double freq_hz = 0.0;
  Complex amplitude{0.0, 0.0};
  double phase_deg = 0.0;
  int flipping_spin = 0;
  int spectator_bits = 0;
  bool assigned = true;
  bool ambiguous = false;
};

/// All n * 2^(n-1) single-quantum lines with unit amplitude:
/// freq = nu_k + sum_l J_kl m_l with m_l = +-1/2 per spectator state.
std::vector<SpectrumLine> transitions(const SpinSystem& sys);

/// Spectator bit pattern rendered as e.g. "01" (ascending spin order).
std::string spectator_string(int spectator_bits, int n);

/// Complex amplitude of each single-quantum line of `spin` present in rho:
/// the coherence matrix element <spin up, s| rho |spin down, s> per spectator
/// pattern s. These are the exact per-line weights the FID synthesizes.
std::vector<SpectrumLine> line_amplitudes(const Operator& rho,
                                          const SpinSystem& sys, int spin);

/// Acquisition parameters. points must be a power of two >= 256.
/// frame_offset_hz is the receiver reference: the FID is synthesized in the
/// frame rotating at this offset and the spectrum axis is centred on it.
struct FidParams {
  double dwell_s = 0.0;
  int points = 0;
  double line_broadening_hz = 0.2;
  std::vector<int> observe_spins;
  double frame_offset_hz = 0.0;
};

/// Deterministic per-spin acquisition window: observe only `spin`, frame on
/// its chemical shift, spectral width covering its multiplet with >= 20%
/// margin, 8192 points, 0.2 Hz line broadening.
FidParams default_acquisition(const SpinSystem& sys, int spin);

/// Quadrature-detected free induction decay
///   s(t_j) = Tr[rho(t_j) sum_{k in observe} (I_x^k - i I_y^k)] e^{-pi LB t_j},
/// t_j = j dwell, rho evolved under h in the acquisition frame. The detection
/// operator I^- with this sign places a +nu Hz line at +nu on the spectrum axis.
std::vector<Complex> fid(const Operator& rho, const Hamiltonian& h,
                         const SpinSystem& sys, const FidParams& params);

struct SpectrumPoint {
  double freq_hz = 0.0;
  Complex value{0.0, 0.0};
};

/// Discrete Fourier transform of the FID,
///   S(f_m) = dwell * sum_j s(t_j) exp(+2 pi i f_m t_j),
/// with f_m = frame + m/(N dwell), m = -N/2 .. N/2-1 (axis ascending, spanning
/// frame +- 1/(2 dwell)). The dwell factor makes sum |S|^2 df = dwell sum |s|^2
/// (Parseval-consistent normalization).
std::vector<SpectrumPoint> spectrum(const std::vector<Complex>& series,
                                    const FidParams& params);

/// Local maxima of |S| above min_amplitude_fraction * max |S|. The recorded
/// value is S * exp(i * phase_correction) and phase_deg its argument in
/// (-180, 180]. Each peak is assigned to the nearest reference line when it
/// lies within half the smallest reference-line gap; equidistant candidates
/// are flagged ambiguous rather than guessed.
std::vector<SpectrumLine> peaks(const std::vector<SpectrumPoint>& spec,
                                double min_amplitude_fraction,
                                double phase_correction_deg,
                                const std::vector<SpectrumLine>& reference,
                                int n);

/// Conjugate rho by simultaneous ideal rotations R_axis(angle) on the listed
/// spins. angle = 0 is a no-op (states can be observed without readout).
Operator readout_pulse(const Operator& rho, const std::vector<int>& spins,
                       double angle_rad, Axis axis, int n);

/// CSV emitters (UTF-8, LF, full-precision decimals).
/// Spectrum header: freq_hz,re,im,magnitude,phase_deg
/// Peaks header:    spin,freq_hz,magnitude,phase_deg,spectators
void write_spectrum_csv(std::ostream& out,
                        const std::vector<SpectrumPoint>& spec);
void write_peaks_csv(std::ostream& out, const std::vector<SpectrumLine>& peaks,
                     int n);

}  // namespace spinsim
