// Copyright 2026 The ptyq developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Physics of the angular-slit encoding.
 *
 * A photon transmitted through an array of D angular slits of width alpha
 * and period beta = 2*pi/D becomes a D-level system in the slit basis. The
 * conjugate observable is orbital angular momentum (OAM): the slit state
 * |n> expands over OAM modes |l> with amplitude
 *
 *     <l|n> = (alpha/sqrt(2*pi)) * sinc(l*alpha/2) * exp(-i*l*n*beta),
 *
 * so a qudit with slit amplitudes C_n has OAM spectrum
 *
 *     d_l = (alpha/sqrt(2*pi)) * sinc(l*alpha/2) * sum_n C_n e^{-i l n beta}.
 *
 * Fourier-basis states map one-to-one onto OAM modes congruent to their
 * index mod D, which is what lets a projective Fourier measurement be done
 * by postselecting D OAM modes. The single-slit diffraction envelope
 * sinc^2(l*alpha/2) attenuates modes away from l = 0 and is undone in
 * postprocessing by `compensate`.
 */

#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ptyq/errors.hpp"
#include "ptyq/qudit.hpp"
#include "ptyq/types.hpp"

namespace ptyq {

/// D angular slits of width alpha, period beta = 2*pi/D, complex per-slit
/// modulations c_n (|c_n| <= 1) and illumination samples g(n*beta).
class ApertureSpec {
  public:
    /// Validates 0 < alpha < beta and |c_n| <= 1. An empty illumination
    /// list means plane-wave illumination (all ones).
    static ApertureSpec make(std::size_t dim, double alpha, CVec modulations,
                             CVec illumination = {});

    std::size_t dim() const { return modulations_.size(); }
    double alpha() const { return alpha_; }
    double beta() const { return beta_; }
    const CVec &modulations() const { return modulations_; }
    const CVec &illumination() const { return illumination_; }

  private:
    ApertureSpec(double alpha, double beta, CVec mods, CVec illum)
        : alpha_{alpha}, beta_{beta}, modulations_{std::move(mods)},
          illumination_{std::move(illum)} {}

    double alpha_;
    double beta_;
    CVec modulations_;
    CVec illumination_;
};

/// OAM amplitudes d_l over a finite retained window. Modes outside the
/// window are absent, not zero.
class OamSpectrum {
  public:
    OamSpectrum(long long ell_min, long long ell_max,
                std::map<long long, Complex> amplitudes);

    long long ell_min() const { return ell_min_; }
    long long ell_max() const { return ell_max_; }
    const std::map<long long, Complex> &amplitudes() const { return amps_; }
    bool has(long long ell) const { return amps_.count(ell) != 0; }
    Complex amplitude(long long ell) const;
    double power(long long ell) const;

  private:
    long long ell_min_;
    long long ell_max_;
    std::map<long long, Complex> amps_;
};

/// Choice of D OAM modes, one per Fourier-basis state: l(n) = n (mod D),
/// all distinct.
class ModePlan {
  public:
    ModePlan(std::size_t dim, std::vector<long long> assignment);

    std::size_t dim() const { return assignment_.size(); }
    const std::vector<long long> &assignment() const { return assignment_; }
    long long mode(std::size_t n) const { return assignment_[n]; }

  private:
    std::vector<long long> assignment_;
};

/// sin(l*alpha/2)/(l*alpha/2); exactly 1 at l = 0.
double sinc_envelope(long long ell, double alpha);

/// Slit amplitudes C_n = N c_n g(n*beta), normalized. Throws
/// ZeroVectorError for a fully opaque aperture.
QuditState prepare_state(const ApertureSpec &aperture);

/// d_l for every l in [ell_min, ell_max], by the closed form above.
OamSpectrum oam_spectrum(const QuditState &state, const ApertureSpec &aperture,
                         long long ell_min, long long ell_max);

/// Single OAM amplitude of an (not necessarily normalized) slit-basis
/// vector. Shared by `oam_spectrum` and the measurement simulator.
Complex oam_amplitude(const CVec &amps, double alpha, long long ell);

/// OAM amplitude <l|f_n> of a Fourier-basis state. With beta = 2*pi/D the
/// Dirichlet factor sin(D*beta*(n-l)/2)/sin(beta*(n-l)/2) is 0/0 at every
/// congruent l, so this branches on the congruence: the underlying
/// geometric sum equals exactly D there and exactly 0 elsewhere.
Complex phi_ln(long long ell, std::size_t n, std::size_t dim, double alpha);

/// |phi_ln / phi_00|^2: mode probability normalized to the best case.
/// Nonzero iff l = n + x*D; equals sinc^2(l*alpha/2) there.
double a_ln(long long ell, std::size_t n, std::size_t dim, double alpha);

/// The D modes centered on l = 0:
///   odd D:  l(n) = ((n + (D-1)/2) mod D) - (D-1)/2
///   even D: l(n) = ((n + D/2) mod D) - D/2
ModePlan select_modes(std::size_t dim);

/// Divide entry (j, n) by sinc^2(l(n)*alpha/2), undoing the diffraction
/// envelope. Throws EnvelopeZeroError if a selected mode sits on a null.
RealMatrix compensate(const RealMatrix &counts, const ModePlan &plan,
                      double alpha);

/// Peak normalizer for plotted distributions: max_l |d_l|^2 divided by
/// sinc^2(l_max*alpha/2), where l_max attains the maximum.
double peak_normalization(const OamSpectrum &spectrum, double alpha);

/// Central-lobe window half-width ceil(2*pi/alpha); secondary sinc lobes
/// fall outside it.
long long default_window_halfwidth(double alpha);

} // namespace ptyq
