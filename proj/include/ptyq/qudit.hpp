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
 * Pure qudit states, the discrete Fourier transform on them, and the
 * comparison metrics (trace distance, fidelity) used everywhere else.
 */

#pragma once

#include <cstddef>

#include "ptyq/errors.hpp"
#include "ptyq/types.hpp"

namespace ptyq {

/// Tolerance for algebraic identities (unitarity, norms, metric identities).
inline constexpr double kAlgebraicTol = 1e-12;
/// Tolerance for end-to-end pipeline results (final fidelities).
inline constexpr double kEndToEndTol = 1e-6;

/// Normalized vector of D complex amplitudes in the canonical basis.
/// The only way to construct one is `normalize`, so every instance
/// satisfies sum |C_n|^2 = 1 and dim >= 2. Immutable after construction.
class QuditState {
  public:
    std::size_t dim() const { return amps_.size(); }
    const CVec &amplitudes() const { return amps_; }
    const Complex &operator[](std::size_t n) const { return amps_[n]; }

  private:
    explicit QuditState(CVec amps) : amps_{std::move(amps)} {}
    friend QuditState normalize(const CVec &raw);

    CVec amps_;
};

/// D x D unitary with entry (k, n) = exp(2*pi*i*n*k/D)/sqrt(D).
/// Column n is the Fourier-basis state |f_n>.
class FourierMatrix {
  public:
    explicit FourierMatrix(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex entry(std::size_t k, std::size_t n) const {
        return entries_[k * dim_ + n];
    }

    /// F v (maps basis vectors to Fourier-basis columns).
    CVec apply(const CVec &v) const;
    /// F^dagger v; component n of the result is <f_n|v>.
    CVec apply_adjoint(const CVec &v) const;

  private:
    std::size_t dim_;
    CVec entries_;
};

struct ComparisonReport {
    double trace_distance;
    double fidelity;
};

/// Scale a raw vector to unit norm. Throws ZeroVectorError when every
/// entry is zero and DimensionTooSmallError for fewer than two entries.
QuditState normalize(const CVec &raw);

/// Forward transform F|psi> (norm preserving).
QuditState qft(const QuditState &state);
/// Inverse transform; component n of the raw result is <f_n|psi>.
QuditState iqft(const QuditState &state);

/// sqrt(1 - |<a|b>|^2), clamped into [0, 1].
double trace_distance(const QuditState &a, const QuditState &b);
/// |<a|b>|^2, clamped into [0, 1]; invariant under global phases.
double fidelity(const QuditState &a, const QuditState &b);
/// Both metrics from a single inner product.
ComparisonReport compare(const QuditState &a, const QuditState &b);

/// Canonical representative: rotate by a global phase so the first
/// component with magnitude above 1e-10 is real and positive.
QuditState fix_global_phase(const QuditState &state);

/// Basis state |k> of dimension D.
QuditState basis_state(std::size_t dim, std::size_t k);

/// <a|b> with the physics convention (conjugate-linear in `a`).
Complex inner_product(const CVec &a, const CVec &b);
double norm_squared(const CVec &v);

} // namespace ptyq
