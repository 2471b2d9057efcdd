// Copyright 2026 The qgm Authors
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

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "qgm/ansatz.hpp"
#include "qgm/gates.hpp"
#include "qgm/rng.hpp"
#include "qgm/statevector.hpp"

namespace qgm::test {

// ---------------------------------------------------------------------------
// Brute-force oracles. These build the full 2^n x 2^n matrix and multiply,
// independent of the strided update path they are used to check.
// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<Complex>>;

/// Dense embedding of a 2x2 gate on `qubit`: entry (i, j) is nonzero only if
/// i and j agree on every other bit, and then equals gate(bit_i, bit_j).
inline Matrix embed_1q(const Gate1Q& gate, int qubit, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t mask = std::size_t{1} << (n_qubits - 1 - qubit);
    Matrix big(dim, std::vector<Complex>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~mask) != (j & ~mask)) continue;
            const int bi = (i & mask) ? 1 : 0;
            const int bj = (j & mask) ? 1 : 0;
            big[i][j] = gate(bi, bj);
        }
    }
    return big;
}

/// Dense embedding of a 4x4 gate on (control, target).
inline Matrix embed_2q(const Gate2Q& gate, int control, int target,
                       int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    const std::size_t mc = std::size_t{1} << (n_qubits - 1 - control);
    const std::size_t mt = std::size_t{1} << (n_qubits - 1 - target);
    Matrix big(dim, std::vector<Complex>(dim, 0.0));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~(mc | mt)) != (j & ~(mc | mt))) continue;
            const int ri = 2 * ((i & mc) ? 1 : 0) + ((i & mt) ? 1 : 0);
            const int rj = 2 * ((j & mc) ? 1 : 0) + ((j & mt) ? 1 : 0);
            big[i][j] = gate(ri, rj);
        }
    }
    return big;
}

inline std::vector<Complex> matvec(const Matrix& m,
                                   const std::vector<Complex>& v) {
    std::vector<Complex> out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    }
    return out;
}

inline std::vector<Complex> amplitudes_of(const StateVector& s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

// ---------------------------------------------------------------------------
// Random ingredients for property tests.
// ---------------------------------------------------------------------------

inline StateVector random_state(int n_qubits, Rng& rng) {
    StateVector state(n_qubits);
    double norm = 0.0;
    std::vector<Complex> amps(state.dim());
    for (auto& a : amps) {
        a = Complex(rng.normal(), rng.normal());
        norm += std::norm(a);
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        state.set_amp(i, amps[i] / norm);
    }
    return state;
}

/// Generic 2x2 unitary from three Euler angles.
inline Gate1Q random_1q_gate(Rng& rng) {
    const Gate1Q a = rz(rng.uniform() * 6.283185307179586);
    const Gate1Q b = ry(rng.uniform() * 6.283185307179586);
    const Gate1Q c = rz(rng.uniform() * 6.283185307179586);
    Gate1Q ab;
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col)
            ab.m[2 * r + col] = a(r, 0) * b(0, col) + a(r, 1) * b(1, col);
    Gate1Q abc;
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col)
            abc.m[2 * r + col] = ab(r, 0) * c(0, col) + ab(r, 1) * c(1, col);
    return abc;
}

inline ParamVector random_params(const LayeredAnsatz& ansatz, Rng& rng,
                                 double scale = 1.0) {
    ParamVector params(static_cast<std::size_t>(ansatz.parameter_count()));
    for (double& p : params) p = rng.normal(0.0, scale);
    return params;
}

inline double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amp(i) - b.amp(i)));
    }
    return worst;
}

/// Distance up to a global phase: min over phase of max |a_i - e^{i phi} b_i|.
inline double phase_invariant_diff(const StateVector& a, const StateVector& b) {
    // Align the phases on the largest amplitude of a.
    std::size_t pivot = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (std::abs(a.amp(i)) > best) {
            best = std::abs(a.amp(i));
            pivot = i;
        }
    }
    if (best == 0.0 || std::abs(b.amp(pivot)) == 0.0) {
        return max_amp_diff(a, b);
    }
    const Complex phase = (a.amp(pivot) / std::abs(a.amp(pivot))) /
                          (b.amp(pivot) / std::abs(b.amp(pivot)));
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amp(i) - phase * b.amp(i)));
    }
    return worst;
}

// 99th-percentile chi-square quantiles by degrees of freedom, for
// goodness-of-fit tests at significance 0.01.
inline double chi2_crit_99(int dof) {
    switch (dof) {
        case 1: return 6.6348966010212145;
        case 2: return 9.21034037197618;
        case 3: return 11.344866730144373;
        case 7: return 18.475306906582357;
        case 15: return 30.57791416689249;
        default: return -1.0;  // unsupported; fail loudly in the caller
    }
}

/// Pearson statistic of observed counts against expected probabilities.
inline double chi2_statistic(const std::vector<double>& expected_probs,
                             const std::vector<std::uint64_t>& observed,
                             std::uint64_t total) {
    double stat = 0.0;
    for (std::size_t i = 0; i < expected_probs.size(); ++i) {
        const double expected = expected_probs[i] * static_cast<double>(total);
        if (expected <= 0.0) continue;
        const double diff = static_cast<double>(observed[i]) - expected;
        stat += diff * diff / expected;
    }
    return stat;
}

}  // namespace qgm::test
