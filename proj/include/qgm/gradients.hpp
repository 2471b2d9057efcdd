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

#include <cstdint>
#include <vector>

#include "qgm/ansatz.hpp"

namespace qgm {

/// Real observable diagonal in the computational basis: values[x] is the
/// value assigned to outcome x. A one-hot vector recovers a single Born
/// probability.
struct DiagonalObservable {
    int n_bits = 0;
    std::vector<double> values;

    static DiagonalObservable one_hot(int n_bits, std::uint64_t index);

    /// Throws std::invalid_argument on a size mismatch or non-finite entry.
    void validate() const;
};

/// <obs> = sum_x p(x) values[x] on the circuit's output state.
double expectation(const LayeredAnsatz& ansatz, const ParamVector& params,
                   const DiagonalObservable& obs);

/// Same, but running the circuit on a caller-supplied input state.
double expectation(const LayeredAnsatz& ansatz, const ParamVector& params,
                   const StateVector& input, const DiagonalObservable& obs);

/// Exact derivative d<obs>/d(params[index]) from shifted circuit evaluations.
///
/// Single-qubit theta parameters use the two-point rule
///   [E(+pi/2) - E(-pi/2)] / 2.
/// Controlled psi/lambda parameters have a generator with eigenvalues
/// {0, +-1/2}, so the expectation carries frequencies 1/2 and 1 in that angle
/// and the two-point rule is not exact for them; they use the four-term rule
///   c+ [E(+pi/2) - E(-pi/2)] - c- [E(+3pi/2) - E(-3pi/2)],
/// with c+- = (sqrt(2) +- 1) / (4 sqrt(2)). Both rules are exact (no
/// truncation error), unlike finite differences.
double parameter_shift_grad(const LayeredAnsatz& ansatz,
                            const ParamVector& params,
                            const DiagonalObservable& obs, int index);

double parameter_shift_grad(const LayeredAnsatz& ansatz,
                            const ParamVector& params, const StateVector& input,
                            const DiagonalObservable& obs, int index);

/// Central difference [E(+h) - E(-h)] / (2h); the test oracle for the shift
/// rules. h must be > 0.
double finite_difference_grad(const LayeredAnsatz& ansatz,
                              const ParamVector& params,
                              const DiagonalObservable& obs, int index,
                              double h);

/// parameter_shift_grad for every parameter, assembled in parameter order.
std::vector<double> grad_vector(const LayeredAnsatz& ansatz,
                                const ParamVector& params,
                                const DiagonalObservable& obs);

std::vector<double> grad_vector(const LayeredAnsatz& ansatz,
                                const ParamVector& params,
                                const StateVector& input,
                                const DiagonalObservable& obs);

}  // namespace qgm
