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

#include "qgm/gradients.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgm {

DiagonalObservable DiagonalObservable::one_hot(int n_bits,
                                               std::uint64_t index) {
    DiagonalObservable obs;
    obs.n_bits = n_bits;
    obs.values.assign(std::size_t{1} << n_bits, 0.0);
    obs.values.at(index) = 1.0;
    return obs;
}

void DiagonalObservable::validate() const {
    if (n_bits < 1 || values.size() != (std::size_t{1} << n_bits)) {
        throw std::invalid_argument(
            "DiagonalObservable: values length must be 2^n_bits");
    }
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument(
                "DiagonalObservable: entries must be finite");
        }
    }
}

double expectation(const LayeredAnsatz& ansatz, const ParamVector& params,
                   const StateVector& input, const DiagonalObservable& obs) {
    obs.validate();
    if (obs.n_bits != ansatz.n_qubits) {
        throw std::invalid_argument("expectation: observable width " +
                                    std::to_string(obs.n_bits) +
                                    " does not match " +
                                    std::to_string(ansatz.n_qubits) +
                                    " qubits");
    }
    StateVector state = input;
    apply_circuit(ansatz, params, state);
    double total = 0.0, comp = 0.0;
    for (std::size_t i = 0; i < state.dim(); ++i) {
        const Complex a = state.amp(i);
        const double x =
            (a.real() * a.real() + a.imag() * a.imag()) * obs.values[i];
        const double y = x - comp;
        const double t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

double expectation(const LayeredAnsatz& ansatz, const ParamVector& params,
                   const DiagonalObservable& obs) {
    return expectation(ansatz, params, input_state(ansatz), obs);
}

namespace {

double shifted_expectation(const LayeredAnsatz& ansatz,
                           const ParamVector& params, const StateVector& input,
                           const DiagonalObservable& obs, int index,
                           double shift) {
    ParamVector shifted = params;
    shifted[static_cast<std::size_t>(index)] += shift;
    return expectation(ansatz, shifted, input, obs);
}

void require_index(const LayeredAnsatz& ansatz, const ParamVector& params,
                   int index) {
    if (static_cast<int>(params.size()) != ansatz.parameter_count()) {
        throw std::invalid_argument("gradient: parameter count mismatch");
    }
    if (index < 0 || index >= ansatz.parameter_count()) {
        throw std::out_of_range("gradient: parameter index out of range");
    }
}

}  // namespace

double parameter_shift_grad(const LayeredAnsatz& ansatz,
                            const ParamVector& params, const StateVector& input,
                            const DiagonalObservable& obs, int index) {
    require_index(ansatz, params, index);
    const double half_pi = std::numbers::pi / 2;
    const auto eval = [&](double shift) {
        return shifted_expectation(ansatz, params, input, obs, index, shift);
    };
    if (param_kind(ansatz, index) == ParamKind::SingleQubitTheta) {
        return (eval(half_pi) - eval(-half_pi)) / 2.0;
    }
    // Controlled-rotation parameter: generator eigenvalues {0, +-1/2}, so the
    // exact rule needs the second shift at 3*pi/2.
    const double c_plus = (std::numbers::sqrt2 + 1.0) / (4.0 * std::numbers::sqrt2);
    const double c_minus = (std::numbers::sqrt2 - 1.0) / (4.0 * std::numbers::sqrt2);
    return c_plus * (eval(half_pi) - eval(-half_pi)) -
           c_minus * (eval(3 * half_pi) - eval(-3 * half_pi));
}

double parameter_shift_grad(const LayeredAnsatz& ansatz,
                            const ParamVector& params,
                            const DiagonalObservable& obs, int index) {
    return parameter_shift_grad(ansatz, params, input_state(ansatz), obs,
                                index);
}

double finite_difference_grad(const LayeredAnsatz& ansatz,
                              const ParamVector& params,
                              const DiagonalObservable& obs, int index,
                              double h) {
    require_index(ansatz, params, index);
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("finite_difference_grad: h must be > 0");
    }
    const StateVector input = input_state(ansatz);
    const double plus =
        shifted_expectation(ansatz, params, input, obs, index, h);
    const double minus =
        shifted_expectation(ansatz, params, input, obs, index, -h);
    return (plus - minus) / (2.0 * h);
}

std::vector<double> grad_vector(const LayeredAnsatz& ansatz,
                                const ParamVector& params,
                                const StateVector& input,
                                const DiagonalObservable& obs) {
    std::vector<double> grad(params.size());
    for (int i = 0; i < static_cast<int>(params.size()); ++i) {
        grad[static_cast<std::size_t>(i)] =
            parameter_shift_grad(ansatz, params, input, obs, i);
    }
    return grad;
}

std::vector<double> grad_vector(const LayeredAnsatz& ansatz,
                                const ParamVector& params,
                                const DiagonalObservable& obs) {
    return grad_vector(ansatz, params, input_state(ansatz), obs);
}

}  // namespace qgm
