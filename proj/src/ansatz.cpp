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

#include "qgm/ansatz.hpp"

#include <stdexcept>

#include "qgm/gates.hpp"

namespace qgm {

std::string to_string(InputKind kind) {
    return kind == InputKind::Zero ? "zero" : "plus";
}

InputKind input_kind_from_string(const std::string& name) {
    if (name == "zero") return InputKind::Zero;
    if (name == "plus") return InputKind::Plus;
    throw std::invalid_argument("unknown input kind '" + name +
                                "' (expected zero or plus)");
}

int LayeredAnsatz::params_per_layer() const {
    return n_qubits + 2 * static_cast<int>(entangler_pairs.size());
}

int LayeredAnsatz::parameter_count() const {
    return n_layers * params_per_layer();
}

void LayeredAnsatz::validate() const {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("ansatz: n_qubits out of range");
    }
    if (n_layers < 1) {
        throw std::invalid_argument("ansatz: n_layers must be >= 1");
    }
    for (const auto& [control, target] : entangler_pairs) {
        if (control < 0 || control >= n_qubits || target < 0 ||
            target >= n_qubits) {
            throw std::invalid_argument("ansatz: entangler qubit out of range");
        }
        if (control == target) {
            throw std::invalid_argument(
                "ansatz: entangler control and target must differ");
        }
    }
}

LayeredAnsatz build_ansatz(int n_qubits, int n_layers, InputKind input) {
    LayeredAnsatz ansatz;
    ansatz.n_qubits = n_qubits;
    ansatz.n_layers = n_layers;
    ansatz.input_kind = input;
    for (int q = 0; q + 1 < n_qubits; ++q) ansatz.entangler_pairs.emplace_back(q, q + 1);
    ansatz.validate();
    return ansatz;
}

ParamKind param_kind(const LayeredAnsatz& ansatz, int index) {
    if (index < 0 || index >= ansatz.parameter_count()) {
        throw std::out_of_range("param_kind: index out of range");
    }
    const int within = index % ansatz.params_per_layer();
    if (within < ansatz.n_qubits) return ParamKind::SingleQubitTheta;
    return (within - ansatz.n_qubits) % 2 == 0 ? ParamKind::ControlledPsi
                                               : ParamKind::ControlledLambda;
}

StateVector input_state(const LayeredAnsatz& ansatz) {
    ansatz.validate();
    return ansatz.input_kind == InputKind::Zero ? zero_state(ansatz.n_qubits)
                                                : plus_state(ansatz.n_qubits);
}

void apply_circuit(const LayeredAnsatz& ansatz, const ParamVector& params,
                   StateVector& state) {
    ansatz.validate();
    if (static_cast<int>(params.size()) != ansatz.parameter_count()) {
        throw std::invalid_argument(
            "apply_circuit: expected " +
            std::to_string(ansatz.parameter_count()) + " parameters, got " +
            std::to_string(params.size()));
    }
    if (state.n_qubits() != ansatz.n_qubits) {
        throw std::invalid_argument("apply_circuit: state width mismatch");
    }
    std::size_t p = 0;
    for (int layer = 0; layer < ansatz.n_layers; ++layer) {
        for (int q = 0; q < ansatz.n_qubits; ++q) {
            state.apply_1q(ry(params[p++]), q);
        }
        for (const auto& [control, target] : ansatz.entangler_pairs) {
            const double psi = params[p++];
            const double lambda = params[p++];
            state.apply_2q(controlled_rot(psi, lambda), control, target);
        }
    }
}

StateVector evaluate(const LayeredAnsatz& ansatz, const ParamVector& params) {
    StateVector state = input_state(ansatz);
    apply_circuit(ansatz, params, state);
    return state;
}

}  // namespace qgm
