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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qgm/statevector.hpp"

namespace qgm {

enum class InputKind { Zero, Plus };

std::string to_string(InputKind kind);
InputKind input_kind_from_string(const std::string& name);

/// Flat vector of gate angles in radians.
///
/// Layout, per layer: first one theta per qubit (the single-qubit RY angles),
/// then (psi, lambda) per entangler pair in pair order.
using ParamVector = std::vector<double>;

enum class ParamKind { SingleQubitTheta, ControlledPsi, ControlledLambda };

/// Layered circuit template. Each layer applies RY(theta_q) to every qubit,
/// then controlled_rot(psi, lambda) to each entangler pair. The same pair
/// list is used by every layer.
struct LayeredAnsatz {
    int n_qubits = 0;
    int n_layers = 0;
    std::vector<std::pair<int, int>> entangler_pairs;
    InputKind input_kind = InputKind::Zero;

    int params_per_layer() const;
    int parameter_count() const;

    /// Throws std::invalid_argument on out-of-range sizes or bad pairs.
    void validate() const;
};

/// Standard template: linear nearest-neighbour entangler chain (q, q+1) for
/// q = 0..n-2 (empty for a single qubit). Throws std::invalid_argument unless
/// 1 <= n_qubits <= kMaxQubits and n_layers >= 1.
LayeredAnsatz build_ansatz(int n_qubits, int n_layers,
                           InputKind input = InputKind::Zero);

/// Which rotation angle parameter `index` feeds.
ParamKind param_kind(const LayeredAnsatz& ansatz, int index);

/// The ansatz's input product state (|0...0> or |+...+>).
StateVector input_state(const LayeredAnsatz& ansatz);

/// Apply the parameterized gate sequence to an existing state in place.
/// Throws std::invalid_argument on a parameter-count or width mismatch.
void apply_circuit(const LayeredAnsatz& ansatz, const ParamVector& params,
                   StateVector& state);

/// Run the circuit on its input state. Pure: identical inputs give
/// bitwise-identical outputs.
StateVector evaluate(const LayeredAnsatz& ansatz, const ParamVector& params);

}  // namespace qgm
