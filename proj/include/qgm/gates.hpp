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

#include <array>
#include <complex>

namespace qgm {

using Complex = std::complex<double>;

/// Single-qubit unitary, row-major 2x2.
struct Gate1Q {
    std::array<Complex, 4> m{};

    Complex operator()(int row, int col) const { return m[2 * row + col]; }
    Gate1Q dagger() const;

    friend bool operator==(const Gate1Q&, const Gate1Q&) = default;
};

/// Two-qubit unitary, row-major 4x4. Rows and columns are ordered by the
/// (control, target) bit pair: |00>, |01>, |10>, |11>.
struct Gate2Q {
    std::array<Complex, 16> m{};

    Complex operator()(int row, int col) const { return m[4 * row + col]; }
    Gate2Q dagger() const;

    friend bool operator==(const Gate2Q&, const Gate2Q&) = default;
};

Gate1Q identity_1q();
Gate1Q hadamard();
Gate1Q pauli_x();
Gate1Q pauli_y();
Gate1Q pauli_z();

/// Rotation exp(-i theta/2 sigma_a) about axis a. Throws std::invalid_argument
/// on a non-finite angle.
Gate1Q rx(double theta);
Gate1Q ry(double theta);
Gate1Q rz(double theta);

Gate2Q identity_2q();
Gate2Q cnot();

/// Controlled rotation: identity on the control=0 subspace, RY(psi)*RZ(lambda)
/// on the target when the control is 1.
Gate2Q controlled_rot(double psi, double lambda);

/// Max-entry deviation of U†U from the identity.
double unitarity_error(const Gate1Q& g);
double unitarity_error(const Gate2Q& g);

bool is_unitary(const Gate1Q& g, double tol = 1e-12);
bool is_unitary(const Gate2Q& g, double tol = 1e-12);

}  // namespace qgm
