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

#include "qgm/gates.hpp"

#include <cmath>
#include <doctest.h>
#include <limits>
#include <numbers>

#include "qgm/rng.hpp"
#include "qgm/statevector.hpp"
#include "test_support.hpp"

using namespace qgm;

namespace {

Gate1Q mul(const Gate1Q& a, const Gate1Q& b) {
    Gate1Q out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out.m[2 * r + c] = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
    return out;
}

double diff(const Gate1Q& a, const Gate1Q& b) {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

double diff(const Gate2Q& a, const Gate2Q& b) {
    double worst = 0.0;
    for (int i = 0; i < 16; ++i)
        worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

}  // namespace

TEST_CASE("fixed gates have their standard matrices") {
    const double s = 1.0 / std::numbers::sqrt2;
    CHECK(hadamard()(0, 0) == Complex(s, 0));
    CHECK(hadamard()(1, 1) == Complex(-s, 0));
    CHECK(diff(mul(hadamard(), hadamard()), identity_1q()) < 1e-15);

    // X swaps basis amplitudes.
    StateVector state = zero_state(1);
    state.apply_1q(pauli_x(), 0);
    CHECK(state.amp(1) == Complex(1.0, 0.0));

    // Z flips the |1> phase.
    state.apply_1q(pauli_z(), 0);
    CHECK(state.amp(1) == Complex(-1.0, 0.0));

    CHECK(pauli_y()(0, 1) == Complex(0.0, -1.0));
}

TEST_CASE("rotations reduce to the identity and to bit flips") {
    CHECK(diff(ry(0.0), identity_1q()) == 0.0);
    CHECK(diff(rx(0.0), identity_1q()) == 0.0);

    StateVector state = zero_state(1);
    state.apply_1q(ry(std::numbers::pi), 0);
    CHECK(test::phase_invariant_diff(state, basis_state(BitString(1, 1))) <
          1e-15);

    CHECK(diff(mul(rx(1.234), rx(-1.234)), identity_1q()) < 1e-12);
}

TEST_CASE("rotations are additive in the angle") {
    Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const double a = rng.normal(0.0, 2.0);
        const double b = rng.normal(0.0, 2.0);
        CHECK(diff(mul(rx(a), rx(b)), rx(a + b)) < 1e-12);
        CHECK(diff(mul(ry(a), ry(b)), ry(a + b)) < 1e-12);
        CHECK(diff(mul(rz(a), rz(b)), rz(a + b)) < 1e-12);
    }
}

TEST_CASE("non-finite angles are rejected") {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(rx(nan), std::invalid_argument);
    CHECK_THROWS_AS(ry(inf), std::invalid_argument);
    CHECK_THROWS_AS(rz(-inf), std::invalid_argument);
    CHECK_THROWS_AS(controlled_rot(nan, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(controlled_rot(0.0, inf), std::invalid_argument);
}

TEST_CASE("cnot acts as the standard controlled flip") {
    StateVector state = basis_state(BitString::from_string("10"));
    state.apply_2q(cnot(), 0, 1);
    CHECK(state.amp(3) == Complex(1.0, 0.0));

    StateVector off = zero_state(2);
    off.apply_2q(cnot(), 0, 1);
    CHECK(off.amp(0) == Complex(1.0, 0.0));

    // Involution.
    Gate2Q sq;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += cnot()(r, k) * cnot()(k, c);
            sq.m[4 * r + c] = acc;
        }
    CHECK(diff(sq, identity_2q()) == 0.0);
}

TEST_CASE("controlled_rot is identity at zero angles") {
    CHECK(diff(controlled_rot(0.0, 0.0), identity_2q()) == 0.0);
}

TEST_CASE("controlled_rot(psi, 0) is a controlled RY") {
    const Gate2Q gate = controlled_rot(std::numbers::pi, 0.0);
    Gate2Q expected = identity_2q();
    const Gate1Q block = ry(std::numbers::pi);
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) expected.m[4 * (2 + r) + 2 + c] = block(r, c);
    CHECK(diff(gate, expected) < 1e-15);

    // Control off leaves the state alone.
    StateVector off = basis_state(BitString::from_string("01"));
    off.apply_2q(controlled_rot(1.3, -0.4), 0, 1);
    CHECK(test::max_amp_diff(off, basis_state(BitString::from_string("01"))) ==
          0.0);
}

TEST_CASE("every constructor output is unitary") {
    CHECK(unitarity_error(hadamard()) < 1e-15);
    CHECK(unitarity_error(pauli_x()) < 1e-15);
    CHECK(unitarity_error(pauli_y()) < 1e-15);
    CHECK(unitarity_error(pauli_z()) < 1e-15);
    CHECK(unitarity_error(cnot()) < 1e-15);
    CHECK(unitarity_error(controlled_rot(0.7, -1.3)) < 1e-12);

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const double a = rng.normal(0.0, 3.0);
        const double b = rng.normal(0.0, 3.0);
        CHECK(is_unitary(rx(a)));
        CHECK(is_unitary(ry(a)));
        CHECK(is_unitary(rz(a)));
        CHECK(is_unitary(controlled_rot(a, b)));
    }
}
