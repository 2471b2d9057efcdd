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

#include "qgm/statevector.hpp"

#include <cmath>
#include <doctest.h>
#include <numbers>

#include "test_support.hpp"

using namespace qgm;

TEST_CASE("zero_state puts all weight on |0...0>") {
    const StateVector one = zero_state(1);
    CHECK(one.amp(0) == Complex(1.0, 0.0));
    CHECK(one.amp(1) == Complex(0.0, 0.0));

    const StateVector two = zero_state(2);
    CHECK(two.dim() == 4);
    CHECK(two.amp(0) == Complex(1.0, 0.0));
    for (std::size_t i = 1; i < 4; ++i) CHECK(two.amp(i) == Complex(0.0, 0.0));
}

TEST_CASE("state width is guarded") {
    CHECK_THROWS_AS(zero_state(0), std::invalid_argument);
    CHECK_THROWS_AS(zero_state(25), std::invalid_argument);
    CHECK_THROWS_AS(zero_state(-3), std::invalid_argument);
    CHECK_THROWS_AS(plus_state(25), std::invalid_argument);
    CHECK_NOTHROW(zero_state(1));
}

TEST_CASE("plus_state is the uniform superposition") {
    const StateVector one = plus_state(1);
    CHECK(one.amp(0).real() == doctest::Approx(1.0 / std::numbers::sqrt2));
    CHECK(one.amp(1).real() == doctest::Approx(1.0 / std::numbers::sqrt2));

    const StateVector two = plus_state(2);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(two.amp(i).real() == doctest::Approx(0.5));
        CHECK(two.amp(i).imag() == 0.0);
    }

    CHECK(std::abs(plus_state(10).norm_sq() - 1.0) < 1e-12);
}

TEST_CASE("BitString uses qubit 0 as the most significant bit") {
    const BitString x = BitString::from_string("10");
    CHECK(x.index == 2);
    CHECK(x.bit(0) == 1);
    CHECK(x.bit(1) == 0);
    CHECK(x.str() == "10");

    CHECK(BitString::from_string("111").index == 7);
    CHECK(BitString(3, 5).str() == "101");
    CHECK(BitString::from_bits({0, 1, 1}) == BitString(3, 3));

    CHECK_THROWS_AS(BitString::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(BitString::from_string("012"), std::invalid_argument);
    CHECK_THROWS_AS(BitString(2, 4), std::invalid_argument);
}

TEST_CASE("basis_state places the single amplitude at the index") {
    const StateVector s = basis_state(BitString::from_string("10"));
    CHECK(s.amp(2) == Complex(1.0, 0.0));
    CHECK(s.amp(0) == Complex(0.0, 0.0));

    CHECK(test::max_amp_diff(basis_state(BitString::from_string("0")),
                             zero_state(1)) == 0.0);

    const StateVector seven = basis_state(BitString::from_string("111"));
    CHECK(seven.amp(7) == Complex(1.0, 0.0));
}

TEST_CASE("apply_1q matches the textbook single-qubit actions") {
    StateVector s = zero_state(1);
    s.apply_1q(hadamard(), 0);
    CHECK(s.amp(0).real() == doctest::Approx(1.0 / std::numbers::sqrt2));
    CHECK(s.amp(1).real() == doctest::Approx(1.0 / std::numbers::sqrt2));

    StateVector flip = zero_state(1);
    flip.apply_1q(ry(std::numbers::pi), 0);
    CHECK(std::abs(flip.amp(0)) == doctest::Approx(0.0));
    CHECK(std::abs(flip.amp(1)) == doctest::Approx(1.0));

    // H twice is the identity.
    StateVector round_trip = zero_state(1);
    round_trip.apply_1q(hadamard(), 0);
    round_trip.apply_1q(hadamard(), 0);
    CHECK(test::max_amp_diff(round_trip, zero_state(1)) < 1e-12);

    CHECK_THROWS_AS(s.apply_1q(hadamard(), 1), std::out_of_range);
    CHECK_THROWS_AS(s.apply_1q(hadamard(), -1), std::out_of_range);
}

TEST_CASE("apply_2q builds the Bell state and respects control") {
    StateVector bell = zero_state(2);
    bell.apply_1q(hadamard(), 0);
    bell.apply_2q(cnot(), 0, 1);
    CHECK(bell.amp(0).real() == doctest::Approx(1.0 / std::numbers::sqrt2));
    CHECK(std::abs(bell.amp(1)) == doctest::Approx(0.0));
    CHECK(std::abs(bell.amp(2)) == doctest::Approx(0.0));
    CHECK(bell.amp(3).real() == doctest::Approx(1.0 / std::numbers::sqrt2));

    StateVector off = zero_state(2);
    off.apply_2q(cnot(), 0, 1);
    CHECK(test::max_amp_diff(off, zero_state(2)) == 0.0);

    StateVector ident = plus_state(2);
    const StateVector before = ident;
    ident.apply_2q(identity_2q(), 1, 0);
    CHECK(test::max_amp_diff(ident, before) == 0.0);

    CHECK_THROWS_AS(off.apply_2q(cnot(), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(off.apply_2q(cnot(), 0, 2), std::out_of_range);
    CHECK_THROWS_AS(off.apply_2q(cnot(), -1, 1), std::out_of_range);
}

TEST_CASE("probabilities follow the Born rule") {
    const Distribution uniform = plus_state(2).probabilities();
    for (double p : uniform.probs) CHECK(p == doctest::Approx(0.25));
    uniform.validate();

    StateVector bell = zero_state(2);
    bell.apply_1q(hadamard(), 0);
    bell.apply_2q(cnot(), 0, 1);
    const Distribution dist = bell.probabilities();
    CHECK(dist.probs[0] == doctest::Approx(0.5));
    CHECK(dist.probs[1] == doctest::Approx(0.0));
    CHECK(dist.probs[2] == doctest::Approx(0.0));
    CHECK(dist.probs[3] == doctest::Approx(0.5));

    const BitString x(3, 5);
    const Distribution point = basis_state(x).probabilities();
    for (std::size_t i = 0; i < point.probs.size(); ++i) {
        CHECK(point.probs[i] == (i == x.index ? 1.0 : 0.0));
    }
}

TEST_CASE("norm is preserved over long random gate sequences") {
    Rng rng(11);
    for (int n : {5, 12}) {
        StateVector state = zero_state(n);
        for (int step = 0; step < 500; ++step) {
            if (rng.uniform() < 0.7) {
                state.apply_1q(test::random_1q_gate(rng),
                               static_cast<int>(rng.uniform_int(n)));
            } else {
                const int control = static_cast<int>(rng.uniform_int(n));
                int target = static_cast<int>(rng.uniform_int(n - 1));
                if (target >= control) ++target;
                state.apply_2q(
                    controlled_rot(rng.normal(0.0, 2.0), rng.normal(0.0, 2.0)),
                    control, target);
            }
        }
        CHECK(std::abs(state.norm_sq() - 1.0) < 1e-9);
    }
}

TEST_CASE("a gate followed by its dagger is the identity") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector original = test::random_state(4, rng);

        StateVector state = original;
        const Gate1Q g = test::random_1q_gate(rng);
        const int qubit = static_cast<int>(rng.uniform_int(4));
        state.apply_1q(g, qubit);
        state.apply_1q(g.dagger(), qubit);
        CHECK(test::max_amp_diff(state, original) < 1e-10);

        state = original;
        const Gate2Q g2 = controlled_rot(rng.normal(), rng.normal());
        state.apply_2q(g2, 0, 3);
        state.apply_2q(g2.dagger(), 0, 3);
        CHECK(test::max_amp_diff(state, original) < 1e-10);
    }
}

TEST_CASE("apply_1q agrees with the dense-matrix oracle on every qubit") {
    Rng rng(37);
    for (int n = 1; n <= 4; ++n) {
        for (int qubit = 0; qubit < n; ++qubit) {
            const Gate1Q g = test::random_1q_gate(rng);
            const StateVector input = test::random_state(n, rng);

            StateVector fast = input;
            fast.apply_1q(g, qubit);

            const auto expected =
                test::matvec(test::embed_1q(g, qubit, n),
                             test::amplitudes_of(input));
            for (std::size_t i = 0; i < expected.size(); ++i) {
                CHECK(std::abs(fast.amp(i) - expected[i]) < 1e-12);
            }
        }
    }
}

TEST_CASE("apply_1q touches only index pairs differing in the qubit's bit") {
    Rng rng(41);
    for (int n = 1; n <= 4; ++n) {
        for (int qubit = 0; qubit < n; ++qubit) {
            const StateVector input = test::random_state(n, rng);
            StateVector output = input;
            output.apply_1q(test::random_1q_gate(rng), qubit);
            const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
            // Amplitude mass within each pair is conserved, so summing
            // |a|^2 over each pair must give the same value before and after.
            for (std::size_t i = 0; i < input.dim(); ++i) {
                if (i & mask) continue;
                const double before =
                    std::norm(input.amp(i)) + std::norm(input.amp(i | mask));
                const double after =
                    std::norm(output.amp(i)) + std::norm(output.amp(i | mask));
                CHECK(before == doctest::Approx(after).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("apply_2q CNOT agrees with the dense permutation oracle") {
    Rng rng(43);
    for (int n = 2; n <= 4; ++n) {
        for (int control = 0; control < n; ++control) {
            for (int target = 0; target < n; ++target) {
                if (control == target) continue;
                const StateVector input = test::random_state(n, rng);
                StateVector fast = input;
                fast.apply_2q(cnot(), control, target);
                const auto expected =
                    test::matvec(test::embed_2q(cnot(), control, target, n),
                                 test::amplitudes_of(input));
                for (std::size_t i = 0; i < expected.size(); ++i) {
                    CHECK(std::abs(fast.amp(i) - expected[i]) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("apply_2q agrees with the dense-matrix oracle for controlled_rot") {
    Rng rng(47);
    for (int n = 2; n <= 4; ++n) {
        const Gate2Q g = controlled_rot(rng.normal(), rng.normal());
        const int control = static_cast<int>(rng.uniform_int(n));
        int target = static_cast<int>(rng.uniform_int(n - 1));
        if (target >= control) ++target;
        const StateVector input = test::random_state(n, rng);
        StateVector fast = input;
        fast.apply_2q(g, control, target);
        const auto expected = test::matvec(
            test::embed_2q(g, control, target, n), test::amplitudes_of(input));
        for (std::size_t i = 0; i < expected.size(); ++i) {
            CHECK(std::abs(fast.amp(i) - expected[i]) < 1e-12);
        }
    }
}
