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
#include <numbers>
#include <stdexcept>

namespace qgm {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_finite(double angle, const char* name) {
    if (!std::isfinite(angle)) {
        throw std::invalid_argument(std::string(name) +
                                    ": angle must be finite");
    }
}

}  // namespace

Gate1Q Gate1Q::dagger() const {
    Gate1Q out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out.m[2 * r + c] = std::conj((*this)(c, r));
    return out;
}

Gate2Q Gate2Q::dagger() const {
    Gate2Q out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out.m[4 * r + c] = std::conj((*this)(c, r));
    return out;
}

Gate1Q identity_1q() { return Gate1Q{{1.0, 0.0, 0.0, 1.0}}; }

Gate1Q hadamard() {
    const double s = 1.0 / std::numbers::sqrt2;
    return Gate1Q{{s, s, s, -s}};
}

Gate1Q pauli_x() { return Gate1Q{{0.0, 1.0, 1.0, 0.0}}; }

Gate1Q pauli_y() { return Gate1Q{{0.0, -kI, kI, 0.0}}; }

Gate1Q pauli_z() { return Gate1Q{{1.0, 0.0, 0.0, -1.0}}; }

Gate1Q rx(double theta) {
    require_finite(theta, "rx");
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return Gate1Q{{c, -kI * s, -kI * s, c}};
}

Gate1Q ry(double theta) {
    require_finite(theta, "ry");
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return Gate1Q{{c, -s, s, c}};
}

Gate1Q rz(double lambda) {
    require_finite(lambda, "rz");
    const Complex e = std::exp(-kI * (lambda / 2));
    return Gate1Q{{e, 0.0, 0.0, std::conj(e)}};
}

Gate2Q identity_2q() {
    Gate2Q g;
    for (int i = 0; i < 4; ++i) g.m[4 * i + i] = 1.0;
    return g;
}

Gate2Q cnot() {
    Gate2Q g;
    g.m[0 * 4 + 0] = 1.0;
    g.m[1 * 4 + 1] = 1.0;
    g.m[2 * 4 + 3] = 1.0;
    g.m[3 * 4 + 2] = 1.0;
    return g;
}

Gate2Q controlled_rot(double psi, double lambda) {
    require_finite(psi, "controlled_rot");
    require_finite(lambda, "controlled_rot");
    const Gate1Q block_y = ry(psi);
    const Gate1Q block_z = rz(lambda);
    // RY(psi) * RZ(lambda) on the control=1 block.
    Gate1Q block;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            block.m[2 * r + c] =
                block_y(r, 0) * block_z(0, c) + block_y(r, 1) * block_z(1, c);
    Gate2Q g;
    g.m[0 * 4 + 0] = 1.0;
    g.m[1 * 4 + 1] = 1.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g.m[4 * (2 + r) + (2 + c)] = block(r, c);
    return g;
}

namespace {

template <typename Gate>
double unitarity_error_impl(const Gate& g, int dim) {
    double worst = 0.0;
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < dim; ++k) acc += std::conj(g(k, r)) * g(k, c);
            if (r == c) acc -= 1.0;
            worst = std::max(worst, std::abs(acc));
        }
    }
    return worst;
}

}  // namespace

double unitarity_error(const Gate1Q& g) { return unitarity_error_impl(g, 2); }
double unitarity_error(const Gate2Q& g) { return unitarity_error_impl(g, 4); }

bool is_unitary(const Gate1Q& g, double tol) {
    return unitarity_error(g) <= tol;
}

bool is_unitary(const Gate2Q& g, double tol) {
    return unitarity_error(g) <= tol;
}

}  // namespace qgm
