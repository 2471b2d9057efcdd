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
#include <stdexcept>

namespace qgm {

namespace {

void require_width(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("n_qubits must be in [1, " +
                                    std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n_qubits));
    }
}

}  // namespace

BitString::BitString(int n_bits_, std::uint64_t index_)
    : n_bits(n_bits_), index(index_) {
    if (n_bits < 1 || n_bits > 63) {
        throw std::invalid_argument("BitString: n_bits out of range");
    }
    if (index >> n_bits) {
        throw std::invalid_argument("BitString: index " + std::to_string(index) +
                                    " does not fit in " +
                                    std::to_string(n_bits) + " bits");
    }
}

BitString BitString::from_string(const std::string& bits) {
    if (bits.empty()) {
        throw std::invalid_argument("BitString: empty string");
    }
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("BitString: invalid character '" +
                                        std::string(1, c) + "'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return BitString(static_cast<int>(bits.size()), index);
}

BitString BitString::from_bits(const std::vector<int>& bits) {
    std::string text;
    text.reserve(bits.size());
    for (int b : bits) {
        if (b != 0 && b != 1) {
            throw std::invalid_argument("BitString: bits must be 0 or 1");
        }
        text.push_back(static_cast<char>('0' + b));
    }
    return from_string(text);
}

int BitString::bit(int k) const {
    if (k < 0 || k >= n_bits) {
        throw std::out_of_range("BitString: bit index out of range");
    }
    return static_cast<int>((index >> (n_bits - 1 - k)) & 1u);
}

std::string BitString::str() const { return index_to_bits(index, n_bits); }

std::string index_to_bits(std::uint64_t index, int n_bits) {
    std::string out(static_cast<std::size_t>(n_bits), '0');
    for (int k = 0; k < n_bits; ++k) {
        if ((index >> (n_bits - 1 - k)) & 1u) out[static_cast<std::size_t>(k)] = '1';
    }
    return out;
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    require_width(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

double StateVector::norm_sq() const {
    double total = 0.0, comp = 0.0;
    for (const Complex& a : amps_) {
        const double x = a.real() * a.real() + a.imag() * a.imag();
        const double y = x - comp;
        const double t = total + y;
        comp = (t - total) - y;
        total = t;
    }
    return total;
}

void StateVector::apply_1q(const Gate1Q& gate, int qubit) {
    if (qubit < 0 || qubit >= n_qubits_) {
        throw std::out_of_range("apply_1q: qubit index out of range");
    }
    // Qubit q lives in bit (n-1-q) of the amplitude index.
    const std::size_t mask = std::size_t{1} << (n_qubits_ - 1 - qubit);
    const Complex u00 = gate(0, 0), u01 = gate(0, 1);
    const Complex u10 = gate(1, 0), u11 = gate(1, 1);
    const std::size_t n = amps_.size();
    for (std::size_t base = 0; base < n; base += 2 * mask) {
        for (std::size_t off = 0; off < mask; ++off) {
            const std::size_t i0 = base + off;
            const std::size_t i1 = i0 + mask;
            const Complex a0 = amps_[i0];
            const Complex a1 = amps_[i1];
            amps_[i0] = u00 * a0 + u01 * a1;
            amps_[i1] = u10 * a0 + u11 * a1;
        }
    }
}

void StateVector::apply_2q(const Gate2Q& gate, int control, int target) {
    if (control < 0 || control >= n_qubits_ || target < 0 ||
        target >= n_qubits_) {
        throw std::out_of_range("apply_2q: qubit index out of range");
    }
    if (control == target) {
        throw std::invalid_argument("apply_2q: control and target must differ");
    }
    const std::size_t mc = std::size_t{1} << (n_qubits_ - 1 - control);
    const std::size_t mt = std::size_t{1} << (n_qubits_ - 1 - target);
    const std::size_t n = amps_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if ((i & mc) || (i & mt)) continue;
        const std::size_t idx[4] = {i, i | mt, i | mc, i | mc | mt};
        Complex in[4];
        for (int k = 0; k < 4; ++k) in[k] = amps_[idx[k]];
        for (int r = 0; r < 4; ++r) {
            Complex acc = 0.0;
            for (int c = 0; c < 4; ++c) acc += gate(r, c) * in[c];
            amps_[idx[r]] = acc;
        }
    }
}

Distribution StateVector::probabilities() const {
    Distribution dist;
    dist.n_bits = n_qubits_;
    dist.probs.resize(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        const Complex a = amps_[i];
        dist.probs[i] = a.real() * a.real() + a.imag() * a.imag();
    }
    return dist;
}

StateVector zero_state(int n_qubits) { return StateVector(n_qubits); }

StateVector plus_state(int n_qubits) {
    StateVector state(n_qubits);
    const double amp = std::pow(2.0, -0.5 * n_qubits);
    for (std::size_t i = 0; i < state.dim(); ++i) state.set_amp(i, amp);
    return state;
}

StateVector basis_state(const BitString& x) {
    StateVector state(x.n_bits);
    state.set_amp(0, 0.0);
    state.set_amp(x.index, 1.0);
    return state;
}

}  // namespace qgm
