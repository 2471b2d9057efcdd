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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qgm/distribution.hpp"
#include "qgm/gates.hpp"

namespace qgm {

/// Register width cap: 2^24 amplitudes (256 MiB of complex doubles).
inline constexpr int kMaxQubits = 24;

/// A measurement outcome on n bits.
///
/// Bit-order convention, fixed project-wide: qubit 0 is the MOST significant
/// bit of the outcome index, i.e. index = sum_k bits[k] * 2^(n-1-k).
struct BitString {
    int n_bits = 0;
    std::uint64_t index = 0;

    BitString() = default;
    BitString(int n_bits, std::uint64_t index);

    /// Parse "011"-style text, most significant bit first.
    static BitString from_string(const std::string& bits);
    static BitString from_bits(const std::vector<int>& bits);

    /// bits[k]; k = 0 is the most significant bit.
    int bit(int k) const;
    std::string str() const;

    friend bool operator==(const BitString&, const BitString&) = default;
};

/// Render an outcome index as an n-bit string, most significant bit first.
std::string index_to_bits(std::uint64_t index, int n_bits);

/// Dense statevector of an n-qubit pure state: 2^n complex amplitudes.
///
/// Gates update amplitudes in place over pair/quad strides (O(2^n) per gate);
/// no 2^n x 2^n matrix is ever formed. A StateVector is an ordinary value:
/// copyable, movable, and safe to hand between threads.
class StateVector {
  public:
    /// |0...0> on n_qubits. Throws std::invalid_argument unless
    /// 1 <= n_qubits <= kMaxQubits.
    explicit StateVector(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amps_.size(); }

    Complex amp(std::size_t i) const { return amps_[i]; }
    void set_amp(std::size_t i, Complex v) { amps_[i] = v; }
    std::span<const Complex> amplitudes() const { return amps_; }

    double norm_sq() const;

    /// Apply a 2x2 unitary to one qubit. Throws std::out_of_range on a bad
    /// qubit index.
    void apply_1q(const Gate1Q& gate, int qubit);

    /// Apply a 4x4 unitary to (control, target). The matrix acts on the
    /// amplitude quadruple ordered by the (control, target) bit pair.
    /// Throws std::out_of_range on bad indices, std::invalid_argument when
    /// control == target.
    void apply_2q(const Gate2Q& gate, int control, int target);

    /// Born distribution: p[i] = |amplitude[i]|^2.
    Distribution probabilities() const;

  private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

StateVector zero_state(int n_qubits);

/// Uniform superposition |+>^n: every amplitude 2^(-n/2).
StateVector plus_state(int n_qubits);

/// Computational basis state |x>.
StateVector basis_state(const BitString& x);

}  // namespace qgm
