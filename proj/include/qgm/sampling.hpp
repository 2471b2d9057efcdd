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
#include <map>

#include "qgm/ansatz.hpp"
#include "qgm/distribution.hpp"

namespace qgm {

/// Counted measurement outcomes.
struct SampleSet {
    int n_bits = 0;
    std::map<std::uint64_t, std::uint64_t> counts;
    std::uint64_t total = 0;

    void add(std::uint64_t outcome, std::uint64_t n = 1);
    std::uint64_t count(std::uint64_t outcome) const;
    Distribution empirical() const;

    friend bool operator==(const SampleSet&, const SampleSet&) = default;
};

/// p(x) = |<x|psi>|^2 for the circuit's output state psi.
double born_probability(const LayeredAnsatz& ansatz, const ParamVector& params,
                        const BitString& x);

/// n_samples i.i.d. draws from dist by inverse-CDF lookup over the cumulative
/// table. Deterministic: the same seed reproduces the SampleSet bit for bit.
SampleSet sample(const Distribution& dist, std::uint64_t n_samples,
                 std::uint64_t seed);

}  // namespace qgm
