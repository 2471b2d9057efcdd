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

#include "qgm/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgm/rng.hpp"

namespace qgm {

void SampleSet::add(std::uint64_t outcome, std::uint64_t n) {
    if (n == 0) return;
    counts[outcome] += n;
    total += n;
}

std::uint64_t SampleSet::count(std::uint64_t outcome) const {
    const auto it = counts.find(outcome);
    return it == counts.end() ? 0 : it->second;
}

Distribution SampleSet::empirical() const {
    if (total == 0) {
        throw std::invalid_argument("SampleSet: empty sample set");
    }
    Distribution dist;
    dist.n_bits = n_bits;
    dist.probs.assign(std::size_t{1} << n_bits, 0.0);
    for (const auto& [outcome, count] : counts) {
        dist.probs.at(outcome) =
            static_cast<double>(count) / static_cast<double>(total);
    }
    return dist;
}

double born_probability(const LayeredAnsatz& ansatz, const ParamVector& params,
                        const BitString& x) {
    if (x.n_bits != ansatz.n_qubits) {
        throw std::invalid_argument("born_probability: bitstring length " +
                                    std::to_string(x.n_bits) +
                                    " does not match " +
                                    std::to_string(ansatz.n_qubits) +
                                    " qubits");
    }
    const Complex a = evaluate(ansatz, params).amp(x.index);
    return a.real() * a.real() + a.imag() * a.imag();
}

namespace {

std::vector<double> cumulative_table(const Distribution& dist) {
    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i];
        cdf[i] = acc;
    }
    // Absorb rounding so a draw of u -> 1 never falls off the table.
    cdf.back() = std::max(cdf.back(), 1.0);
    return cdf;
}

std::uint64_t draw_index(const std::vector<double>& cdf, Rng& rng) {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return static_cast<std::uint64_t>(it - cdf.begin());
}

}  // namespace

SampleSet sample(const Distribution& dist, std::uint64_t n_samples,
                 std::uint64_t seed) {
    dist.validate();
    if (n_samples == 0) {
        throw std::invalid_argument("sample: n_samples must be >= 1");
    }
    const std::vector<double> cdf = cumulative_table(dist);
    Rng rng(seed);
    SampleSet out;
    out.n_bits = dist.n_bits;
    for (std::uint64_t i = 0; i < n_samples; ++i) {
        out.add(draw_index(cdf, rng));
    }
    return out;
}

}  // namespace qgm
