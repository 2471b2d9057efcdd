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

#include "qgm/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qgm {

double kahan_sum(std::span<const double> xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double y = x - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

void Distribution::validate(double tol) const {
    if (n_bits < 1 || n_bits > 63) {
        throw std::invalid_argument("Distribution: n_bits out of range");
    }
    if (probs.size() != (std::size_t{1} << n_bits)) {
        throw std::invalid_argument(
            "Distribution: expected 2^" + std::to_string(n_bits) +
            " probabilities, got " + std::to_string(probs.size()));
    }
    for (double p : probs) {
        if (!(p >= 0.0) || !std::isfinite(p)) {
            throw std::invalid_argument(
                "Distribution: probabilities must be finite and >= 0");
        }
    }
    const double total = kahan_sum(probs);
    if (std::abs(total - 1.0) > tol) {
        throw std::invalid_argument("Distribution: probabilities sum to " +
                                    std::to_string(total) + ", not 1");
    }
}

}  // namespace qgm
