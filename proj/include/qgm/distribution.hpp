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
#include <span>
#include <vector>

namespace qgm {

/// Probability vector over the 2^n_bits computational outcomes.
struct Distribution {
    int n_bits = 0;
    std::vector<double> probs;

    std::size_t dim() const { return probs.size(); }

    /// Throws std::invalid_argument unless probs has length 2^n_bits, all
    /// entries are nonnegative and the total is 1 within tol.
    void validate(double tol = 1e-9) const;
};

/// Compensated (Kahan) sum; keeps normalization checks tight even at 2^24 bins.
double kahan_sum(std::span<const double> xs);

}  // namespace qgm
