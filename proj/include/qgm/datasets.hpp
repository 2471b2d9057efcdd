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

#include "qgm/distribution.hpp"
#include "qgm/mle.hpp"
#include "qgm/sampling.hpp"

namespace qgm {

Distribution uniform_target(int n_bits);

/// Discretized Gaussian over bin indices: p[i] proportional to
/// exp(-(i - mean)^2 / (2 std^2)), normalized. mean is in index units.
Distribution gaussian_target(int n_bits, double mean, double stddev);

/// Default moments used when a Gaussian target gives none: centered,
/// mean = (2^n - 1) / 2, stddev = 2^n / 6.
double gaussian_default_mean(int n_bits);
double gaussian_default_std(int n_bits);

/// Uniform over the 2^rows + 2^cols - 2 bar/stripe images (every row
/// constant, or every column constant; the all-0 and all-1 images counted
/// once). Pixel (r, c) maps to bit r*cols + c of the outcome.
Distribution bars_and_stripes_target(int rows, int cols);

/// Seeded i.i.d. draws collected into a Dataset (same draw algorithm as
/// sample()).
Dataset dataset_from_distribution(const Distribution& dist,
                                  std::uint64_t n_samples, std::uint64_t seed);

struct Moments {
    double mean = 0.0;
    double stddev = 0.0;  // population
};

/// Mean and population std of the outcome index.
Moments mean_std(const Distribution& dist);
Moments mean_std(const SampleSet& samples);

/// KL(p || q) in nats; q floored at 1e-12 where p > 0.
double kl(const Distribution& p, const Distribution& q);

/// Jensen-Shannon divergence, base-2 logs, in [0, 1].
double js(const Distribution& p, const Distribution& q);

/// Total variation distance: half the L1 distance.
double tv(const Distribution& p, const Distribution& q);

}  // namespace qgm
