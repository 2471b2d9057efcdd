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

#include "qgm/datasets.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include "qgm/statevector.hpp"

namespace qgm {

namespace {

constexpr double kDivergenceFloor = 1e-12;

void require_bits(int n_bits) {
    if (n_bits < 1 || n_bits > kMaxQubits) {
        throw std::invalid_argument("target: n_bits must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
}

void require_same_dim(const Distribution& p, const Distribution& q) {
    if (p.n_bits != q.n_bits || p.probs.size() != q.probs.size()) {
        throw std::invalid_argument("divergence: dimension mismatch");
    }
}

}  // namespace

Distribution uniform_target(int n_bits) {
    require_bits(n_bits);
    Distribution dist;
    dist.n_bits = n_bits;
    dist.probs.assign(std::size_t{1} << n_bits,
                      std::pow(2.0, -static_cast<double>(n_bits)));
    return dist;
}

Distribution gaussian_target(int n_bits, double mean, double stddev) {
    require_bits(n_bits);
    if (!(stddev > 0.0) || !std::isfinite(stddev) || !std::isfinite(mean)) {
        throw std::invalid_argument(
            "gaussian_target: std must be positive and finite");
    }
    Distribution dist;
    dist.n_bits = n_bits;
    dist.probs.resize(std::size_t{1} << n_bits);
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        const double d = (static_cast<double>(i) - mean) / stddev;
        dist.probs[i] = std::exp(-0.5 * d * d);
    }
    const double total = kahan_sum(dist.probs);
    for (double& p : dist.probs) p /= total;
    return dist;
}

double gaussian_default_mean(int n_bits) {
    require_bits(n_bits);
    return (std::pow(2.0, n_bits) - 1.0) / 2.0;
}

double gaussian_default_std(int n_bits) {
    require_bits(n_bits);
    return std::pow(2.0, n_bits) / 6.0;
}

Distribution bars_and_stripes_target(int rows, int cols) {
    if (rows < 1 || cols < 1 || rows * cols > kMaxQubits) {
        throw std::invalid_argument(
            "bars_and_stripes_target: need rows, cols >= 1 and rows*cols <= " +
            std::to_string(kMaxQubits));
    }
    const int n_bits = rows * cols;
    // Pixel (r, c) -> bit r*cols + c; bit 0 is the MSB of the outcome index.
    const auto pixel_mask = [&](int r, int c) {
        return std::uint64_t{1} << (n_bits - 1 - (r * cols + c));
    };
    std::set<std::uint64_t> patterns;
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << rows); ++choice) {
        std::uint64_t image = 0;
        for (int r = 0; r < rows; ++r) {
            if ((choice >> r) & 1u) {
                for (int c = 0; c < cols; ++c) image |= pixel_mask(r, c);
            }
        }
        patterns.insert(image);
    }
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << cols); ++choice) {
        std::uint64_t image = 0;
        for (int c = 0; c < cols; ++c) {
            if ((choice >> c) & 1u) {
                for (int r = 0; r < rows; ++r) image |= pixel_mask(r, c);
            }
        }
        patterns.insert(image);
    }
    Distribution dist;
    dist.n_bits = n_bits;
    dist.probs.assign(std::size_t{1} << n_bits, 0.0);
    const double p = 1.0 / static_cast<double>(patterns.size());
    for (std::uint64_t image : patterns) dist.probs[image] = p;
    return dist;
}

Dataset dataset_from_distribution(const Distribution& dist,
                                  std::uint64_t n_samples,
                                  std::uint64_t seed) {
    const SampleSet counts = sample(dist, n_samples, seed);
    return Dataset::from_counts(counts);
}

namespace {

Moments moments_from_weights(const std::vector<double>& weights, double total) {
    double mean = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        mean += static_cast<double>(i) * weights[i];
    }
    mean /= total;
    double var = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double d = static_cast<double>(i) - mean;
        var += d * d * weights[i];
    }
    var /= total;
    return Moments{mean, std::sqrt(var)};
}

}  // namespace

Moments mean_std(const Distribution& dist) {
    dist.validate();
    return moments_from_weights(dist.probs, 1.0);
}

Moments mean_std(const SampleSet& samples) {
    if (samples.total == 0) {
        throw std::invalid_argument("mean_std: empty sample set");
    }
    std::vector<double> weights(std::size_t{1} << samples.n_bits, 0.0);
    for (const auto& [outcome, count] : samples.counts) {
        weights.at(outcome) = static_cast<double>(count);
    }
    return moments_from_weights(weights, static_cast<double>(samples.total));
}

double kl(const Distribution& p, const Distribution& q) {
    require_same_dim(p, q);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        if (p.probs[i] > 0.0) {
            acc += p.probs[i] *
                   std::log(p.probs[i] / std::max(q.probs[i], kDivergenceFloor));
        }
    }
    return acc;
}

double js(const Distribution& p, const Distribution& q) {
    require_same_dim(p, q);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        const double m = 0.5 * (p.probs[i] + q.probs[i]);
        if (p.probs[i] > 0.0) acc += 0.5 * p.probs[i] * std::log2(p.probs[i] / m);
        if (q.probs[i] > 0.0) acc += 0.5 * q.probs[i] * std::log2(q.probs[i] / m);
    }
    return acc;
}

double tv(const Distribution& p, const Distribution& q) {
    require_same_dim(p, q);
    double acc = 0.0;
    for (std::size_t i = 0; i < p.probs.size(); ++i) {
        acc += std::abs(p.probs[i] - q.probs[i]);
    }
    return 0.5 * acc;
}

}  // namespace qgm
