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
#include <utility>
#include <vector>

#include "qgm/ansatz.hpp"
#include "qgm/errors.hpp"
#include "qgm/sampling.hpp"

namespace qgm {

/// Training data: an ordered list of outcomes (repeats allowed).
struct Dataset {
    int n_bits = 0;
    std::vector<BitString> samples;

    void add(const BitString& x);
    std::size_t size() const { return samples.size(); }

    /// Per-outcome multiplicities.
    std::map<std::uint64_t, std::uint64_t> count_table() const;

    static Dataset from_counts(const SampleSet& counts);
    SampleSet to_counts() const;
};

enum class Optimizer { GradientDescent, Adam };

std::string to_string(Optimizer opt);
Optimizer optimizer_from_string(const std::string& name);

struct TrainConfig {
    Optimizer optimizer = Optimizer::Adam;
    double learning_rate = 0.05;
    int iterations = 500;
    int batch_size = 64;
    std::uint64_t seed = 0;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_epsilon = 1e-8;
    /// Std of the i.i.d. normal parameter initialization. Small but nonzero:
    /// the all-zero parameter point has an exactly zero gradient.
    double init_scale = 0.1;
    /// Probability floor inside log(): prevents -log(0) before the model
    /// covers the data.
    double epsilon_clip = 1e-12;

    void validate() const;
};

struct TrainRecord {
    int iteration = 0;
    double loss = 0.0;       // full-dataset NLL at the pre-update parameters
    double grad_norm = 0.0;  // L2 norm of the minibatch gradient
    double time_ms = 0.0;    // wall time of the step
    int clip_activations = 0;
};

struct TrainHistory {
    std::vector<TrainRecord> records;
};

/// Mean negative log-likelihood: -(1/N) sum_i log max(p(x_i), epsilon_clip).
/// Throws std::invalid_argument on an empty dataset or width mismatch.
double nll(const LayeredAnsatz& ansatz, const ParamVector& params,
           const Dataset& data, double epsilon_clip = 1e-12);

/// Gradient of nll over the batch: the average of -grad p(x_i) / max(p(x_i),
/// epsilon_clip). Computed as one shift-rule gradient of the diagonal
/// observable with weights -(c_x / N) / max(p(x), epsilon_clip), which equals
/// the per-sample sum by linearity. If clip_activations is non-null it
/// receives the number of batch samples whose probability was floored.
std::vector<double> nll_grad(const LayeredAnsatz& ansatz,
                             const ParamVector& params, const Dataset& batch,
                             double epsilon_clip = 1e-12,
                             int* clip_activations = nullptr);

/// Minibatch maximum-likelihood training. Parameters are initialized
/// N(0, init_scale^2) and minibatches are drawn with replacement, all from
/// one generator seeded with config.seed, so a run is fully reproducible.
/// Throws numerical_error if the loss becomes non-finite.
std::pair<ParamVector, TrainHistory> train_mle(const LayeredAnsatz& ansatz,
                                               const Dataset& data,
                                               const TrainConfig& config);

}  // namespace qgm
