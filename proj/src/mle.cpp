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

#include "qgm/mle.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "qgm/gradients.hpp"
#include "qgm/rng.hpp"

namespace qgm {

void Dataset::add(const BitString& x) {
    if (samples.empty() && n_bits == 0) n_bits = x.n_bits;
    if (x.n_bits != n_bits) {
        throw std::invalid_argument("Dataset: sample width mismatch");
    }
    samples.push_back(x);
}

std::map<std::uint64_t, std::uint64_t> Dataset::count_table() const {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const BitString& x : samples) ++counts[x.index];
    return counts;
}

Dataset Dataset::from_counts(const SampleSet& counts) {
    Dataset data;
    data.n_bits = counts.n_bits;
    for (const auto& [outcome, count] : counts.counts) {
        for (std::uint64_t i = 0; i < count; ++i) {
            data.samples.emplace_back(counts.n_bits, outcome);
        }
    }
    return data;
}

SampleSet Dataset::to_counts() const {
    SampleSet out;
    out.n_bits = n_bits;
    for (const BitString& x : samples) out.add(x.index);
    return out;
}

std::string to_string(Optimizer opt) {
    return opt == Optimizer::Adam ? "adam" : "gradient_descent";
}

Optimizer optimizer_from_string(const std::string& name) {
    if (name == "adam") return Optimizer::Adam;
    if (name == "gradient_descent") return Optimizer::GradientDescent;
    throw std::invalid_argument("unknown optimizer '" + name +
                                "' (expected adam or gradient_descent)");
}

void TrainConfig::validate() const {
    if (!(learning_rate > 0.0)) {
        throw std::invalid_argument("train config: learning_rate must be > 0");
    }
    if (iterations < 1) {
        throw std::invalid_argument("train config: iterations must be >= 1");
    }
    if (batch_size < 1) {
        throw std::invalid_argument("train config: batch_size must be >= 1");
    }
    if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0) ||
        !(adam_beta2 > 0.0 && adam_beta2 < 1.0)) {
        throw std::invalid_argument("train config: adam betas must be in (0,1)");
    }
    if (!(adam_epsilon > 0.0)) {
        throw std::invalid_argument("train config: adam_epsilon must be > 0");
    }
    if (!(init_scale >= 0.0)) {
        throw std::invalid_argument("train config: init_scale must be >= 0");
    }
    if (!(epsilon_clip > 0.0 && epsilon_clip < 1.0)) {
        throw std::invalid_argument(
            "train config: epsilon_clip must be in (0,1)");
    }
}

namespace {

void require_data(const LayeredAnsatz& ansatz, const Dataset& data,
                  const char* what) {
    if (data.samples.empty()) {
        throw std::invalid_argument(std::string(what) + ": empty dataset");
    }
    if (data.n_bits != ansatz.n_qubits) {
        throw std::invalid_argument(std::string(what) +
                                    ": dataset width mismatch");
    }
}

double l2_norm(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

}  // namespace

double nll(const LayeredAnsatz& ansatz, const ParamVector& params,
           const Dataset& data, double epsilon_clip) {
    require_data(ansatz, data, "nll");
    const Distribution dist = evaluate(ansatz, params).probabilities();
    double total = 0.0;
    for (const auto& [outcome, count] : data.count_table()) {
        const double p = std::max(dist.probs.at(outcome), epsilon_clip);
        total += static_cast<double>(count) * std::log(p);
    }
    return -total / static_cast<double>(data.samples.size());
}

std::vector<double> nll_grad(const LayeredAnsatz& ansatz,
                             const ParamVector& params, const Dataset& batch,
                             double epsilon_clip, int* clip_activations) {
    require_data(ansatz, batch, "nll_grad");
    const Distribution dist = evaluate(ansatz, params).probabilities();
    // d/dtheta of -(1/N) sum_i log p(x_i) is the shift-rule gradient of one
    // diagonal observable with weights -(c_x / N) / max(p(x), clip).
    DiagonalObservable obs;
    obs.n_bits = ansatz.n_qubits;
    obs.values.assign(dist.probs.size(), 0.0);
    const double n = static_cast<double>(batch.samples.size());
    int clipped = 0;
    for (const auto& [outcome, count] : batch.count_table()) {
        const double p = dist.probs.at(outcome);
        if (p < epsilon_clip) clipped += static_cast<int>(count);
        obs.values.at(outcome) =
            -(static_cast<double>(count) / n) / std::max(p, epsilon_clip);
    }
    if (clip_activations != nullptr) *clip_activations = clipped;
    return grad_vector(ansatz, params, obs);
}

std::pair<ParamVector, TrainHistory> train_mle(const LayeredAnsatz& ansatz,
                                               const Dataset& data,
                                               const TrainConfig& config) {
    config.validate();
    require_data(ansatz, data, "train_mle");

    Rng rng(config.seed);
    const int n_params = ansatz.parameter_count();
    ParamVector params(static_cast<std::size_t>(n_params));
    for (double& p : params) p = rng.normal(0.0, config.init_scale);

    std::vector<double> adam_m(params.size(), 0.0);
    std::vector<double> adam_v(params.size(), 0.0);

    TrainHistory history;
    history.records.reserve(static_cast<std::size_t>(config.iterations));

    for (int it = 0; it < config.iterations; ++it) {
        const auto t0 = std::chrono::steady_clock::now();

        const double loss = nll(ansatz, params, data, config.epsilon_clip);
        if (!std::isfinite(loss)) {
            throw numerical_error("train_mle: non-finite loss at iteration " +
                                  std::to_string(it));
        }

        Dataset batch;
        batch.n_bits = data.n_bits;
        batch.samples.reserve(static_cast<std::size_t>(config.batch_size));
        for (int b = 0; b < config.batch_size; ++b) {
            batch.samples.push_back(
                data.samples[rng.uniform_int(data.samples.size())]);
        }

        int clipped = 0;
        const std::vector<double> grad =
            nll_grad(ansatz, params, batch, config.epsilon_clip, &clipped);

        if (config.optimizer == Optimizer::GradientDescent) {
            for (std::size_t i = 0; i < params.size(); ++i) {
                params[i] -= config.learning_rate * grad[i];
            }
        } else {
            const double t = static_cast<double>(it + 1);
            const double bias1 = 1.0 - std::pow(config.adam_beta1, t);
            const double bias2 = 1.0 - std::pow(config.adam_beta2, t);
            for (std::size_t i = 0; i < params.size(); ++i) {
                adam_m[i] = config.adam_beta1 * adam_m[i] +
                            (1.0 - config.adam_beta1) * grad[i];
                adam_v[i] = config.adam_beta2 * adam_v[i] +
                            (1.0 - config.adam_beta2) * grad[i] * grad[i];
                const double m_hat = adam_m[i] / bias1;
                const double v_hat = adam_v[i] / bias2;
                params[i] -= config.learning_rate * m_hat /
                             (std::sqrt(v_hat) + config.adam_epsilon);
            }
        }

        const auto t1 = std::chrono::steady_clock::now();
        TrainRecord record;
        record.iteration = it;
        record.loss = loss;
        record.grad_norm = l2_norm(grad);
        record.time_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
        record.clip_activations = clipped;
        history.records.push_back(record);
    }

    return {params, history};
}

}  // namespace qgm
