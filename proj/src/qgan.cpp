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

#include "qgm/qgan.hpp"

#include <cmath>
#include <stdexcept>

#include "qgm/datasets.hpp"
#include "qgm/gradients.hpp"
#include "qgm/rng.hpp"

namespace qgm {

GeneratorSpec make_generator(int n_data, int n_layers, InputKind input) {
    return GeneratorSpec{build_ansatz(n_data, n_layers, input)};
}

void DiscriminatorSpec::validate() const {
    if (n_data < 1 || n_readout < 1) {
        throw std::invalid_argument(
            "discriminator: n_data and n_readout must be >= 1");
    }
    ansatz.validate();
    if (ansatz.n_qubits != n_data + n_readout) {
        throw std::invalid_argument(
            "discriminator: ansatz width must be n_data + n_readout");
    }
}

DiscriminatorSpec make_discriminator(int n_data, int n_readout, int n_layers) {
    DiscriminatorSpec disc;
    disc.n_data = n_data;
    disc.n_readout = n_readout;
    // The candidate sample arrives as a basis state, so the circuit input
    // setting is irrelevant; Zero is recorded for the descriptor.
    disc.ansatz = build_ansatz(n_data + n_readout, n_layers, InputKind::Zero);
    disc.validate();
    return disc;
}

namespace {

double clip01(double v, double eps) {
    return std::min(std::max(v, eps), 1.0 - eps);
}

/// |x> on the data qubits, |0...0> on the readout qubits.
StateVector disc_input(const DiscriminatorSpec& disc, std::uint64_t x_index) {
    return basis_state(
        BitString(disc.n_qubits(), x_index << disc.n_readout));
}

/// Indicator of "readout qubit measured 1" as a diagonal observable.
DiagonalObservable readout_observable(const DiscriminatorSpec& disc) {
    DiagonalObservable obs;
    obs.n_bits = disc.n_qubits();
    obs.values.resize(std::size_t{1} << obs.n_bits);
    const int bit_pos = disc.n_readout - 1;  // qubit n_data under MSB order
    for (std::size_t i = 0; i < obs.values.size(); ++i) {
        obs.values[i] = static_cast<double>((i >> bit_pos) & 1u);
    }
    return obs;
}

std::vector<double> disc_outputs(const DiscriminatorSpec& disc,
                                 const ParamVector& d_params) {
    const DiagonalObservable obs = readout_observable(disc);
    const std::size_t n_outcomes = std::size_t{1} << disc.n_data;
    std::vector<double> outputs(n_outcomes);
    for (std::uint64_t x = 0; x < n_outcomes; ++x) {
        outputs[x] =
            expectation(disc.ansatz, d_params, disc_input(disc, x), obs);
    }
    return outputs;
}

void require_target(const DiscriminatorSpec& disc, const Distribution& target) {
    target.validate();
    if (target.n_bits != disc.n_data) {
        throw std::invalid_argument("qgan: target width does not match n_data");
    }
}

double cross_entropy_disc_loss(const std::vector<double>& outputs,
                               const Distribution& target,
                               const Distribution& p_gen, double eps) {
    double loss = 0.0;
    for (std::size_t x = 0; x < outputs.size(); ++x) {
        const double d = clip01(outputs[x], eps);
        loss -= target.probs[x] * std::log(d) +
                p_gen.probs[x] * std::log(1.0 - d);
    }
    return loss;
}

std::vector<double> disc_grad_from_dists(const DiscriminatorSpec& disc,
                                         const ParamVector& d_params,
                                         const Distribution& target,
                                         const Distribution& p_gen,
                                         double eps) {
    const std::vector<double> outputs = disc_outputs(disc, d_params);
    const DiagonalObservable obs = readout_observable(disc);
    const std::size_t n_outcomes = outputs.size();

    // dL/dD(x), with the clipped D in the denominators.
    std::vector<double> weights(n_outcomes);
    for (std::size_t x = 0; x < n_outcomes; ++x) {
        const double d = clip01(outputs[x], eps);
        weights[x] = p_gen.probs[x] / (1.0 - d) - target.probs[x] / d;
    }

    std::vector<double> grad(d_params.size(), 0.0);
    for (std::uint64_t x = 0; x < n_outcomes; ++x) {
        if (weights[x] == 0.0) continue;
        const StateVector input = disc_input(disc, x);
        for (int j = 0; j < static_cast<int>(d_params.size()); ++j) {
            grad[static_cast<std::size_t>(j)] +=
                weights[x] *
                parameter_shift_grad(disc.ansatz, d_params, input, obs, j);
        }
    }
    return grad;
}

DiagonalObservable gen_loss_observable(const DiscriminatorSpec& disc,
                                       const ParamVector& d_params,
                                       double eps) {
    const std::vector<double> outputs = disc_outputs(disc, d_params);
    DiagonalObservable obs;
    obs.n_bits = disc.n_data;
    obs.values.resize(outputs.size());
    for (std::size_t x = 0; x < outputs.size(); ++x) {
        obs.values[x] = -std::log(clip01(outputs[x], eps));
    }
    return obs;
}

}  // namespace

double discriminator_output(const DiscriminatorSpec& disc,
                            const ParamVector& d_params, const BitString& x) {
    disc.validate();
    if (x.n_bits != disc.n_data) {
        throw std::invalid_argument(
            "discriminator_output: sample width does not match n_data");
    }
    return expectation(disc.ansatz, d_params, disc_input(disc, x.index),
                       readout_observable(disc));
}

Distribution generator_distribution(const GeneratorSpec& gen,
                                    const ParamVector& g_params) {
    return evaluate(gen.ansatz, g_params).probabilities();
}

double disc_loss(const GeneratorSpec& gen, const ParamVector& g_params,
                 const DiscriminatorSpec& disc, const ParamVector& d_params,
                 const Distribution& target, double epsilon_clip) {
    disc.validate();
    require_target(disc, target);
    if (gen.n_data() != disc.n_data) {
        throw std::invalid_argument("qgan: generator width does not match n_data");
    }
    return cross_entropy_disc_loss(disc_outputs(disc, d_params), target,
                                   generator_distribution(gen, g_params),
                                   epsilon_clip);
}

double gen_loss(const GeneratorSpec& gen, const ParamVector& g_params,
                const DiscriminatorSpec& disc, const ParamVector& d_params,
                double epsilon_clip) {
    disc.validate();
    const Distribution p_gen = generator_distribution(gen, g_params);
    const std::vector<double> outputs = disc_outputs(disc, d_params);
    double loss = 0.0;
    for (std::size_t x = 0; x < outputs.size(); ++x) {
        loss -= p_gen.probs[x] * std::log(clip01(outputs[x], epsilon_clip));
    }
    return loss;
}

std::vector<double> disc_loss_grad(const GeneratorSpec& gen,
                                   const ParamVector& g_params,
                                   const DiscriminatorSpec& disc,
                                   const ParamVector& d_params,
                                   const Distribution& target,
                                   double epsilon_clip) {
    disc.validate();
    require_target(disc, target);
    return disc_grad_from_dists(disc, d_params, target,
                                generator_distribution(gen, g_params),
                                epsilon_clip);
}

std::vector<double> gen_loss_grad(const GeneratorSpec& gen,
                                  const ParamVector& g_params,
                                  const DiscriminatorSpec& disc,
                                  const ParamVector& d_params,
                                  double epsilon_clip) {
    disc.validate();
    return grad_vector(gen.ansatz, g_params,
                       gen_loss_observable(disc, d_params, epsilon_clip));
}

void QganConfig::validate() const {
    if (iterations < 1) {
        throw std::invalid_argument("qgan config: iterations must be >= 1");
    }
    if (batch_size < 1) {
        throw std::invalid_argument("qgan config: batch_size must be >= 1");
    }
    if (!(lr_gen > 0.0) || !(lr_disc > 0.0)) {
        throw std::invalid_argument("qgan config: learning rates must be > 0");
    }
    if (disc_steps_per_gen_step < 1) {
        throw std::invalid_argument(
            "qgan config: disc_steps_per_gen_step must be >= 1");
    }
    if (eval_interval < 1) {
        throw std::invalid_argument("qgan config: eval_interval must be >= 1");
    }
    if (!(init_scale >= 0.0)) {
        throw std::invalid_argument("qgan config: init_scale must be >= 0");
    }
    if (!(epsilon_clip > 0.0 && epsilon_clip < 1.0)) {
        throw std::invalid_argument(
            "qgan config: epsilon_clip must be in (0,1)");
    }
}

QganResult train_qgan(const GeneratorSpec& gen, const DiscriminatorSpec& disc,
                      const Distribution& target, const QganConfig& config) {
    config.validate();
    disc.validate();
    require_target(disc, target);
    if (gen.n_data() != disc.n_data) {
        throw std::invalid_argument("qgan: generator width does not match n_data");
    }

    Rng rng(config.seed);
    ParamVector g_params(
        static_cast<std::size_t>(gen.ansatz.parameter_count()));
    for (double& p : g_params) p = rng.normal(0.0, config.init_scale);
    ParamVector d_params(
        static_cast<std::size_t>(disc.ansatz.parameter_count()));
    for (double& p : d_params) p = rng.normal(0.0, config.init_scale);

    QganHistory history;
    const auto record_metrics = [&](int iteration) {
        const Distribution p_gen = generator_distribution(gen, g_params);
        QganRecord rec;
        rec.iteration = iteration;
        rec.d_loss = cross_entropy_disc_loss(disc_outputs(disc, d_params),
                                             target, p_gen, config.epsilon_clip);
        rec.g_loss = gen_loss(gen, g_params, disc, d_params, config.epsilon_clip);
        rec.js = js(target, p_gen);
        rec.kl = kl(target, p_gen);
        rec.tv = tv(target, p_gen);
        if (!std::isfinite(rec.d_loss) || !std::isfinite(rec.g_loss)) {
            throw numerical_error("train_qgan: non-finite loss at iteration " +
                                  std::to_string(iteration));
        }
        history.records.push_back(rec);
    };

    for (int it = 0; it < config.iterations; ++it) {
        if (it % config.eval_interval == 0) record_metrics(it);

        // The distributions feeding the gradients: exact Born/target
        // expectations, or per-iteration empirical batches in sampled mode.
        Distribution target_view = target;
        Distribution gen_view = generator_distribution(gen, g_params);
        if (config.sampled_mode) {
            const std::uint64_t batch =
                static_cast<std::uint64_t>(config.batch_size);
            target_view =
                sample(target, batch, derive_seed(rng.next_u64(), 0)).empirical();
            gen_view =
                sample(gen_view, batch, derive_seed(rng.next_u64(), 1)).empirical();
        }

        for (int k = 0; k < config.disc_steps_per_gen_step; ++k) {
            const std::vector<double> d_grad = disc_grad_from_dists(
                disc, d_params, target_view, gen_view, config.epsilon_clip);
            for (std::size_t i = 0; i < d_params.size(); ++i) {
                d_params[i] -= config.lr_disc * d_grad[i];
            }
        }

        // The generator step is exact in both modes: its observable
        // -log D(x) depends only on the discriminator, and the expectation
        // over the generator state flows through the shift rule.
        const std::vector<double> g_grad = grad_vector(
            gen.ansatz, g_params,
            gen_loss_observable(disc, d_params, config.epsilon_clip));
        for (std::size_t i = 0; i < g_params.size(); ++i) {
            g_params[i] -= config.lr_gen * g_grad[i];
        }
    }
    record_metrics(config.iterations);

    return QganResult{std::move(g_params), std::move(d_params),
                      std::move(history)};
}

SampleSet sample_generator(const GeneratorSpec& gen, const ParamVector& g_params,
                           std::uint64_t n_samples, std::uint64_t seed) {
    return sample(generator_distribution(gen, g_params), n_samples, seed);
}

ParamVector perturb_params(const ParamVector& params, double sigma,
                           std::uint64_t seed) {
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::invalid_argument("perturb_params: sigma must be >= 0");
    }
    Rng rng(seed);
    ParamVector out = params;
    for (double& p : out) p += rng.normal(0.0, sigma);
    return out;
}

}  // namespace qgm
