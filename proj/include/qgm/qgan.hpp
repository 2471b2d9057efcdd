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
#include <vector>

#include "qgm/ansatz.hpp"
#include "qgm/errors.hpp"
#include "qgm/sampling.hpp"

namespace qgm {

/// The generator is a layered ansatz over the data qubits; its Born
/// distribution is the model distribution.
struct GeneratorSpec {
    LayeredAnsatz ansatz;

    int n_data() const { return ansatz.n_qubits; }
};

GeneratorSpec make_generator(int n_data, int n_layers,
                             InputKind input = InputKind::Plus);

/// The discriminator circuit acts on n_data data qubits (basis-encoding the
/// candidate sample) plus n_readout ancilla qubits; its verdict is the
/// probability of measuring the first ancilla as 1, read as P(real).
struct DiscriminatorSpec {
    int n_data = 0;
    int n_readout = 0;
    LayeredAnsatz ansatz;  // over n_data + n_readout qubits

    int n_qubits() const { return n_data + n_readout; }
    int readout_qubit() const { return n_data; }

    void validate() const;
};

DiscriminatorSpec make_discriminator(int n_data, int n_readout, int n_layers);

struct QganConfig {
    int iterations = 500;
    int batch_size = 10;
    double lr_gen = 0.05;
    double lr_disc = 0.05;
    int disc_steps_per_gen_step = 1;
    std::uint64_t seed = 0;
    int eval_interval = 10;
    double init_scale = 0.1;
    double epsilon_clip = 1e-12;
    /// Off (the default): losses and gradients use exact expectations over
    /// all 2^n_data outcomes, so no sampling noise enters optimization and
    /// batch_size is recorded but unused. On: each iteration the
    /// discriminator update weights its loss with empirical distributions of
    /// batch_size seeded draws from the target and the generator instead of
    /// the exact ones (the generator step stays exact; its observable depends
    /// only on the discriminator).
    bool sampled_mode = false;

    void validate() const;
};

struct QganRecord {
    int iteration = 0;
    double d_loss = 0.0;
    double g_loss = 0.0;
    double js = 0.0;  // base-2 JS(target, generated)
    double kl = 0.0;  // KL(target || generated), nats
    double tv = 0.0;
};

struct QganHistory {
    std::vector<QganRecord> records;
};

struct QganResult {
    ParamVector g_params;
    ParamVector d_params;
    QganHistory history;
};

/// P(readout = 1) after running the discriminator on |x> ⊗ |0...0>.
/// Always in [0, 1]: it is a Born probability.
double discriminator_output(const DiscriminatorSpec& disc,
                            const ParamVector& d_params, const BitString& x);

/// Born distribution of the generator circuit.
Distribution generator_distribution(const GeneratorSpec& gen,
                                    const ParamVector& g_params);

/// Discriminator cross-entropy
///   -[ sum_x target[x] log D(x) + sum_x p_gen[x] log(1 - D(x)) ],
/// with D clipped into [epsilon_clip, 1 - epsilon_clip] and both expectations
/// taken exactly over all 2^n_data outcomes.
double disc_loss(const GeneratorSpec& gen, const ParamVector& g_params,
                 const DiscriminatorSpec& disc, const ParamVector& d_params,
                 const Distribution& target, double epsilon_clip = 1e-12);

/// Non-saturating generator loss -sum_x p_gen[x] log D(x).
double gen_loss(const GeneratorSpec& gen, const ParamVector& g_params,
                const DiscriminatorSpec& disc, const ParamVector& d_params,
                double epsilon_clip = 1e-12);

/// Gradient of disc_loss over the discriminator parameters; dD/dparam comes
/// from the shift rules, per input basis state.
std::vector<double> disc_loss_grad(const GeneratorSpec& gen,
                                   const ParamVector& g_params,
                                   const DiscriminatorSpec& disc,
                                   const ParamVector& d_params,
                                   const Distribution& target,
                                   double epsilon_clip = 1e-12);

/// Gradient of gen_loss over the generator parameters: the shift-rule
/// gradient of the diagonal observable f(x) = -log D(x).
std::vector<double> gen_loss_grad(const GeneratorSpec& gen,
                                  const ParamVector& g_params,
                                  const DiscriminatorSpec& disc,
                                  const ParamVector& d_params,
                                  double epsilon_clip = 1e-12);

/// Alternating adversarial training: per iteration,
/// disc_steps_per_gen_step gradient-descent updates of the discriminator,
/// then one generator update. Metrics are recorded at iteration 0, every
/// eval_interval iterations, and after the final update. Deterministic given
/// config.seed. Throws numerical_error on a non-finite loss.
QganResult train_qgan(const GeneratorSpec& gen, const DiscriminatorSpec& disc,
                      const Distribution& target, const QganConfig& config);

/// Measure n_samples shots from the generator's distribution.
SampleSet sample_generator(const GeneratorSpec& gen, const ParamVector& g_params,
                           std::uint64_t n_samples, std::uint64_t seed);

/// params + i.i.d. N(0, sigma^2) noise; sigma must be >= 0.
ParamVector perturb_params(const ParamVector& params, double sigma,
                           std::uint64_t seed);

}  // namespace qgm
