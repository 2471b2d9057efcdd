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

#include <algorithm>
#include <cmath>
#include <doctest.h>
#include <numbers>

#include "qgm/datasets.hpp"
#include "test_support.hpp"

using namespace qgm;

namespace {

Dataset repeated(const std::string& bits, int copies) {
    Dataset data;
    for (int i = 0; i < copies; ++i) data.add(BitString::from_string(bits));
    return data;
}

}  // namespace

TEST_CASE("nll of a perfectly fit point mass is zero") {
    const LayeredAnsatz ansatz = build_ansatz(2, 1);
    const ParamVector zeros(4, 0.0);
    CHECK(nll(ansatz, zeros, repeated("00", 5)) == doctest::Approx(0.0));
}

TEST_CASE("an unreachable sample contributes -log(epsilon_clip)") {
    const LayeredAnsatz ansatz = build_ansatz(2, 1);
    const ParamVector zeros(4, 0.0);
    Dataset data = repeated("00", 1);
    data.add(BitString::from_string("01"));
    const double expected = 0.5 * (-std::log(1e-12));
    CHECK(nll(ansatz, zeros, data, 1e-12) == doctest::Approx(expected));
}

TEST_CASE("the uniform model scores n*log(2) on any dataset") {
    const LayeredAnsatz ansatz = build_ansatz(3, 1, InputKind::Plus);
    const ParamVector zeros(static_cast<std::size_t>(ansatz.parameter_count()),
                            0.0);
    Dataset data = repeated("010", 4);
    data.add(BitString::from_string("111"));
    CHECK(nll(ansatz, zeros, data) == doctest::Approx(3.0 * std::log(2.0)));
}

TEST_CASE("nll input validation") {
    const LayeredAnsatz ansatz = build_ansatz(2, 1);
    const ParamVector zeros(4, 0.0);
    CHECK_THROWS_AS(nll(ansatz, zeros, Dataset{}), std::invalid_argument);
    CHECK_THROWS_AS(nll(ansatz, zeros, repeated("0", 3)),
                    std::invalid_argument);
}

TEST_CASE("nll_grad matches finite differences of nll") {
    Rng rng(211);
    const LayeredAnsatz ansatz = build_ansatz(3, 2);
    const ParamVector params = test::random_params(ansatz, rng);
    Dataset data;
    for (int i = 0; i < 20; ++i) {
        data.add(BitString(3, rng.uniform_int(8)));
    }
    const auto grad = nll_grad(ansatz, params, data);
    const double h = 1e-5;
    for (int i = 0; i < ansatz.parameter_count(); ++i) {
        ParamVector plus = params, minus = params;
        plus[static_cast<std::size_t>(i)] += h;
        minus[static_cast<std::size_t>(i)] -= h;
        const double fd =
            (nll(ansatz, plus, data) - nll(ansatz, minus, data)) / (2 * h);
        CHECK(std::abs(grad[static_cast<std::size_t>(i)] - fd) < 1e-5);
    }
}

TEST_CASE("the batch gradient ignores sample order") {
    Rng rng(223);
    const LayeredAnsatz ansatz = build_ansatz(2, 1);
    const ParamVector params = test::random_params(ansatz, rng);
    Dataset batch;
    batch.add(BitString::from_string("01"));
    batch.add(BitString::from_string("11"));
    batch.add(BitString::from_string("01"));
    Dataset shuffled;
    shuffled.add(BitString::from_string("11"));
    shuffled.add(BitString::from_string("01"));
    shuffled.add(BitString::from_string("01"));
    CHECK(nll_grad(ansatz, params, batch) == nll_grad(ansatz, params, shuffled));
}

TEST_CASE("the gradient vanishes at an exactly fit optimum") {
    // RY(pi) sends |0> to |1>, so a dataset of all-ones is fit exactly.
    const LayeredAnsatz ansatz = build_ansatz(1, 1);
    const auto grad = nll_grad(ansatz, {std::numbers::pi}, repeated("1", 8));
    double norm = 0.0;
    for (double g : grad) norm += g * g;
    CHECK(std::sqrt(norm) < 1e-6);
}

TEST_CASE("training fits the 1-qubit point mass") {
    const LayeredAnsatz ansatz = build_ansatz(1, 1);
    const Dataset data = repeated("1", 50);
    TrainConfig config;
    config.optimizer = Optimizer::Adam;
    config.learning_rate = 0.1;
    config.iterations = 200;
    config.batch_size = 16;
    config.seed = 3;
    const auto [params, history] = train_mle(ansatz, data, config);
    CHECK(born_probability(ansatz, params, BitString::from_string("1")) > 0.99);
    REQUIRE(history.records.size() == 200);
    // The fit improves over training.
    CHECK(nll(ansatz, params, data) < history.records.front().loss);
    // Once the model covers the data the probability floor goes unused.
    CHECK(history.records.back().clip_activations == 0);
}

TEST_CASE("loss decreases on the point-mass task for ten seeds") {
    const LayeredAnsatz ansatz = build_ansatz(1, 1);
    const Dataset data = repeated("1", 50);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        TrainConfig config;
        config.learning_rate = 0.1;
        config.iterations = 200;
        config.batch_size = 16;
        config.seed = seed;
        const auto [params, history] = train_mle(ansatz, data, config);
        CHECK(nll(ansatz, params, data) < history.records.front().loss);
    }
}

TEST_CASE("teacher-student training recovers the target distribution") {
    Rng teacher_rng(314);
    const LayeredAnsatz teacher = build_ansatz(3, 2);
    const ParamVector teacher_params = test::random_params(teacher, teacher_rng);
    const Distribution target = evaluate(teacher, teacher_params).probabilities();
    const Dataset data = dataset_from_distribution(target, 4096, 2718);

    TrainConfig config;
    config.iterations = 500;
    config.batch_size = 64;
    config.seed = 1;
    const LayeredAnsatz student = build_ansatz(3, 2);
    const auto [params, history] = train_mle(student, data, config);
    const Distribution model = evaluate(student, params).probabilities();
    CHECK(kl(target, model) < 0.05);
}

TEST_CASE("training is deterministic under the seed") {
    const LayeredAnsatz ansatz = build_ansatz(2, 2);
    Dataset data = repeated("11", 30);
    data.add(BitString::from_string("00"));
    TrainConfig config;
    config.iterations = 50;
    config.seed = 99;
    const auto [params_a, history_a] = train_mle(ansatz, data, config);
    const auto [params_b, history_b] = train_mle(ansatz, data, config);
    CHECK(params_a == params_b);
    REQUIRE(history_a.records.size() == history_b.records.size());
    for (std::size_t i = 0; i < history_a.records.size(); ++i) {
        CHECK(history_a.records[i].loss == history_b.records[i].loss);
        CHECK(history_a.records[i].grad_norm == history_b.records[i].grad_norm);
    }

    config.seed = 100;
    const auto [params_c, history_c] = train_mle(ansatz, data, config);
    CHECK(params_a != params_c);
}

TEST_CASE("nll is bounded below by the empirical entropy") {
    Rng rng(271);
    const LayeredAnsatz ansatz = build_ansatz(2, 2);
    Dataset data;
    for (int i = 0; i < 64; ++i) data.add(BitString(2, rng.uniform_int(4)));
    const Distribution empirical = data.to_counts().empirical();
    double entropy = 0.0;
    for (double p : empirical.probs) {
        if (p > 0.0) entropy -= p * std::log(p);
    }
    const ParamVector params = test::random_params(ansatz, rng);
    CHECK(nll(ansatz, params, data) > entropy - 1e-9);
}

TEST_CASE("config validation rejects bad settings") {
    TrainConfig config;
    config.iterations = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = TrainConfig{};
    config.learning_rate = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = TrainConfig{};
    config.batch_size = 0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    config = TrainConfig{};
    config.epsilon_clip = 0.0;
    CHECK_THROWS_AS(config.validate(), std::invalid_argument);
    CHECK_NOTHROW(TrainConfig{}.validate());
}

TEST_CASE("dataset count table and round trips") {
    Dataset data;
    data.add(BitString::from_string("01"));
    data.add(BitString::from_string("01"));
    data.add(BitString::from_string("10"));
    const auto table = data.count_table();
    CHECK(table.at(1) == 2);
    CHECK(table.at(2) == 1);

    const SampleSet counts = data.to_counts();
    const Dataset rebuilt = Dataset::from_counts(counts);
    CHECK(rebuilt.size() == data.size());
    CHECK(rebuilt.to_counts() == counts);

    CHECK_THROWS_AS(data.add(BitString::from_string("000")),
                    std::invalid_argument);
}
