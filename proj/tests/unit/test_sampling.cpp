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

#include <cmath>
#include <doctest.h>

#include "qgm/datasets.hpp"
#include "test_support.hpp"

using namespace qgm;

TEST_CASE("born_probability of the identity circuit is a point mass") {
    const LayeredAnsatz ansatz = build_ansatz(2, 1);
    const ParamVector zeros(4, 0.0);
    CHECK(born_probability(ansatz, zeros, BitString::from_string("00")) == 1.0);
    CHECK(born_probability(ansatz, zeros, BitString::from_string("01")) == 0.0);
    CHECK_THROWS_AS(born_probability(ansatz, zeros, BitString::from_string("0")),
                    std::invalid_argument);
}

TEST_CASE("born probabilities sum to 1 over all outcomes") {
    Rng rng(19);
    const LayeredAnsatz ansatz = build_ansatz(3, 2);
    const ParamVector params = test::random_params(ansatz, rng);
    double total = 0.0;
    for (std::uint64_t x = 0; x < 8; ++x) {
        total += born_probability(ansatz, params, BitString(3, x));
    }
    CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("born_probability matches the full Born distribution entrywise") {
    Rng rng(20);
    const LayeredAnsatz ansatz = build_ansatz(3, 2, InputKind::Plus);
    const ParamVector params = test::random_params(ansatz, rng);
    const Distribution dist = evaluate(ansatz, params).probabilities();
    for (std::uint64_t x = 0; x < dist.probs.size(); ++x) {
        CHECK(std::abs(dist.probs[x] -
                       born_probability(ansatz, params, BitString(3, x))) <
              1e-12);
    }
}

TEST_CASE("sampling a point mass hits one outcome only") {
    Distribution point{2, {0.0, 0.0, 1.0, 0.0}};
    const SampleSet samples = sample(point, 1000, 4);
    CHECK(samples.total == 1000);
    CHECK(samples.count(2) == 1000);
    CHECK(samples.counts.size() == 1);
}

TEST_CASE("uniform 2-bit frequencies land within the binomial bound") {
    const SampleSet samples = sample(uniform_target(2), 40000, 77);
    for (std::uint64_t x = 0; x < 4; ++x) {
        const double freq =
            static_cast<double>(samples.count(x)) / 40000.0;
        CHECK(std::abs(freq - 0.25) < 0.02);
    }
}

TEST_CASE("a biased coin passes the chi-square test against its own law") {
    Distribution coin{1, {0.25, 0.75}};
    const SampleSet samples = sample(coin, 10000, 5);
    std::vector<std::uint64_t> observed = {samples.count(0), samples.count(1)};
    const double stat = test::chi2_statistic(coin.probs, observed, 10000);
    CHECK(stat < test::chi2_crit_99(1));  // p > 0.01
}

TEST_CASE("random-circuit samples pass the chi-square test") {
    // Seeds fixed once; the statistic is deterministic given them.
    Rng rng(303);
    const LayeredAnsatz ansatz = build_ansatz(3, 2, InputKind::Plus);
    const ParamVector params = test::random_params(ansatz, rng);
    const Distribution dist = evaluate(ansatz, params).probabilities();
    const std::uint64_t n = 100000;
    const SampleSet samples = sample(dist, n, 606);
    std::vector<std::uint64_t> observed(8, 0);
    for (std::uint64_t x = 0; x < 8; ++x) observed[x] = samples.count(x);
    const double stat = test::chi2_statistic(dist.probs, observed, n);
    CHECK(stat < test::chi2_crit_99(7));
}

TEST_CASE("sampling is reproducible bit for bit") {
    const Distribution dist = uniform_target(3);
    CHECK(sample(dist, 5000, 12) == sample(dist, 5000, 12));
    CHECK(sample(dist, 5000, 12) != sample(dist, 5000, 13));
}

TEST_CASE("zero-probability outcomes are never drawn") {
    Distribution holes{2, {0.5, 0.0, 0.0, 0.5}};
    const SampleSet samples = sample(holes, 20000, 9);
    CHECK(samples.count(1) == 0);
    CHECK(samples.count(2) == 0);
}

TEST_CASE("sample rejects an empty request") {
    CHECK_THROWS_AS(sample(uniform_target(1), 0, 1), std::invalid_argument);
}

TEST_CASE("SampleSet::empirical normalizes the counts") {
    SampleSet s;
    s.n_bits = 2;
    s.add(0, 1);
    s.add(3, 3);
    const Distribution emp = s.empirical();
    CHECK(emp.probs[0] == doctest::Approx(0.25));
    CHECK(emp.probs[3] == doctest::Approx(0.75));
    emp.validate();
}
