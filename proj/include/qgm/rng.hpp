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
#include <random>

namespace qgm {

/// The one random number generator used anywhere randomness appears.
///
/// The algorithm identity is pinned so a 64-bit seed reproduces a run:
///   - engine: std::mt19937_64 seeded directly with the seed (the mt19937_64
///     output sequence is fixed by the C++ standard, so it is identical on
///     every platform);
///   - uniform doubles in [0, 1): the top 53 bits of one engine draw,
///     scaled by 2^-53;
///   - bounded integers: bitmask rejection on engine draws (unbiased);
///   - normals: Box-Muller on two uniform draws (no internal caching, so the
///     stream position never depends on call history).
/// std::uniform_*_distribution and std::normal_distribution are deliberately
/// not used; their outputs are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform();

    /// Uniform integer in [0, n); n must be >= 1.
    std::uint64_t uniform_int(std::uint64_t n);

    double normal(double mean = 0.0, double stddev = 1.0);

  private:
    std::mt19937_64 engine_;
};

/// Seed-splitting rule for independent streams: stream k of a run seeded with
/// `master` uses derive_seed(master, k), one splitmix64 finalizer round over
/// master + (k + 1) * golden-ratio constant.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace qgm
