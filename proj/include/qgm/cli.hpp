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
#include <optional>
#include <string>

#include "qgm/distribution.hpp"

namespace qgm {

/// Process exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;      // bad flags, config, or input files
inline constexpr int kExitNumerical = 3;  // training produced a NaN loss

struct CliOptions {
    std::string out_dir = "out";
    std::optional<std::uint64_t> seed_override;
    bool quiet = false;
    /// Write measured per-step wall time into history.csv. Off by default:
    /// the default output is byte-reproducible for a fixed config and seed.
    bool timings = false;
};

/// Compact target descriptors used by `eval`:
///   uniform:<n_bits>
///   gaussian:<n_bits>[:<mean>[:<std>]]   (defaults: centered, std 2^n/6)
///   bars:<rows>x<cols>
/// Throws std::invalid_argument on anything else.
Distribution parse_target_spec(const std::string& spec);

int cmd_train_mle(const std::string& config_path, const CliOptions& opts);
int cmd_train_qgan(const std::string& config_path, const CliOptions& opts);
int cmd_sample(const std::string& params_path, std::uint64_t n_samples,
               std::uint64_t seed, const CliOptions& opts);
int cmd_eval(const std::string& params_path, const std::string& target_spec,
             std::optional<double> perturb_sigma, std::uint64_t perturb_seed,
             const CliOptions& opts);

/// Full argv-level entry point (the qgm binary is a thin wrapper around it).
int run_cli(int argc, const char* const* argv);

}  // namespace qgm
