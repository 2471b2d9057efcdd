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
#include <string>

#include "qgm/ansatz.hpp"
#include "qgm/distribution.hpp"
#include "qgm/mle.hpp"
#include "qgm/qgan.hpp"
#include "qgm/sampling.hpp"

namespace qgm {

/// Flat INI-style configuration: [section] headers, key = value lines,
/// '#' or ';' comments. Values are plain strings until a typed getter asks.
class Config {
  public:
    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text);

    bool has_section(const std::string& section) const;
    bool has(const std::string& section, const std::string& key) const;

    /// Typed getters; the non-_or forms throw std::invalid_argument when the
    /// key is missing, every form throws on an unparsable value.
    std::string get(const std::string& section, const std::string& key) const;
    std::string get_or(const std::string& section, const std::string& key,
                       const std::string& fallback) const;
    long get_int(const std::string& section, const std::string& key) const;
    long get_int_or(const std::string& section, const std::string& key,
                    long fallback) const;
    std::uint64_t get_u64_or(const std::string& section, const std::string& key,
                             std::uint64_t fallback) const;
    double get_double(const std::string& section, const std::string& key) const;
    double get_double_or(const std::string& section, const std::string& key,
                         double fallback) const;
    bool get_bool_or(const std::string& section, const std::string& key,
                     bool fallback) const;

    void set(const std::string& section, const std::string& key,
             const std::string& value);

    /// Canonical text form: sections and keys sorted, one key = value per
    /// line. Parsing the result reproduces the Config.
    std::string canonical() const;

  private:
    std::map<std::string, std::map<std::string, std::string>> sections_;
};

/// Shortest text form of a double that parses back to the same bits.
std::string format_double(double x);

/// Parameter file: a '# ansatz ...' descriptor header, then one angle per
/// line. Extra header fields are preserved round-trip.
struct AnsatzParams {
    LayeredAnsatz ansatz;
    ParamVector params;
    std::map<std::string, std::string> extra;
};

void write_params_file(const std::string& path, const LayeredAnsatz& ansatz,
                       const ParamVector& params,
                       const std::map<std::string, std::string>& extra = {});
AnsatzParams read_params_file(const std::string& path);

/// distribution.tsv: one "bitstring<TAB>probability" row per outcome, all
/// 2^n rows, sorted by index.
void write_distribution_tsv(const std::string& path, const Distribution& dist);
Distribution read_distribution_tsv(const std::string& path);

/// Counts table: '# n_bits=<n> total=<N>' header, then
/// "bitstring<TAB>count" rows for the nonzero counts, sorted by index.
void write_counts_table(const std::string& path, const SampleSet& samples);
SampleSet read_counts_table(const std::string& path);

/// history.csv for likelihood training: iteration,loss,grad_norm,time_ms.
/// Unless include_timing is set the time_ms column is written as 0.000 so
/// reruns of the same seed produce byte-identical files.
void write_mle_history_csv(const std::string& path, const TrainHistory& history,
                           bool include_timing = false);

/// history.csv for adversarial training: iteration,d_loss,g_loss,js,kl,tv.
void write_qgan_history_csv(const std::string& path,
                            const QganHistory& history);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qgm
