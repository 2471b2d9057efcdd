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

#include "qgm/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qgm {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

long parse_long(const std::string& value, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const long parsed = std::strtol(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0') {
        throw std::invalid_argument(what + ": expected an integer, got '" +
                                    value + "'");
    }
    return parsed;
}

double parse_double(const std::string& value, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (errno != 0 || end == value.c_str() || *end != '\0') {
        throw std::invalid_argument(what + ": expected a number, got '" +
                                    value + "'");
    }
    return parsed;
}

bool parse_bool(const std::string& value, const std::string& what) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") {
        return true;
    }
    if (value == "false" || value == "0" || value == "no" || value == "off") {
        return false;
    }
    throw std::invalid_argument(what + ": expected a boolean, got '" + value +
                                "'");
}

std::map<std::string, std::string> parse_kv_tokens(const std::string& text,
                                                   const std::string& what) {
    std::map<std::string, std::string> out;
    std::istringstream stream(text);
    std::string token;
    while (stream >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument(what + ": malformed field '" + token +
                                        "'");
        }
        out[token.substr(0, eq)] = token.substr(eq + 1);
    }
    return out;
}

}  // namespace

Config Config::parse_string(const std::string& text) {
    Config config;
    std::istringstream stream(text);
    std::string line;
    std::string section;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto comment = line.find_first_of("#;");
        if (comment != std::string::npos) line.erase(comment);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']' || line.size() < 3) {
                throw std::invalid_argument("config line " +
                                            std::to_string(line_no) +
                                            ": malformed section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            config.sections_[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " +
                                        std::to_string(line_no) +
                                        ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw std::invalid_argument("config line " +
                                        std::to_string(line_no) +
                                        ": empty key");
        }
        config.sections_[section][key] = value;
    }
    return config;
}

Config Config::parse_file(const std::string& path) {
    return parse_string(read_text_file(path));
}

bool Config::has_section(const std::string& section) const {
    return sections_.count(section) != 0;
}

bool Config::has(const std::string& section, const std::string& key) const {
    const auto it = sections_.find(section);
    return it != sections_.end() && it->second.count(key) != 0;
}

std::string Config::get(const std::string& section,
                        const std::string& key) const {
    const auto it = sections_.find(section);
    if (it != sections_.end()) {
        const auto kv = it->second.find(key);
        if (kv != it->second.end()) return kv->second;
    }
    throw std::invalid_argument("config: missing [" + section + "] " + key);
}

std::string Config::get_or(const std::string& section, const std::string& key,
                           const std::string& fallback) const {
    return has(section, key) ? get(section, key) : fallback;
}

long Config::get_int(const std::string& section, const std::string& key) const {
    return parse_long(get(section, key), "[" + section + "] " + key);
}

long Config::get_int_or(const std::string& section, const std::string& key,
                        long fallback) const {
    return has(section, key) ? get_int(section, key) : fallback;
}

std::uint64_t Config::get_u64_or(const std::string& section,
                                 const std::string& key,
                                 std::uint64_t fallback) const {
    if (!has(section, key)) return fallback;
    const std::string value = get(section, key);
    errno = 0;
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0') {
        throw std::invalid_argument("[" + section + "] " + key +
                                    ": expected an unsigned integer, got '" +
                                    value + "'");
    }
    return parsed;
}

double Config::get_double(const std::string& section,
                          const std::string& key) const {
    return parse_double(get(section, key), "[" + section + "] " + key);
}

double Config::get_double_or(const std::string& section, const std::string& key,
                             double fallback) const {
    return has(section, key) ? get_double(section, key) : fallback;
}

bool Config::get_bool_or(const std::string& section, const std::string& key,
                         bool fallback) const {
    if (!has(section, key)) return fallback;
    return parse_bool(get(section, key), "[" + section + "] " + key);
}

void Config::set(const std::string& section, const std::string& key,
                 const std::string& value) {
    sections_[section][key] = value;
}

std::string Config::canonical() const {
    std::string out;
    bool first = true;
    for (const auto& [section, entries] : sections_) {
        if (!first) out += "\n";
        first = false;
        out += "[" + section + "]\n";
        for (const auto& [key, value] : entries) {
            out += key + " = " + value + "\n";
        }
    }
    return out;
}

std::string format_double(double x) {
    char buffer[64];
    // Shortest round-trip form: try increasing precision until it reparses
    // to the same bits.
    for (int precision = 1; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, x);
        if (std::strtod(buffer, nullptr) == x) break;
    }
    return buffer;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open file: " + path);
    }
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::invalid_argument("cannot write file: " + path);
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed: " + path);
    }
}

void write_params_file(const std::string& path, const LayeredAnsatz& ansatz,
                       const ParamVector& params,
                       const std::map<std::string, std::string>& extra) {
    ansatz.validate();
    if (static_cast<int>(params.size()) != ansatz.parameter_count()) {
        throw std::invalid_argument("write_params_file: parameter count mismatch");
    }
    std::string out = "# ansatz n_qubits=" + std::to_string(ansatz.n_qubits) +
                      " n_layers=" + std::to_string(ansatz.n_layers) +
                      " input=" + to_string(ansatz.input_kind);
    for (const auto& [key, value] : extra) {
        out += " " + key + "=" + value;
    }
    out += "\n";
    for (double p : params) out += format_double(p) + "\n";
    write_text_file(path, out);
}

AnsatzParams read_params_file(const std::string& path) {
    std::istringstream stream(read_text_file(path));
    std::string line;
    if (!std::getline(stream, line)) {
        throw std::invalid_argument("params file is empty: " + path);
    }
    const std::string prefix = "# ansatz ";
    if (line.rfind(prefix, 0) != 0) {
        throw std::invalid_argument(
            "params file must start with '# ansatz ...': " + path);
    }
    auto fields = parse_kv_tokens(line.substr(prefix.size()), "params header");
    const auto take = [&](const char* key) {
        const auto it = fields.find(key);
        if (it == fields.end()) {
            throw std::invalid_argument("params header missing field '" +
                                        std::string(key) + "': " + path);
        }
        const std::string value = it->second;
        fields.erase(it);
        return value;
    };
    AnsatzParams out;
    const int n_qubits =
        static_cast<int>(parse_long(take("n_qubits"), "params n_qubits"));
    const int n_layers =
        static_cast<int>(parse_long(take("n_layers"), "params n_layers"));
    const InputKind input = input_kind_from_string(take("input"));
    out.ansatz = build_ansatz(n_qubits, n_layers, input);
    out.extra = fields;
    while (std::getline(stream, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        out.params.push_back(parse_double(line, "params value"));
    }
    if (static_cast<int>(out.params.size()) != out.ansatz.parameter_count()) {
        throw std::invalid_argument(
            "params file has " + std::to_string(out.params.size()) +
            " values but the ansatz needs " +
            std::to_string(out.ansatz.parameter_count()) + ": " + path);
    }
    return out;
}

void write_distribution_tsv(const std::string& path, const Distribution& dist) {
    dist.validate();
    std::string out;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        out += index_to_bits(i, dist.n_bits) + "\t" +
               format_double(dist.probs[i]) + "\n";
    }
    write_text_file(path, out);
}

Distribution read_distribution_tsv(const std::string& path) {
    std::istringstream stream(read_text_file(path));
    std::string line;
    Distribution dist;
    std::size_t row = 0;
    while (std::getline(stream, line)) {
        line = trim(line);
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::invalid_argument("distribution row without a tab: " +
                                        path);
        }
        const BitString bits = BitString::from_string(line.substr(0, tab));
        if (row == 0) {
            dist.n_bits = bits.n_bits;
            dist.probs.assign(std::size_t{1} << bits.n_bits, 0.0);
        }
        if (bits.n_bits != dist.n_bits || bits.index != row) {
            throw std::invalid_argument(
                "distribution rows must cover every outcome in index order: " +
                path);
        }
        dist.probs[row] = parse_double(line.substr(tab + 1), "probability");
        ++row;
    }
    if (row != dist.probs.size()) {
        throw std::invalid_argument("distribution file is truncated: " + path);
    }
    dist.validate(1e-6);
    return dist;
}

void write_counts_table(const std::string& path, const SampleSet& samples) {
    std::string out = "# n_bits=" + std::to_string(samples.n_bits) +
                      " total=" + std::to_string(samples.total) + "\n";
    for (const auto& [outcome, count] : samples.counts) {
        if (count == 0) continue;
        out += index_to_bits(outcome, samples.n_bits) + "\t" +
               std::to_string(count) + "\n";
    }
    write_text_file(path, out);
}

SampleSet read_counts_table(const std::string& path) {
    std::istringstream stream(read_text_file(path));
    std::string line;
    if (!std::getline(stream, line)) {
        throw std::invalid_argument("counts table is empty: " + path);
    }
    const std::string prefix = "# ";
    if (line.rfind(prefix, 0) != 0) {
        throw std::invalid_argument(
            "counts table must start with '# n_bits=...': " + path);
    }
    const auto fields = parse_kv_tokens(line.substr(prefix.size()),
                                        "counts table header");
    const auto n_bits_it = fields.find("n_bits");
    if (n_bits_it == fields.end()) {
        throw std::invalid_argument("counts table header missing n_bits: " +
                                    path);
    }
    SampleSet out;
    out.n_bits =
        static_cast<int>(parse_long(n_bits_it->second, "counts n_bits"));
    if (out.n_bits < 1 || out.n_bits > kMaxQubits) {
        throw std::invalid_argument("counts table n_bits out of range: " + path);
    }
    while (std::getline(stream, line)) {
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::invalid_argument("counts row without a tab: " + path);
        }
        const BitString bits = BitString::from_string(line.substr(0, tab));
        if (bits.n_bits != out.n_bits) {
            throw std::invalid_argument("counts row width mismatch: " + path);
        }
        const long count = parse_long(line.substr(tab + 1), "count");
        if (count < 0) {
            throw std::invalid_argument("counts must be nonnegative: " + path);
        }
        out.add(bits.index, static_cast<std::uint64_t>(count));
    }
    return out;
}

void write_mle_history_csv(const std::string& path, const TrainHistory& history,
                           bool include_timing) {
    std::string out = "iteration,loss,grad_norm,time_ms\n";
    char time_buf[32];
    for (const TrainRecord& rec : history.records) {
        std::snprintf(time_buf, sizeof(time_buf), "%.3f",
                      include_timing ? rec.time_ms : 0.0);
        out += std::to_string(rec.iteration) + "," + format_double(rec.loss) +
               "," + format_double(rec.grad_norm) + "," + time_buf + "\n";
    }
    write_text_file(path, out);
}

void write_qgan_history_csv(const std::string& path,
                            const QganHistory& history) {
    std::string out = "iteration,d_loss,g_loss,js,kl,tv\n";
    for (const QganRecord& rec : history.records) {
        out += std::to_string(rec.iteration) + "," + format_double(rec.d_loss) +
               "," + format_double(rec.g_loss) + "," + format_double(rec.js) +
               "," + format_double(rec.kl) + "," + format_double(rec.tv) + "\n";
    }
    write_text_file(path, out);
}

}  // namespace qgm
