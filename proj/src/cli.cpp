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

#include "qgm/cli.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgm/datasets.hpp"
#include "qgm/io.hpp"
#include "qgm/mle.hpp"
#include "qgm/qgan.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace qgm {

namespace {

void note(const CliOptions& opts, const std::string& text) {
    if (!opts.quiet) std::cerr << text << "\n";
}

int guarded(const std::function<void()>& body) {
    try {
        body();
        return kExitOk;
    } catch (const numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

fs::path prepare_out_dir(const CliOptions& opts) {
    const fs::path dir(opts.out_dir);
    fs::create_directories(dir);
    return dir;
}

LayeredAnsatz ansatz_from_config(const Config& cfg, const std::string& section) {
    const int n_qubits = static_cast<int>(cfg.get_int(section, "n_qubits"));
    const int n_layers = static_cast<int>(cfg.get_int(section, "n_layers"));
    const InputKind input =
        input_kind_from_string(cfg.get_or(section, "input", "zero"));
    return build_ansatz(n_qubits, n_layers, input);
}

Distribution target_from_config(const Config& cfg) {
    const std::string kind = cfg.get("target", "kind");
    if (kind == "uniform") {
        return uniform_target(static_cast<int>(cfg.get_int("target", "n_bits")));
    }
    if (kind == "gaussian") {
        const int n_bits = static_cast<int>(cfg.get_int("target", "n_bits"));
        return gaussian_target(
            n_bits, cfg.get_double_or("target", "mean", gaussian_default_mean(n_bits)),
            cfg.get_double_or("target", "std", gaussian_default_std(n_bits)));
    }
    if (kind == "bars_and_stripes") {
        return bars_and_stripes_target(
            static_cast<int>(cfg.get_int("target", "rows")),
            static_cast<int>(cfg.get_int("target", "cols")));
    }
    throw std::invalid_argument(
        "[target] kind must be uniform, gaussian or bars_and_stripes, got '" +
        kind + "'");
}

json metrics_json(const Distribution& target, const Distribution& model) {
    const Moments moments = mean_std(model);
    return json{{"kl", kl(target, model)},
                {"js", js(target, model)},
                {"tv", tv(target, model)},
                {"mean", moments.mean},
                {"std", moments.stddev}};
}

void write_summary(const fs::path& dir, const json& summary) {
    write_text_file((dir / "summary.json").string(), summary.dump(2) + "\n");
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

}  // namespace

Distribution parse_target_spec(const std::string& spec) {
    std::vector<std::string> parts;
    std::string token;
    std::istringstream stream(spec);
    while (std::getline(stream, token, ':')) parts.push_back(token);
    if (parts.empty()) {
        throw std::invalid_argument("empty target spec");
    }
    const auto to_int = [&](const std::string& s) {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("target spec: bad integer '" + s + "'");
        }
        return v;
    };
    const auto to_double = [&](const std::string& s) {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) {
            throw std::invalid_argument("target spec: bad number '" + s + "'");
        }
        return v;
    };
    try {
        if (parts[0] == "uniform" && parts.size() == 2) {
            return uniform_target(to_int(parts[1]));
        }
        if (parts[0] == "gaussian" && parts.size() >= 2 && parts.size() <= 4) {
            const int n_bits = to_int(parts[1]);
            const double mean = parts.size() >= 3 ? to_double(parts[2])
                                                  : gaussian_default_mean(n_bits);
            const double stddev = parts.size() >= 4
                                      ? to_double(parts[3])
                                      : gaussian_default_std(n_bits);
            return gaussian_target(n_bits, mean, stddev);
        }
        if (parts[0] == "bars" && parts.size() == 2) {
            const auto x = parts[1].find('x');
            if (x != std::string::npos) {
                return bars_and_stripes_target(
                    to_int(parts[1].substr(0, x)),
                    to_int(parts[1].substr(x + 1)));
            }
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        // fall through to the usage message below
    }
    throw std::invalid_argument(
        "bad target spec '" + spec +
        "' (expected uniform:<n>, gaussian:<n>[:<mean>[:<std>]] or "
        "bars:<rows>x<cols>)");
}

int cmd_train_mle(const std::string& config_path, const CliOptions& opts) {
    return guarded([&] {
        Config cfg = Config::parse_file(config_path);
        const LayeredAnsatz ansatz = ansatz_from_config(cfg, "ansatz");

        TrainConfig train;
        train.optimizer = optimizer_from_string(
            cfg.get_or("train", "optimizer", "adam"));
        train.learning_rate = cfg.get_double_or("train", "learning_rate", 0.05);
        train.iterations =
            static_cast<int>(cfg.get_int_or("train", "iterations", 500));
        train.batch_size =
            static_cast<int>(cfg.get_int_or("train", "batch_size", 64));
        train.seed = cfg.get_u64_or("train", "seed", 0);
        train.adam_beta1 = cfg.get_double_or("train", "adam_beta1", 0.9);
        train.adam_beta2 = cfg.get_double_or("train", "adam_beta2", 0.999);
        train.adam_epsilon = cfg.get_double_or("train", "adam_epsilon", 1e-8);
        train.init_scale = cfg.get_double_or("train", "init_scale", 0.1);
        train.epsilon_clip = cfg.get_double_or("train", "epsilon_clip", 1e-12);
        if (opts.seed_override) train.seed = *opts.seed_override;
        cfg.set("train", "seed", std::to_string(train.seed));
        train.validate();

        std::optional<Distribution> target;
        if (cfg.has_section("target")) target = target_from_config(cfg);

        Dataset data;
        if (cfg.has("data", "file")) {
            data = Dataset::from_counts(
                read_counts_table(cfg.get("data", "file")));
        } else if (target) {
            const std::uint64_t n_samples = cfg.get_u64_or("data", "n_samples", 1000);
            const std::uint64_t data_seed =
                cfg.get_u64_or("data", "seed", derive_seed(train.seed, 1));
            data = dataset_from_distribution(*target, n_samples, data_seed);
        } else {
            throw std::invalid_argument(
                "train-mle needs a [data] file or a [target] section to draw "
                "from");
        }
        if (data.n_bits != ansatz.n_qubits) {
            throw std::invalid_argument(
                "dataset width does not match the ansatz");
        }

        note(opts, "training " + std::to_string(ansatz.n_qubits) + "-qubit, " +
                       std::to_string(ansatz.n_layers) + "-layer model (" +
                       std::to_string(ansatz.parameter_count()) +
                       " parameters, " + std::to_string(data.size()) +
                       " samples, seed " + std::to_string(train.seed) + ")");
        const auto t0 = std::chrono::steady_clock::now();
        const auto [params, history] = train_mle(ansatz, data, train);
        const double total_ms = elapsed_ms(t0);

        const fs::path dir = prepare_out_dir(opts);
        write_text_file((dir / "config-echo.txt").string(), cfg.canonical());
        write_params_file((dir / "params.txt").string(), ansatz, params);
        write_mle_history_csv((dir / "history.csv").string(), history,
                              opts.timings);
        const Distribution model = evaluate(ansatz, params).probabilities();
        write_distribution_tsv((dir / "distribution.tsv").string(), model);

        long clip_total = 0;
        for (const TrainRecord& rec : history.records) {
            clip_total += rec.clip_activations;
        }
        json summary{{"command", "train-mle"},
                     {"n_qubits", ansatz.n_qubits},
                     {"n_layers", ansatz.n_layers},
                     {"input", to_string(ansatz.input_kind)},
                     {"optimizer", to_string(train.optimizer)},
                     {"iterations", train.iterations},
                     {"batch_size", train.batch_size},
                     {"seed", train.seed},
                     {"n_samples", data.size()},
                     {"parameter_count", ansatz.parameter_count()},
                     {"final_nll", nll(ansatz, params, data, train.epsilon_clip)},
                     {"final_grad_norm", history.records.back().grad_norm},
                     {"clip_activations", clip_total}};
        if (target) summary["vs_target"] = metrics_json(*target, model);
        write_summary(dir, summary);

        std::ostringstream done;
        done << "done in " << total_ms << " ms; final nll "
             << summary["final_nll"].get<double>() << "; wrote "
             << dir.string();
        note(opts, done.str());
    });
}

int cmd_train_qgan(const std::string& config_path, const CliOptions& opts) {
    return guarded([&] {
        Config cfg = Config::parse_file(config_path);
        const GeneratorSpec gen{ansatz_from_config(cfg, "generator")};

        const int n_readout =
            static_cast<int>(cfg.get_int("discriminator", "n_readout"));
        const int disc_layers = static_cast<int>(cfg.get_int_or(
            "discriminator", "n_layers", gen.ansatz.n_layers));
        const DiscriminatorSpec disc =
            make_discriminator(gen.n_data(), n_readout, disc_layers);

        QganConfig train;
        train.iterations =
            static_cast<int>(cfg.get_int_or("train", "iterations", 500));
        train.batch_size =
            static_cast<int>(cfg.get_int_or("train", "batch_size", 10));
        train.lr_gen = cfg.get_double_or("train", "lr_gen", 0.05);
        train.lr_disc = cfg.get_double_or("train", "lr_disc", 0.05);
        train.disc_steps_per_gen_step =
            static_cast<int>(cfg.get_int_or("train", "disc_steps", 1));
        train.seed = cfg.get_u64_or("train", "seed", 0);
        train.eval_interval =
            static_cast<int>(cfg.get_int_or("train", "eval_interval", 10));
        train.init_scale = cfg.get_double_or("train", "init_scale", 0.1);
        train.epsilon_clip = cfg.get_double_or("train", "epsilon_clip", 1e-12);
        train.sampled_mode = cfg.get_bool_or("train", "sampled_mode", false);
        if (opts.seed_override) train.seed = *opts.seed_override;
        cfg.set("train", "seed", std::to_string(train.seed));
        train.validate();

        const Distribution target = target_from_config(cfg);

        note(opts, "adversarial training: " + std::to_string(gen.n_data()) +
                       "-qubit generator vs " +
                       std::to_string(disc.n_qubits()) +
                       "-qubit discriminator, " +
                       std::to_string(train.iterations) + " iterations, seed " +
                       std::to_string(train.seed));
        const auto t0 = std::chrono::steady_clock::now();
        const QganResult result = train_qgan(gen, disc, target, train);
        const double total_ms = elapsed_ms(t0);

        const fs::path dir = prepare_out_dir(opts);
        write_text_file((dir / "config-echo.txt").string(), cfg.canonical());
        write_params_file((dir / "params.txt").string(), gen.ansatz,
                          result.g_params, {{"role", "generator"}});
        write_params_file((dir / "disc_params.txt").string(), disc.ansatz,
                          result.d_params,
                          {{"role", "discriminator"},
                           {"n_data", std::to_string(disc.n_data)},
                           {"n_readout", std::to_string(disc.n_readout)}});
        write_qgan_history_csv((dir / "history.csv").string(), result.history);
        const Distribution model = generator_distribution(gen, result.g_params);
        write_distribution_tsv((dir / "distribution.tsv").string(), model);

        const QganRecord& last = result.history.records.back();
        const Moments target_moments = mean_std(target);
        json summary{{"command", "train-qgan"},
                     {"n_data", gen.n_data()},
                     {"n_readout", disc.n_readout},
                     {"gen_layers", gen.ansatz.n_layers},
                     {"disc_layers", disc.ansatz.n_layers},
                     {"iterations", train.iterations},
                     {"batch_size", train.batch_size},
                     {"seed", train.seed},
                     {"final_d_loss", last.d_loss},
                     {"final_g_loss", last.g_loss},
                     {"vs_target", metrics_json(target, model)},
                     {"target_mean", target_moments.mean},
                     {"target_std", target_moments.stddev}};
        write_summary(dir, summary);

        std::ostringstream done;
        done << "done in " << total_ms << " ms; final tv " << last.tv
             << ", js " << last.js << "; wrote " << dir.string();
        note(opts, done.str());
    });
}

int cmd_sample(const std::string& params_path, std::uint64_t n_samples,
               std::uint64_t seed, const CliOptions& opts) {
    return guarded([&] {
        if (n_samples == 0) {
            throw std::invalid_argument("n_samples must be >= 1");
        }
        const AnsatzParams model = read_params_file(params_path);
        const Distribution dist =
            evaluate(model.ansatz, model.params).probabilities();
        const SampleSet samples = sample(dist, n_samples, seed);
        const fs::path dir = prepare_out_dir(opts);
        write_counts_table((dir / "samples.tsv").string(), samples);
        note(opts, "wrote " + std::to_string(samples.counts.size()) +
                       " outcome rows (" + std::to_string(samples.total) +
                       " samples, seed " + std::to_string(seed) + ") to " +
                       (dir / "samples.tsv").string());
    });
}

int cmd_eval(const std::string& params_path, const std::string& target_spec,
             std::optional<double> perturb_sigma, std::uint64_t perturb_seed,
             const CliOptions& opts) {
    return guarded([&] {
        const AnsatzParams model = read_params_file(params_path);
        const Distribution target = parse_target_spec(target_spec);
        if (target.n_bits != model.ansatz.n_qubits) {
            throw std::invalid_argument(
                "target width does not match the model");
        }
        const Distribution dist =
            evaluate(model.ansatz, model.params).probabilities();
        json out = metrics_json(target, dist);
        if (perturb_sigma) {
            const ParamVector noisy =
                perturb_params(model.params, *perturb_sigma, perturb_seed);
            const Distribution dist_noisy =
                evaluate(model.ansatz, noisy).probabilities();
            out["perturb_sigma"] = *perturb_sigma;
            out["perturbed"] = metrics_json(target, dist_noisy);
            out["js_shift"] = js(dist, dist_noisy);
        }
        std::cout << out.dump(2) << "\n";
    });
}

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"parameterized-quantum-circuit generative modeling toolkit"};
    app.require_subcommand(1);

    CliOptions opts;
    std::uint64_t seed_override = 0;
    app.add_option("--out-dir", opts.out_dir,
                   "directory for output artifacts")
        ->capture_default_str();
    auto* seed_flag =
        app.add_option("--seed", seed_override,
                       "override the config seed / set the sampling seed");
    app.add_flag("--quiet", opts.quiet, "suppress progress messages");
    app.add_flag("--timings", opts.timings,
                 "record measured step times in history.csv (makes the file "
                 "run-dependent)");

    std::string config_path;
    std::string params_path;
    std::string target_spec;
    std::uint64_t n_samples = 1000;
    double perturb_sigma = 0.0;

    CLI::App* train_mle_cmd = app.add_subcommand(
        "train-mle", "maximum-likelihood training of a Born machine");
    train_mle_cmd->add_option("config", config_path, "config file")->required();

    CLI::App* train_qgan_cmd =
        app.add_subcommand("train-qgan", "adversarial generator training");
    train_qgan_cmd->add_option("config", config_path, "config file")->required();

    CLI::App* sample_cmd = app.add_subcommand(
        "sample", "draw measurement samples from a trained model");
    sample_cmd->add_option("params", params_path, "params.txt file")->required();
    sample_cmd->add_option("--n-samples", n_samples, "number of draws")
        ->capture_default_str();

    CLI::App* eval_cmd = app.add_subcommand(
        "eval", "compare a trained model against a target distribution");
    eval_cmd->add_option("params", params_path, "params.txt file")->required();
    eval_cmd->add_option("--target", target_spec,
                         "target spec: uniform:<n>, "
                         "gaussian:<n>[:<mean>[:<std>]], bars:<r>x<c>")
        ->required();
    CLI::Option* perturb_opt = eval_cmd->add_option(
        "--perturb", perturb_sigma, "Gaussian parameter noise to apply");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*seed_flag) opts.seed_override = seed_override;
    const std::uint64_t aux_seed = opts.seed_override.value_or(0);

    if (train_mle_cmd->parsed()) return cmd_train_mle(config_path, opts);
    if (train_qgan_cmd->parsed()) return cmd_train_qgan(config_path, opts);
    if (sample_cmd->parsed()) {
        return cmd_sample(params_path, n_samples, aux_seed, opts);
    }
    if (eval_cmd->parsed()) {
        std::optional<double> sigma;
        if (*perturb_opt) sigma = perturb_sigma;
        return cmd_eval(params_path, target_spec, sigma, aux_seed, opts);
    }
    return kExitUsage;
}

}  // namespace qgm
