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

#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qgm/cli.hpp"
#include "qgm/datasets.hpp"
#include "qgm/gradients.hpp"
#include "qgm/io.hpp"
#include "qgm/mle.hpp"
#include "qgm/qgan.hpp"
#include "qgm/rng.hpp"

namespace py = pybind11;

using namespace qgm;

PYBIND11_MODULE(qgm, m) {
    m.doc() =
        "Statevector simulation and generative-model training for "
        "parameterized quantum circuits";

    py::register_exception<numerical_error>(m, "NumericalError");

    // ----- states and gates -----

    py::class_<BitString>(m, "BitString")
        .def(py::init<int, std::uint64_t>(), py::arg("n_bits"),
             py::arg("index"))
        .def_static("from_string", &BitString::from_string, py::arg("bits"))
        .def_readonly("n_bits", &BitString::n_bits)
        .def_readonly("index", &BitString::index)
        .def("bit", &BitString::bit, py::arg("k"))
        .def("__str__", &BitString::str)
        .def("__repr__",
             [](const BitString& b) { return "BitString('" + b.str() + "')"; })
        .def(py::self == py::self);

    py::class_<Gate1Q>(m, "Gate1Q")
        .def("dagger", &Gate1Q::dagger)
        .def_property_readonly(
            "matrix",
            [](const Gate1Q& g) {
                return std::vector<Complex>(g.m.begin(), g.m.end());
            },
            "row-major 2x2 entries");
    py::class_<Gate2Q>(m, "Gate2Q")
        .def("dagger", &Gate2Q::dagger)
        .def_property_readonly("matrix", [](const Gate2Q& g) {
            return std::vector<Complex>(g.m.begin(), g.m.end());
        });

    m.def("hadamard", &hadamard);
    m.def("pauli_x", &pauli_x);
    m.def("pauli_y", &pauli_y);
    m.def("pauli_z", &pauli_z);
    m.def("rx", &rx, py::arg("theta"));
    m.def("ry", &ry, py::arg("theta"));
    m.def("rz", &rz, py::arg("lambda_"));
    m.def("cnot", &cnot);
    m.def("controlled_rot", &controlled_rot, py::arg("psi"),
          py::arg("lambda_"));
    m.def("unitarity_error",
          py::overload_cast<const Gate1Q&>(&unitarity_error));
    m.def("unitarity_error",
          py::overload_cast<const Gate2Q&>(&unitarity_error));

    py::class_<Distribution>(m, "Distribution")
        .def(py::init([](int n_bits, std::vector<double> probs) {
                 Distribution d{n_bits, std::move(probs)};
                 d.validate();
                 return d;
             }),
             py::arg("n_bits"), py::arg("probs"))
        .def_readonly("n_bits", &Distribution::n_bits)
        .def_readonly("probs", &Distribution::probs)
        .def("validate", &Distribution::validate, py::arg("tol") = 1e-9);

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<int>(), py::arg("n_qubits"))
        .def_property_readonly("n_qubits", &StateVector::n_qubits)
        .def_property_readonly("dim", &StateVector::dim)
        .def_property_readonly("amplitudes",
                               [](const StateVector& s) {
                                   return std::vector<Complex>(
                                       s.amplitudes().begin(),
                                       s.amplitudes().end());
                               })
        .def("norm_sq", &StateVector::norm_sq)
        .def("apply_1q", &StateVector::apply_1q, py::arg("gate"),
             py::arg("qubit"))
        .def("apply_2q", &StateVector::apply_2q, py::arg("gate"),
             py::arg("control"), py::arg("target"))
        .def("probabilities", &StateVector::probabilities);

    m.def("zero_state", &zero_state, py::arg("n_qubits"));
    m.def("plus_state", &plus_state, py::arg("n_qubits"));
    m.def("basis_state", &basis_state, py::arg("x"));

    // ----- circuit template -----

    py::enum_<InputKind>(m, "InputKind")
        .value("Zero", InputKind::Zero)
        .value("Plus", InputKind::Plus);

    py::class_<LayeredAnsatz>(m, "LayeredAnsatz")
        .def_readonly("n_qubits", &LayeredAnsatz::n_qubits)
        .def_readonly("n_layers", &LayeredAnsatz::n_layers)
        .def_readonly("entangler_pairs", &LayeredAnsatz::entangler_pairs)
        .def_readonly("input_kind", &LayeredAnsatz::input_kind)
        .def("parameter_count", &LayeredAnsatz::parameter_count);

    m.def("build_ansatz", &build_ansatz, py::arg("n_qubits"),
          py::arg("n_layers"), py::arg("input") = InputKind::Zero);
    m.def("input_state", &input_state, py::arg("ansatz"));
    m.def("evaluate", &evaluate, py::arg("ansatz"), py::arg("params"));
    m.def("apply_circuit", &apply_circuit, py::arg("ansatz"), py::arg("params"),
          py::arg("state"));

    // ----- sampling -----

    py::class_<SampleSet>(m, "SampleSet")
        .def(py::init<>())
        .def_readonly("n_bits", &SampleSet::n_bits)
        .def_readonly("counts", &SampleSet::counts)
        .def_readonly("total", &SampleSet::total)
        .def("count", &SampleSet::count, py::arg("outcome"))
        .def("empirical", &SampleSet::empirical)
        .def(py::self == py::self);

    m.def("born_probability", &born_probability, py::arg("ansatz"),
          py::arg("params"), py::arg("x"));
    m.def("sample", &sample, py::arg("dist"), py::arg("n_samples"),
          py::arg("seed"));
    m.def("derive_seed", &derive_seed, py::arg("master"), py::arg("stream"));

    // ----- gradients -----

    py::class_<DiagonalObservable>(m, "DiagonalObservable")
        .def(py::init([](int n_bits, std::vector<double> values) {
                 DiagonalObservable obs{n_bits, std::move(values)};
                 obs.validate();
                 return obs;
             }),
             py::arg("n_bits"), py::arg("values"))
        .def_static("one_hot", &DiagonalObservable::one_hot, py::arg("n_bits"),
                    py::arg("index"))
        .def_readonly("n_bits", &DiagonalObservable::n_bits)
        .def_readonly("values", &DiagonalObservable::values);

    m.def("expectation",
          py::overload_cast<const LayeredAnsatz&, const ParamVector&,
                            const DiagonalObservable&>(&expectation),
          py::arg("ansatz"), py::arg("params"), py::arg("obs"));
    m.def("parameter_shift_grad",
          py::overload_cast<const LayeredAnsatz&, const ParamVector&,
                            const DiagonalObservable&, int>(
              &parameter_shift_grad),
          py::arg("ansatz"), py::arg("params"), py::arg("obs"),
          py::arg("index"));
    m.def("finite_difference_grad", &finite_difference_grad, py::arg("ansatz"),
          py::arg("params"), py::arg("obs"), py::arg("index"), py::arg("h"));
    m.def("grad_vector",
          py::overload_cast<const LayeredAnsatz&, const ParamVector&,
                            const DiagonalObservable&>(&grad_vector),
          py::arg("ansatz"), py::arg("params"), py::arg("obs"));

    // ----- likelihood training -----

    py::class_<Dataset>(m, "Dataset")
        .def(py::init<>())
        .def_readwrite("n_bits", &Dataset::n_bits)
        .def_readonly("samples", &Dataset::samples)
        .def("add", &Dataset::add, py::arg("x"))
        .def("__len__", &Dataset::size)
        .def("count_table", &Dataset::count_table)
        .def_static("from_counts", &Dataset::from_counts, py::arg("counts"))
        .def("to_counts", &Dataset::to_counts);

    py::enum_<Optimizer>(m, "Optimizer")
        .value("GradientDescent", Optimizer::GradientDescent)
        .value("Adam", Optimizer::Adam);

    py::class_<TrainConfig>(m, "TrainConfig")
        .def(py::init<>())
        .def_readwrite("optimizer", &TrainConfig::optimizer)
        .def_readwrite("learning_rate", &TrainConfig::learning_rate)
        .def_readwrite("iterations", &TrainConfig::iterations)
        .def_readwrite("batch_size", &TrainConfig::batch_size)
        .def_readwrite("seed", &TrainConfig::seed)
        .def_readwrite("adam_beta1", &TrainConfig::adam_beta1)
        .def_readwrite("adam_beta2", &TrainConfig::adam_beta2)
        .def_readwrite("adam_epsilon", &TrainConfig::adam_epsilon)
        .def_readwrite("init_scale", &TrainConfig::init_scale)
        .def_readwrite("epsilon_clip", &TrainConfig::epsilon_clip)
        .def("validate", &TrainConfig::validate);

    py::class_<TrainRecord>(m, "TrainRecord")
        .def_readonly("iteration", &TrainRecord::iteration)
        .def_readonly("loss", &TrainRecord::loss)
        .def_readonly("grad_norm", &TrainRecord::grad_norm)
        .def_readonly("time_ms", &TrainRecord::time_ms)
        .def_readonly("clip_activations", &TrainRecord::clip_activations);
    py::class_<TrainHistory>(m, "TrainHistory")
        .def_readonly("records", &TrainHistory::records);

    m.def("nll", &nll, py::arg("ansatz"), py::arg("params"), py::arg("data"),
          py::arg("epsilon_clip") = 1e-12);
    m.def(
        "nll_grad",
        [](const LayeredAnsatz& ansatz, const ParamVector& params,
           const Dataset& batch, double epsilon_clip) {
            int clips = 0;
            auto grad = nll_grad(ansatz, params, batch, epsilon_clip, &clips);
            return py::make_tuple(std::move(grad), clips);
        },
        py::arg("ansatz"), py::arg("params"), py::arg("batch"),
        py::arg("epsilon_clip") = 1e-12,
        "returns (gradient, clip_activations)");
    m.def("train_mle", &train_mle, py::arg("ansatz"), py::arg("data"),
          py::arg("config"), "returns (params, history)");

    // ----- adversarial training -----

    py::class_<GeneratorSpec>(m, "GeneratorSpec")
        .def_readonly("ansatz", &GeneratorSpec::ansatz)
        .def_property_readonly("n_data", &GeneratorSpec::n_data);
    py::class_<DiscriminatorSpec>(m, "DiscriminatorSpec")
        .def_readonly("n_data", &DiscriminatorSpec::n_data)
        .def_readonly("n_readout", &DiscriminatorSpec::n_readout)
        .def_readonly("ansatz", &DiscriminatorSpec::ansatz)
        .def_property_readonly("n_qubits", &DiscriminatorSpec::n_qubits)
        .def_property_readonly("readout_qubit",
                               &DiscriminatorSpec::readout_qubit);

    m.def("make_generator", &make_generator, py::arg("n_data"),
          py::arg("n_layers"), py::arg("input") = InputKind::Plus);
    m.def("make_discriminator", &make_discriminator, py::arg("n_data"),
          py::arg("n_readout"), py::arg("n_layers"));

    py::class_<QganConfig>(m, "QganConfig")
        .def(py::init<>())
        .def_readwrite("iterations", &QganConfig::iterations)
        .def_readwrite("batch_size", &QganConfig::batch_size)
        .def_readwrite("lr_gen", &QganConfig::lr_gen)
        .def_readwrite("lr_disc", &QganConfig::lr_disc)
        .def_readwrite("disc_steps_per_gen_step",
                       &QganConfig::disc_steps_per_gen_step)
        .def_readwrite("seed", &QganConfig::seed)
        .def_readwrite("eval_interval", &QganConfig::eval_interval)
        .def_readwrite("init_scale", &QganConfig::init_scale)
        .def_readwrite("epsilon_clip", &QganConfig::epsilon_clip)
        .def_readwrite("sampled_mode", &QganConfig::sampled_mode)
        .def("validate", &QganConfig::validate);

    py::class_<QganRecord>(m, "QganRecord")
        .def_readonly("iteration", &QganRecord::iteration)
        .def_readonly("d_loss", &QganRecord::d_loss)
        .def_readonly("g_loss", &QganRecord::g_loss)
        .def_readonly("js", &QganRecord::js)
        .def_readonly("kl", &QganRecord::kl)
        .def_readonly("tv", &QganRecord::tv);
    py::class_<QganHistory>(m, "QganHistory")
        .def_readonly("records", &QganHistory::records);
    py::class_<QganResult>(m, "QganResult")
        .def_readonly("g_params", &QganResult::g_params)
        .def_readonly("d_params", &QganResult::d_params)
        .def_readonly("history", &QganResult::history);

    m.def("discriminator_output", &discriminator_output, py::arg("disc"),
          py::arg("d_params"), py::arg("x"));
    m.def("generator_distribution", &generator_distribution, py::arg("gen"),
          py::arg("g_params"));
    m.def("disc_loss", &disc_loss, py::arg("gen"), py::arg("g_params"),
          py::arg("disc"), py::arg("d_params"), py::arg("target"),
          py::arg("epsilon_clip") = 1e-12);
    m.def("gen_loss", &gen_loss, py::arg("gen"), py::arg("g_params"),
          py::arg("disc"), py::arg("d_params"),
          py::arg("epsilon_clip") = 1e-12);
    m.def("disc_loss_grad", &disc_loss_grad, py::arg("gen"),
          py::arg("g_params"), py::arg("disc"), py::arg("d_params"),
          py::arg("target"), py::arg("epsilon_clip") = 1e-12);
    m.def("gen_loss_grad", &gen_loss_grad, py::arg("gen"), py::arg("g_params"),
          py::arg("disc"), py::arg("d_params"),
          py::arg("epsilon_clip") = 1e-12);
    m.def("train_qgan", &train_qgan, py::arg("gen"), py::arg("disc"),
          py::arg("target"), py::arg("config"));
    m.def("sample_generator", &sample_generator, py::arg("gen"),
          py::arg("g_params"), py::arg("n_samples"), py::arg("seed"));
    m.def("perturb_params", &perturb_params, py::arg("params"),
          py::arg("sigma"), py::arg("seed"));

    // ----- targets and metrics -----

    py::class_<Moments>(m, "Moments")
        .def_readonly("mean", &Moments::mean)
        .def_readonly("stddev", &Moments::stddev);

    m.def("uniform_target", &uniform_target, py::arg("n_bits"));
    m.def("gaussian_target", &gaussian_target, py::arg("n_bits"),
          py::arg("mean"), py::arg("std"));
    m.def("gaussian_default_mean", &gaussian_default_mean, py::arg("n_bits"));
    m.def("gaussian_default_std", &gaussian_default_std, py::arg("n_bits"));
    m.def("bars_and_stripes_target", &bars_and_stripes_target, py::arg("rows"),
          py::arg("cols"));
    m.def("dataset_from_distribution", &dataset_from_distribution,
          py::arg("dist"), py::arg("n_samples"), py::arg("seed"));
    m.def("mean_std", py::overload_cast<const Distribution&>(&mean_std),
          py::arg("dist"));
    m.def("mean_std", py::overload_cast<const SampleSet&>(&mean_std),
          py::arg("samples"));
    m.def("kl", &kl, py::arg("p"), py::arg("q"));
    m.def("js", &js, py::arg("p"), py::arg("q"));
    m.def("tv", &tv, py::arg("p"), py::arg("q"));

    // ----- files -----

    m.def("write_params_file", &write_params_file, py::arg("path"),
          py::arg("ansatz"), py::arg("params"),
          py::arg("extra") = std::map<std::string, std::string>{});
    m.def(
        "read_params_file",
        [](const std::string& path) {
            AnsatzParams loaded = read_params_file(path);
            return py::make_tuple(loaded.ansatz, loaded.params, loaded.extra);
        },
        py::arg("path"), "returns (ansatz, params, extra_fields)");
    m.def("write_distribution_tsv", &write_distribution_tsv, py::arg("path"),
          py::arg("dist"));
    m.def("read_distribution_tsv", &read_distribution_tsv, py::arg("path"));
    m.def("write_counts_table", &write_counts_table, py::arg("path"),
          py::arg("samples"));
    m.def("read_counts_table", &read_counts_table, py::arg("path"));

    m.attr("__version__") = "0.1.0";
}
