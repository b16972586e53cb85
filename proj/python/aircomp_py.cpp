// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "aircomp/baselines.hpp"
#include "aircomp/config.hpp"
#include "aircomp/errors.hpp"
#include "aircomp/functional.hpp"
#include "aircomp/linalg.hpp"
#include "aircomp/sia.hpp"
#include "aircomp/sim_engine.hpp"
#include "aircomp/system_model.hpp"

namespace py = pybind11;
using namespace aircomp;

namespace {

EfficiencyScheme parse_efficiency_scheme(const std::string& s)
{
    if (s == "sia")
        return EfficiencyScheme::sia;
    if (s == "conventional_ia")
        return EfficiencyScheme::conventional_ia;
    throw ConfigError("unknown efficiency scheme '" + s + "'");
}

py::dict point_dict(const SweepPoint& p)
{
    py::dict d;
    d["snr_db"] = p.snr_db;
    d["trials"] = p.trials;
    d["nmse_mean"] = p.nmse_mean;
    d["nmse_std_error"] = p.nmse_std_error;
    d["nmse_median"] = p.nmse_median;
    d["mse_mean"] = p.mse_mean;
    d["leakage_mean"] = p.leakage_mean;
    d["leakage_max"] = p.leakage_max;
    d["aligned_rank_min"] = p.aligned_rank_min;
    d["aligned_rank_max"] = p.aligned_rank_max;
    d["analytic_nmse"] = p.analytic_nmse;
    d["tx_power_mean"] = p.tx_power_mean;
    d["function_nmse"] = p.function_nmse;
    return d;
}

py::dict trial_dict(const TrialResult& r)
{
    py::dict d;
    d["nmse"] = r.nmse;
    d["relative_error"] = r.relative_error;
    d["leakage"] = r.leakage;
    d["aligned_rank"] = r.aligned_rank;
    d["noise_std"] = r.noise_std;
    d["tx_power"] = r.tx_power;
    return d;
}

} // namespace

PYBIND11_MODULE(_aircomp, m)
{
    m.doc() = "Two-cell over-the-air computation with simultaneous signal-and-interference "
              "alignment";

    py::register_exception<Error>(m, "AirCompError", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<SizeMismatch>(m, "SizeMismatch", PyExc_ValueError);
    py::register_exception<NearSingular>(m, "NearSingular", PyExc_ArithmeticError);
    py::register_exception<RankDeficient>(m, "RankDeficient", PyExc_ArithmeticError);
    py::register_exception<DegenerateChannels>(m, "DegenerateChannels", PyExc_RuntimeError);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init<>())
        .def_readwrite("M", &SystemConfig::M)
        .def_readwrite("K", &SystemConfig::K)
        .def_readwrite("snr_db_grid", &SystemConfig::snr_db_grid)
        .def_readwrite("trials", &SystemConfig::trials)
        .def_readwrite("seed", &SystemConfig::seed)
        .def_property(
            "scheme", [](const SystemConfig& c) { return std::string(to_string(c.scheme)); },
            [](SystemConfig& c, const std::string& s) { c.scheme = parse_scheme(s); })
        .def_property(
            "function", [](const SystemConfig& c) { return std::string(to_string(c.function)); },
            [](SystemConfig& c, const std::string& s) { c.function = parse_function(s); })
        .def_property(
            "reference", [](const SystemConfig& c) { return std::string(to_string(c.reference)); },
            [](SystemConfig& c, const std::string& s) { c.reference = parse_reference(s); })
        .def_property(
            "snr_reference",
            [](const SystemConfig& c) { return std::string(to_string(c.snr_reference)); },
            [](SystemConfig& c, const std::string& s) { c.snr_reference = parse_snr_reference(s); })
        .def("validate", [](const SystemConfig& c) { validate(c); })
        .def("__repr__", [](const SystemConfig& c) {
            return "SystemConfig(M=" + std::to_string(c.M) + ", K=" + std::to_string(c.K) +
                   ", trials=" + std::to_string(c.trials) + ", scheme=" +
                   std::string(to_string(c.scheme)) + ")";
        });

    // Linear algebra
    m.def("inverse", &linalg::inverse, py::arg("a"));
    m.def("right_inverse", &linalg::right_inverse, py::arg("a"));
    m.def("left_null_space_basis", &linalg::left_null_space_basis, py::arg("b"));
    m.def("numerical_rank", &linalg::numerical_rank, py::arg("a"),
          py::arg("tol") = linalg::kDefaultRankTolerance);

    // System model
    m.def("partition", [](int M) {
        const auto p = partition(M);
        return py::make_tuple(p.n_ac, p.n_prime);
    }, py::arg("M"), "(n_ac, n_prime) = (floor(M/2), ceil(M/2))");

    // Scheme construction for one seeded channel draw.
    m.def("sia_matrices", [](int M, int K, std::uint64_t seed, const std::string& reference) {
        Rng rng = make_stream(seed, 0);
        const auto channels = draw_channels(M, K, rng);
        const auto B = build_reference_matrices(M, partition(M).n_prime, rng,
                                                parse_reference(reference));
        const auto sia = build_sia(channels, B);
        py::dict d;
        d["H"] = channels.H;
        d["G"] = channels.G;
        d["A"] = sia.A;
        d["B"] = sia.B;
        d["W"] = sia.W;
        d["aligned_rank"] = py::make_tuple(aligned_interference_dimension(0, channels, sia.W),
                                           aligned_interference_dimension(1, channels, sia.W));
        return d;
    }, py::arg("M"), py::arg("K"), py::arg("seed") = 1, py::arg("reference") = "random");

    m.def("recover", &recover, py::arg("A"), py::arg("y_tilde"));

    // Analytic baselines
    m.def("conventional_ia_array_size", &conventional_ia_array_size, py::arg("n_pu"), py::arg("K"));
    m.def("sia_array_size", &sia_array_size, py::arg("n_ac"));
    m.def("communication_efficiency", [](const std::string& scheme, int M, int K) {
        const auto r = communication_efficiency(parse_efficiency_scheme(scheme), M, K);
        return py::make_tuple(r.num(), r.den());
    }, py::arg("scheme"), py::arg("M"), py::arg("K"), "exact efficiency as (num, den)");
    m.def("optimal_partition_search", [](int M) {
        const auto r = optimal_partition_search(M);
        py::dict d;
        d["signal_dim"] = r.signal_dim;
        d["interference_dim"] = r.interference_dim;
        d["dof"] = r.dof;
        d["balanced"] = r.balanced;
        return d;
    }, py::arg("M"));

    // Function layer
    m.def("preprocess", [](const std::string& kind, int K, const std::vector<double>& data) {
        return preprocess(FunctionSpec{parse_function(kind), K}, data);
    }, py::arg("kind"), py::arg("K"), py::arg("data"));
    m.def("postprocess", [](const std::string& kind, int K, const ComplexVector& aggregate) {
        return postprocess(FunctionSpec{parse_function(kind), K}, aggregate);
    }, py::arg("kind"), py::arg("K"), py::arg("aggregate"));

    // Simulation
    m.def("analytic_noise_mse", &analytic_noise_mse, py::arg("A"), py::arg("noise_std"),
          py::arg("signal_power"));
    m.def("run_trial", [](const SystemConfig& c, std::uint64_t trial_index, double snr_db) {
        return trial_dict(run_trial(c, trial_index, snr_db));
    }, py::arg("config"), py::arg("trial_index"), py::arg("snr_db"));
    m.def("run_sweep", [](const SystemConfig& c, int workers) {
        SweepResult r;
        {
            py::gil_scoped_release release;
            r = run_sweep(c, workers);
        }
        py::dict d;
        py::list points;
        for (const auto& p : r.points)
            points.append(point_dict(p));
        d["points"] = points;
        d["dof_slope"] = r.dof_slope;
        return d;
    }, py::arg("config"), py::arg("workers") = 0);
}
