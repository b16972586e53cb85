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

#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "aircomp/baselines.hpp"
#include "aircomp/config.hpp"
#include "aircomp/errors.hpp"
#include "aircomp/report.hpp"
#include "aircomp/sim_engine.hpp"

namespace aircomp::cli {

namespace {

struct RunFlags {
    std::string config_path;
    std::optional<int> antennas;
    std::optional<int> devices;
    std::optional<std::string> snr_db;
    std::optional<int> trials;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> scheme;
    std::optional<std::string> function;
    std::optional<std::string> reference;
    std::optional<std::string> snr_reference;
    std::string out_path;
    std::string format = "csv";
    int workers = 0;
};

struct CompareFlags {
    std::string antennas_list;
    std::string devices_list;
    std::string out_path;
};

struct PlotFlags {
    std::string in_path;
    std::string out_path;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out)
{
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw Error("cannot open '" + path + "' for writing");
    file << text;
    if (!file)
        throw Error("failed writing '" + path + "'");
}

SystemConfig resolve_config(const RunFlags& f)
{
    SystemConfig cfg;
    if (!f.config_path.empty())
        cfg = load_config(f.config_path, cfg);
    if (f.antennas)
        cfg.M = *f.antennas;
    if (f.devices)
        cfg.K = *f.devices;
    if (f.snr_db)
        cfg.snr_db_grid = parse_double_list(*f.snr_db);
    if (f.trials)
        cfg.trials = *f.trials;
    if (f.seed)
        cfg.seed = *f.seed;
    if (f.scheme)
        cfg.scheme = parse_scheme(*f.scheme);
    if (f.function)
        cfg.function = parse_function(*f.function);
    if (f.reference)
        cfg.reference = parse_reference(*f.reference);
    if (f.snr_reference)
        cfg.snr_reference = parse_snr_reference(*f.snr_reference);
    validate(cfg);
    return cfg;
}

int cmd_run(const RunFlags& f, std::ostream& out)
{
    const char* ci = std::getenv("CI");
    if (ci && *ci && !f.seed)
        throw ConfigError("--seed is mandatory when CI is set");
    if (f.format != "csv" && f.format != "json")
        throw ConfigError("--format must be csv or json");

    const SystemConfig cfg = resolve_config(f);
    const SweepResult result = run_sweep(cfg, f.workers);

    RunManifest manifest;
    manifest.config = cfg;
    manifest.timestamp = utc_timestamp();
    if (!f.out_path.empty())
        manifest.outputs.push_back(f.out_path);

    std::ostringstream text;
    if (f.format == "json")
        write_sweep_json(text, result, manifest);
    else
        write_sweep_csv(text, result, manifest);
    write_output(f.out_path, text.str(), out);
    return kExitOk;
}

int cmd_compare(const CompareFlags& f, std::ostream& out)
{
    const auto antennas = parse_int_list(f.antennas_list);
    const auto devices = parse_int_list(f.devices_list);
    if (antennas.empty())
        throw ConfigError("--antennas-list is empty");
    if (devices.empty())
        throw ConfigError("--devices-list is empty");
    for (int M : antennas)
        if (M < 2)
            throw ConfigError("antenna counts must be >= 2, got " + std::to_string(M));
    for (int K : devices)
        if (K < 1)
            throw ConfigError("device counts must be >= 1, got " + std::to_string(K));

    std::vector<EfficiencyReport> rows;
    for (int M : antennas) {
        for (int K : devices) {
            rows.push_back(efficiency_report(EfficiencyScheme::sia, M, K));
            rows.push_back(efficiency_report(EfficiencyScheme::conventional_ia, M, K));
        }
    }
    std::ostringstream text;
    write_compare_csv(text, rows);
    write_output(f.out_path, text.str(), out);
    return kExitOk;
}

int cmd_plot(const PlotFlags& f, std::ostream& out)
{
    std::ifstream in(f.in_path);
    if (!in)
        throw ConfigError("cannot open '" + f.in_path + "'");
    const auto rows = read_sweep_csv(in);
    std::ostringstream svg;
    write_nmse_svg(svg, rows);
    write_output(f.out_path, svg.str(), out);
    return kExitOk;
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Two-cell over-the-air computation with simultaneous signal-and-interference "
                 "alignment"};
    app.name("aircomp");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    RunFlags run;
    auto* run_cmd = app.add_subcommand("run", "Monte Carlo NMSE vs SNR sweep");
    run_cmd->add_option("--config", run.config_path, "flat key=value config file")
        ->check(CLI::ExistingFile);
    run_cmd->add_option("--antennas", run.antennas, "antennas per node (M)");
    run_cmd->add_option("--devices", run.devices, "devices per cell (K)");
    run_cmd->add_option("--snr-db", run.snr_db, "comma separated SNR grid in dB, 'inf' = noiseless");
    run_cmd->add_option("--trials", run.trials, "Monte Carlo trials per SNR point");
    run_cmd->add_option("--seed", run.seed, "64-bit RNG seed");
    run_cmd->add_option("--scheme", run.scheme, "sia | no_ia | genie");
    run_cmd->add_option("--function", run.function, "sum | mean | geomean");
    run_cmd->add_option("--reference", run.reference, "random | canonical reference matrices");
    run_cmd->add_option("--snr-reference", run.snr_reference, "symbol | received");
    run_cmd->add_option("--out", run.out_path, "output file (default: stdout)");
    run_cmd->add_option("--format", run.format, "csv | json");
    run_cmd->add_option("--workers", run.workers, "worker threads (default: AIRCOMP_WORKERS or all cores)");

    CompareFlags compare;
    auto* compare_cmd = app.add_subcommand("compare", "communication efficiency table");
    compare_cmd->add_option("--antennas-list", compare.antennas_list, "comma separated M values")
        ->required();
    compare_cmd->add_option("--devices-list", compare.devices_list, "comma separated K values")
        ->required();
    compare_cmd->add_option("--out", compare.out_path, "output file (default: stdout)");

    PlotFlags plot;
    auto* plot_cmd = app.add_subcommand("plot", "SVG chart of NMSE vs SNR");
    plot_cmd->add_option("--in", plot.in_path, "CSV written by 'run'")->required();
    plot_cmd->add_option("--out", plot.out_path, "SVG output (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "aircomp: " << e.what() << '\n';
        return kExitConfig;
    }

    try {
        if (*run_cmd)
            return cmd_run(run, out);
        if (*compare_cmd)
            return cmd_compare(compare, out);
        if (*plot_cmd)
            return cmd_plot(plot, out);
    } catch (const ConfigError& e) {
        err << "aircomp: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DegenerateChannels& e) {
        err << "aircomp: degenerate channels: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const std::exception& e) {
        err << "aircomp: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}

} // namespace aircomp::cli
