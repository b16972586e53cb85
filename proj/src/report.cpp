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

#include "aircomp/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "aircomp/errors.hpp"
#include "json.hpp"

namespace aircomp {

namespace {

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

double parse_number(const std::string& text, int lineno)
{
    if (text == "inf")
        return std::numeric_limits<double>::infinity();
    if (text == "-inf")
        return -std::numeric_limits<double>::infinity();
    if (text == "nan")
        return std::numeric_limits<double>::quiet_NaN();
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size())
        throw ConfigError("csv line " + std::to_string(lineno) + ": not a number '" + text + "'");
    return v;
}

int parse_int(const std::string& text, int lineno)
{
    const double v = parse_number(text, lineno);
    if (!std::isfinite(v) || v != std::floor(v))
        throw ConfigError("csv line " + std::to_string(lineno) + ": not an integer '" + text + "'");
    return static_cast<int>(v);
}

nlohmann::json number_or_null(double v)
{
    if (std::isfinite(v))
        return v;
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return nullptr;
}

nlohmann::json config_json(const SystemConfig& c)
{
    nlohmann::json grid = nlohmann::json::array();
    for (double s : c.snr_db_grid)
        grid.push_back(number_or_null(s));
    return {{"M", c.M},
            {"K", c.K},
            {"num_cells", c.num_cells},
            {"snr_db_grid", grid},
            {"trials", c.trials},
            {"seed", c.seed},
            {"scheme", std::string(to_string(c.scheme))},
            {"function", std::string(to_string(c.function))},
            {"reference", std::string(to_string(c.reference))},
            {"snr_reference", std::string(to_string(c.snr_reference))}};
}

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

} // namespace

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_sig12(double value)
{
    if (std::isnan(value))
        return "nan";
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result, const RunManifest& manifest)
{
    out << "# aircomp sweep\n"
        << "# version=" << manifest.version << '\n'
        << "# timestamp=" << manifest.timestamp << '\n';
    for (const auto& path : manifest.outputs)
        out << "# output=" << path << '\n';
    write_config(out, manifest.config, "# ");

    const auto& c = result.config;
    out << kSweepCsvHeader << '\n';
    for (const auto& p : result.points) {
        out << to_string(c.scheme) << ',' << c.M << ',' << c.K << ',' << format_sig12(p.snr_db)
            << ',' << p.trials << ',' << format_sig12(p.nmse_mean) << ','
            << format_sig12(p.nmse_median) << ',' << format_sig12(p.leakage_mean) << ','
            << p.aligned_rank_min << ',' << format_sig12(p.analytic_nmse) << ','
            << format_sig12(result.dof_slope) << '\n';
    }
}

void write_sweep_json(std::ostream& out, const SweepResult& result, const RunManifest& manifest)
{
    nlohmann::json doc;
    doc["schema"] = "aircomp.sweep";
    doc["schema_version"] = kJsonSchemaVersion;
    doc["manifest"] = {{"version", manifest.version},
                       {"timestamp", manifest.timestamp},
                       {"outputs", manifest.outputs},
                       {"config", config_json(manifest.config)}};
    nlohmann::json points = nlohmann::json::array();
    const auto& c = result.config;
    for (const auto& p : result.points) {
        points.push_back({{"scheme", std::string(to_string(c.scheme))},
                          {"M", c.M},
                          {"K", c.K},
                          {"snr_db", number_or_null(p.snr_db)},
                          {"trials", p.trials},
                          {"nmse_mean", number_or_null(p.nmse_mean)},
                          {"nmse_std_error", number_or_null(p.nmse_std_error)},
                          {"nmse_median", number_or_null(p.nmse_median)},
                          {"mse_mean", number_or_null(p.mse_mean)},
                          {"leakage_mean", number_or_null(p.leakage_mean)},
                          {"leakage_max", number_or_null(p.leakage_max)},
                          {"aligned_rank", p.aligned_rank_min},
                          {"aligned_rank_max", p.aligned_rank_max},
                          {"analytic_nmse", number_or_null(p.analytic_nmse)},
                          {"tx_power_mean", number_or_null(p.tx_power_mean)},
                          {"function", std::string(to_string(c.function))},
                          {"function_nmse", number_or_null(p.function_nmse)}});
    }
    doc["points"] = std::move(points);
    doc["dof_slope"] = number_or_null(result.dof_slope);
    out << doc.dump(2) << '\n';
}

std::string csv_body(const std::string& csv_text)
{
    std::istringstream in(csv_text);
    std::string line, body;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#')
            continue;
        body += line;
        body += '\n';
    }
    return body;
}

void write_compare_csv(std::ostream& out, const std::vector<EfficiencyReport>& rows)
{
    out << kCompareCsvHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.scheme) << ',' << r.M << ',' << r.K << ',' << r.streams.str() << ','
            << r.efficiency.num() << ',' << r.efficiency.den() << '\n';
    }
}

std::vector<SweepCsvRow> read_sweep_csv(std::istream& in)
{
    std::vector<SweepCsvRow> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#' || line == kSweepCsvHeader)
            continue;
        const auto cells = split_csv_line(line);
        if (cells.size() != 11)
            throw ConfigError("csv line " + std::to_string(lineno) + ": expected 11 columns, got " +
                              std::to_string(cells.size()));
        SweepCsvRow r;
        r.scheme = cells[0];
        if (r.scheme.empty())
            throw ConfigError("csv line " + std::to_string(lineno) + ": empty scheme");
        r.M = parse_int(cells[1], lineno);
        r.K = parse_int(cells[2], lineno);
        r.snr_db = parse_number(cells[3], lineno);
        r.trials = parse_int(cells[4], lineno);
        r.nmse_mean = parse_number(cells[5], lineno);
        r.nmse_median = parse_number(cells[6], lineno);
        r.leakage_mean = parse_number(cells[7], lineno);
        r.aligned_rank = parse_int(cells[8], lineno);
        r.analytic_nmse = parse_number(cells[9], lineno);
        r.dof_slope = parse_number(cells[10], lineno);
        rows.push_back(std::move(r));
    }
    if (rows.empty())
        throw ConfigError("csv contains no data rows");
    return rows;
}

PlotStats write_nmse_svg(std::ostream& out, const std::vector<SweepCsvRow>& rows)
{
    if (rows.empty())
        throw ConfigError("nothing to plot");

    // Series keyed by (scheme, M, K) in first-appearance order.
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double min_pos = std::numeric_limits<double>::infinity();
    for (const auto& r : rows)
        if (r.nmse_mean > 0.0 && std::isfinite(r.nmse_mean))
            min_pos = std::min(min_pos, r.nmse_mean);
    if (!std::isfinite(min_pos))
        min_pos = 1e-300;
    const double floor_value = min_pos / 10.0;

    double x_lo = std::numeric_limits<double>::infinity(), x_hi = -x_lo;
    double y_lo = x_lo, y_hi = -x_lo;
    for (const auto& r : rows) {
        if (!std::isfinite(r.snr_db))
            continue;
        const std::string key = r.scheme + " (M=" + std::to_string(r.M) + ", K=" +
                                std::to_string(r.K) + ")";
        if (!series.count(key))
            order.push_back(key);
        const double nmse =
            (r.nmse_mean > 0.0 && std::isfinite(r.nmse_mean)) ? r.nmse_mean : floor_value;
        const double ly = std::log10(nmse);
        series[key].emplace_back(r.snr_db, ly);
        x_lo = std::min(x_lo, r.snr_db);
        x_hi = std::max(x_hi, r.snr_db);
        y_lo = std::min(y_lo, ly);
        y_hi = std::max(y_hi, ly);
    }
    if (order.empty())
        throw ConfigError("no finite SNR points to plot");
    if (x_hi == x_lo) {
        x_lo -= 1.0;
        x_hi += 1.0;
    }
    y_lo = std::floor(y_lo);
    y_hi = std::ceil(y_hi);
    if (y_hi == y_lo)
        y_hi = y_lo + 1.0;

    constexpr double width = 640, height = 420;
    constexpr double left = 70, right = 170, top = 30, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto px = [&](double x) { return left + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto py = [&](double y) { return top + (y_hi - y) / (y_hi - y_lo) * plot_h; };

    static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

    char buf[128];
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                  left, top + plot_h, left + plot_w, top + plot_h);
    out << buf;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\" stroke=\"black\"/>\n",
                  left, top, left, top + plot_h);
    out << buf;
    // Decade ticks on the log axis, at most ~10 labels.
    const int decades = static_cast<int>(y_hi - y_lo);
    const int step = std::max(1, decades / 10);
    for (int d = static_cast<int>(y_lo); d <= static_cast<int>(y_hi); d += step) {
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" text-anchor=\"end\">1e%d</text>\n",
                      left - 6, py(d) + 4, d);
        out << buf;
    }
    for (int t = 0; t <= 4; ++t) {
        const double x = x_lo + (x_hi - x_lo) * t / 4.0;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" text-anchor=\"middle\">%g</text>\n",
                      px(x), top + plot_h + 16, x);
        out << buf;
    }
    out << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 10
        << "\" font-size=\"12\" text-anchor=\"middle\">SNR (dB)</text>\n"
        << "<text x=\"16\" y=\"" << top + plot_h / 2
        << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << top + plot_h / 2 << ")\">NMSE (log scale)</text>\n";

    PlotStats stats;
    for (std::size_t s = 0; s < order.size(); ++s) {
        auto pts = series[order[s]];
        std::stable_sort(pts.begin(), pts.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        const char* color = colors[s % (sizeof colors / sizeof colors[0])];
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t v = 0; v < pts.size(); ++v) {
            std::snprintf(buf, sizeof buf, "%s%.2f,%.2f", v ? " " : "", px(pts[v].first),
                          py(pts[v].second));
            out << buf;
        }
        out << "\"/>\n";
        const double ly = top + 14 + 18.0 * static_cast<double>(s);
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"11\" fill=\"%s\">", left + plot_w + 10,
                      ly, color);
        out << buf << xml_escape(order[s]) << "</text>\n";
        ++stats.polylines;
        stats.vertices += pts.size();
    }
    out << "</svg>\n";
    return stats;
}

} // namespace aircomp
