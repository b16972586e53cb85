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

#include "aircomp/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "aircomp/errors.hpp"

namespace aircomp {

namespace {

std::string_view trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        out.push_back(trim(text.substr(start, pos - start)));
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return out;
}

double parse_double(std::string_view text)
{
    const auto t = trim(text);
    if (t == "inf" || t == "+inf" || t == "Inf")
        return std::numeric_limits<double>::infinity();
    double value = 0.0;
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, value);
    if (t.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value))
        throw ConfigError("not a number: '" + std::string(t) + "'");
    return value;
}

template <typename Int>
Int parse_integer(std::string_view text)
{
    const auto t = trim(text);
    Int value{};
    const auto* end = t.data() + t.size();
    const auto [ptr, ec] = std::from_chars(t.data(), end, value);
    if (t.empty() || ec != std::errc{} || ptr != end)
        throw ConfigError("not an integer: '" + std::string(t) + "'");
    return value;
}

} // namespace

std::string_view to_string(Scheme s)
{
    switch (s) {
    case Scheme::sia: return "sia";
    case Scheme::no_ia: return "no_ia";
    case Scheme::genie: return "genie";
    }
    return "?";
}

std::string_view to_string(FunctionKind f)
{
    switch (f) {
    case FunctionKind::sum: return "sum";
    case FunctionKind::mean: return "mean";
    case FunctionKind::geomean: return "geomean";
    }
    return "?";
}

std::string_view to_string(ReferenceMode r)
{
    return r == ReferenceMode::random ? "random" : "canonical";
}

std::string_view to_string(SnrReference r)
{
    return r == SnrReference::symbol ? "symbol" : "received";
}

Scheme parse_scheme(std::string_view text)
{
    for (auto s : {Scheme::sia, Scheme::no_ia, Scheme::genie})
        if (to_string(s) == trim(text))
            return s;
    throw ConfigError("unknown scheme '" + std::string(text) + "' (expected sia, no_ia, genie)");
}

FunctionKind parse_function(std::string_view text)
{
    for (auto f : {FunctionKind::sum, FunctionKind::mean, FunctionKind::geomean})
        if (to_string(f) == trim(text))
            return f;
    throw ConfigError("unknown function '" + std::string(text) +
                      "' (expected sum, mean, geomean)");
}

ReferenceMode parse_reference(std::string_view text)
{
    for (auto r : {ReferenceMode::random, ReferenceMode::canonical})
        if (to_string(r) == trim(text))
            return r;
    throw ConfigError("unknown reference mode '" + std::string(text) +
                      "' (expected random, canonical)");
}

SnrReference parse_snr_reference(std::string_view text)
{
    for (auto r : {SnrReference::symbol, SnrReference::received})
        if (to_string(r) == trim(text))
            return r;
    throw ConfigError("unknown snr reference '" + std::string(text) +
                      "' (expected symbol, received)");
}

void validate(const SystemConfig& config)
{
    if (config.M == 1)
        throw ConfigError("M=1 yields zero AirComp DoF");
    if (config.M < 1)
        throw ConfigError("M must be a positive integer, got " + std::to_string(config.M));
    if (config.K < 1)
        throw ConfigError("K must be a positive integer, got " + std::to_string(config.K));
    if (config.num_cells != 2)
        throw ConfigError("num_cells is fixed at 2, got " + std::to_string(config.num_cells));
    if (config.trials < 1)
        throw ConfigError("trials must be >= 1, got " + std::to_string(config.trials));
    if (config.snr_db_grid.empty())
        throw ConfigError("snr_db_grid is empty");
    for (std::size_t p = 0; p < config.snr_db_grid.size(); ++p) {
        const double snr = config.snr_db_grid[p];
        if (std::isnan(snr) || snr == -std::numeric_limits<double>::infinity())
            throw ConfigError("snr_db_grid contains an invalid value");
        if (p > 0 && !(snr > config.snr_db_grid[p - 1]))
            throw ConfigError("snr_db_grid must be strictly ascending");
    }
}

std::vector<double> parse_double_list(std::string_view text)
{
    std::vector<double> out;
    if (trim(text).empty())
        return out;
    for (auto item : split(text, ','))
        out.push_back(parse_double(item));
    return out;
}

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    if (trim(text).empty())
        return out;
    for (auto item : split(text, ','))
        out.push_back(parse_integer<int>(item));
    return out;
}

SystemConfig parse_config(std::istream& in, SystemConfig base)
{
    SystemConfig cfg = std::move(base);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
        const auto key = trim(t.substr(0, eq));
        const auto value = trim(t.substr(eq + 1));
        try {
            if (key == "M")
                cfg.M = parse_integer<int>(value);
            else if (key == "K")
                cfg.K = parse_integer<int>(value);
            else if (key == "num_cells")
                cfg.num_cells = parse_integer<int>(value);
            else if (key == "snr_db_grid")
                cfg.snr_db_grid = parse_double_list(value);
            else if (key == "trials")
                cfg.trials = parse_integer<int>(value);
            else if (key == "seed")
                cfg.seed = parse_integer<std::uint64_t>(value);
            else if (key == "scheme")
                cfg.scheme = parse_scheme(value);
            else if (key == "function")
                cfg.function = parse_function(value);
            else if (key == "reference")
                cfg.reference = parse_reference(value);
            else if (key == "snr_reference")
                cfg.snr_reference = parse_snr_reference(value);
            else
                throw ConfigError("unknown key '" + std::string(key) + "'");
        } catch (const ConfigError& e) {
            throw ConfigError("config line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

SystemConfig load_config(const std::string& path, SystemConfig base)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file '" + path + "'");
    return parse_config(in, std::move(base));
}

std::string format_double(double value)
{
    if (std::isinf(value))
        return value > 0 ? "inf" : "-inf";
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_config(std::ostream& out, const SystemConfig& config, std::string_view line_prefix)
{
    std::string grid;
    for (std::size_t p = 0; p < config.snr_db_grid.size(); ++p) {
        if (p > 0)
            grid += ',';
        grid += format_double(config.snr_db_grid[p]);
    }
    out << line_prefix << "M=" << config.M << '\n'
        << line_prefix << "K=" << config.K << '\n'
        << line_prefix << "num_cells=" << config.num_cells << '\n'
        << line_prefix << "snr_db_grid=" << grid << '\n'
        << line_prefix << "trials=" << config.trials << '\n'
        << line_prefix << "seed=" << config.seed << '\n'
        << line_prefix << "scheme=" << to_string(config.scheme) << '\n'
        << line_prefix << "function=" << to_string(config.function) << '\n'
        << line_prefix << "reference=" << to_string(config.reference) << '\n'
        << line_prefix << "snr_reference=" << to_string(config.snr_reference) << '\n';
}

} // namespace aircomp
