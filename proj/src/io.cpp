// SPDX-License-Identifier: Apache-2.0
//
// fdmimo - shared-antenna full-duplex massive MU-MIMO simulator
// Copyright (C) 2026 The fdmimo authors
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

#include "fdmimo/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fdmimo {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.16e", x);
    return buf;
}

double parse_real(const std::string& text) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
        throw UsageError("not a number: '" + text + "'");
    }
    return v;
}

void write_csv(const PowerTable& table, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kPowerCsvHeader << '\n';
    for (const auto& r : table) {
        out << to_string(r.link) << ',' << to_string(r.scheme) << ','
            << to_string(r.term) << ',' << r.M << ',' << format_real(r.power_linear)
            << ',' << format_real(r.power_db) << ',' << format_real(r.stderr_db)
            << ',' << r.trials << ',' << r.seed << '\n';
    }
    finish(out, path);
}

PowerTable read_power_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != kPowerCsvHeader) {
        throw UsageError(path.string() + ": unexpected header");
    }
    PowerTable table;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto f = split_fields(line);
        if (f.size() != 9) {
            throw UsageError(path.string() + ":" + std::to_string(line_no) +
                             ": expected 9 fields");
        }
        PowerRow r{};
        r.link = parse_link(f[0]);
        r.scheme = parse_scheme(f[1]);
        r.term = parse_power_term(f[2]);
        r.M = std::stoi(f[3]);
        r.power_linear = parse_real(f[4]);
        r.power_db = parse_real(f[5]);
        r.stderr_db = parse_real(f[6]);
        r.trials = std::stoi(f[7]);
        r.seed = std::stoull(f[8]);
        table.push_back(r);
    }
    return table;
}

void write_csv(const std::vector<DecaySeries>& series,
               const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kDecayCsvHeader << '\n';
    for (const auto& s : series) {
        for (std::size_t mi = 0; mi < s.m_values.size(); ++mi) {
            for (std::size_t t = 0; t < s.stats[mi].size(); ++t) {
                out << s.statistic << ',' << s.m_values[mi] << ',' << t << ','
                    << format_real(s.stats[mi][t]) << '\n';
            }
        }
    }
    finish(out, path);
}

void write_decay_summary(const std::vector<DecaySeries>& series,
                         const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kDecaySummaryHeader << '\n';
    for (const auto& s : series) {
        for (std::size_t mi = 0; mi < s.m_values.size(); ++mi) {
            const auto& q = s.summary.at(mi);
            out << s.statistic << ',' << s.m_values[mi] << ','
                << format_real(q.median) << ',' << format_real(q.lower_quartile)
                << ',' << format_real(q.upper_quartile) << '\n';
        }
    }
    finish(out, path);
}

void write_crossings(const std::vector<CrossingRecord>& rows,
                     const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    out << kCrossingsHeader << '\n';
    for (const auto& r : rows) {
        out << to_string(r.link) << ',' << to_string(r.scheme) << ','
            << format_real(r.c_value) << ',' << format_real(r.level_db) << ','
            << (r.m_star ? format_real(*r.m_star) : std::string("nan")) << ','
            << to_string(r.term) << '\n';
    }
    finish(out, path);
}

void write_manifest(const Manifest& manifest, const std::filesystem::path& path) {
    std::ofstream out = open_out(path);
    for (const auto& [k, v] : manifest) out << k << '=' << v << '\n';
    finish(out, path);
}

}  // namespace fdmimo
