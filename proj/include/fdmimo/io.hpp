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

// CSV and manifest writers. All files are UTF-8 with LF line endings.
// Reals are written as %.16e (17 significant digits, lossless for double);
// a zero power has power_db = -inf, written as the literal token "-inf".

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fdmimo/asymptotics.hpp"
#include "fdmimo/montecarlo.hpp"

namespace fdmimo {

inline constexpr const char* kPowerCsvHeader =
    "link,scheme,term,M,power_linear,power_db,stderr_db,trials,seed";
inline constexpr const char* kDecayCsvHeader = "statistic,M,trial,magnitude";
inline constexpr const char* kDecaySummaryHeader =
    "statistic,M,median,lower_quartile,upper_quartile";
inline constexpr const char* kCrossingsHeader =
    "link,scheme,c_value,level_db,m_star,term";

std::string format_real(double x);
double parse_real(const std::string& text);

void write_csv(const PowerTable& table, const std::filesystem::path& path);
PowerTable read_power_csv(const std::filesystem::path& path);

/// Per-trial magnitudes of every series in one file.
void write_csv(const std::vector<DecaySeries>& series,
               const std::filesystem::path& path);
void write_decay_summary(const std::vector<DecaySeries>& series,
                         const std::filesystem::path& path);

struct CrossingRecord {
    Link link;
    Scheme scheme;
    double c_value;
    double level_db;
    std::optional<double> m_star;  ///< written as "nan" when not found
    PowerTerm term;
};

void write_crossings(const std::vector<CrossingRecord>& rows,
                     const std::filesystem::path& path);

/// key=value lines in insertion order.
using Manifest = std::vector<std::pair<std::string, std::string>>;
void write_manifest(const Manifest& manifest, const std::filesystem::path& path);

}  // namespace fdmimo
