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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fdmimo/params.hpp"
#include "fdmimo/processing.hpp"

namespace fdmimo {

enum class Link { kUplink, kDownlink };

enum class PowerTerm {
    kDesired,
    kInterUser,
    kSiDirect,
    kSiReflected,
    kSiTotal,
    kNoise,
    kTotalIntPlusNoise,
};

inline constexpr std::array<PowerTerm, 7> kAllPowerTerms = {
    PowerTerm::kDesired,  PowerTerm::kInterUser, PowerTerm::kSiDirect,
    PowerTerm::kSiReflected, PowerTerm::kSiTotal, PowerTerm::kNoise,
    PowerTerm::kTotalIntPlusNoise};

std::string_view to_string(Link link);
std::string_view to_string(PowerTerm term);
Link parse_link(std::string_view text);
PowerTerm parse_power_term(std::string_view text);

struct SweepConfig {
    SystemParams params;
    std::vector<int> m_values;
    int trials = 500;
    std::uint64_t master_seed = 1;
    std::vector<Link> links = {Link::kUplink, Link::kDownlink};
    /// Uplink MRC terms / (M beta_k), downlink terms / rho_k.
    bool normalize = true;

    void validate() const;
};

struct TermPower {
    double power_linear = 0.0;
    double stderr_linear = 0.0;
    double stderr_db = 0.0;
};

/// Mean-square power of every term for one (M, link).
struct PowerReport {
    std::array<TermPower, 7> terms;

    const TermPower& operator[](PowerTerm t) const {
        return terms[static_cast<std::size_t>(t)];
    }
};

/// power = mean over trials and users of |term_k|^2; stderr from the sample
/// standard deviation of per-trial user means. si_total is the power of the
/// complex sum si_direct + si_reflected.
PowerReport estimate_powers(std::span<const TermBreakdownd> samples);

/// 10 log10(p), or -inf for p == 0.
double to_db(double power_linear);

struct PowerRow {
    Link link;
    Scheme scheme;
    PowerTerm term;
    int M;
    double power_linear;
    double power_db;
    double stderr_db;
    int trials;
    std::uint64_t seed;
};

using PowerTable = std::vector<PowerRow>;

struct SweepResult {
    PowerTable table;
    /// ZF trials redrawn because the channel Gram matrix was singular.
    int redraws = 0;
};

/// Runs every (M, trial) cell with stream RngStream(seed, 0).split(m_index,
/// trial) and aggregates per (M, link). Output is independent of `workers`.
SweepResult run_sweep(const SweepConfig& config, int workers = 1);

/// Rows of one (link, scheme, term) as (M, power_db), ordered by M.
std::vector<std::pair<double, double>> select_series(const PowerTable& table,
                                                     Link link, Scheme scheme,
                                                     PowerTerm term);

/// First downward crossing of level_db, interpolated linearly in
/// (log10 M, dB). A point exactly at the level is returned as-is.
std::optional<double> find_crossing(std::span<const std::pair<double, double>> series,
                                    double level_db);

}  // namespace fdmimo
