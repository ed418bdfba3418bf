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

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "fdmimo/io.hpp"
#include "fdmimo/montecarlo.hpp"

namespace fdmimo {

/// Default log-spaced array sizes for power sweeps.
inline const std::vector<int> kDefaultMGrid = {64, 91, 128, 181, 256, 362, 512, 724, 1024};

/// Array sizes for the convergence presets.
inline const std::vector<int> kDecayMGrid = {64, 256, 1024};

struct ParsedConfig {
    SweepConfig sweep;
    bool scheme_set = false;
    bool m_values_set = false;
    bool trials_set = false;
};

/// One key=value assignment and where it came from (for error messages).
struct ConfigEntry {
    std::string key;
    std::string value;
    std::string origin;  ///< "path:line" or "command line"
};

/// Reads flat `key=value` lines; `#` starts a comment, blank lines ignored.
std::vector<ConfigEntry> read_config_entries(std::istream& in,
                                             const std::string& source);

/// Applies entries over the built-in defaults, in order.
///
/// Keys: M_values, trials, seed, K, beta_k (one value or K comma-separated),
/// beta_si, beta_prime, p_u, p_d, p_u_db, p_d_db, c_direct, c_prime, scheme,
/// links, normalize, downlink_si_uses_uplink_power,
/// ue_reflected_amplitude_convention. `_db` powers are converted to linear
/// here. Complex coefficients accept `re` or `(re,im)`.
ParsedConfig parse_config(const std::vector<ConfigEntry>& entries);

/// The resolved configuration as manifest lines.
Manifest describe(const SweepConfig& config);

std::vector<int> parse_int_list(const std::string& text);

}  // namespace fdmimo
