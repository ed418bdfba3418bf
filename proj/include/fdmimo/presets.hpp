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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fdmimo/config.hpp"
#include "fdmimo/io.hpp"

namespace fdmimo {

inline constexpr std::string_view kVersion = "1.0.0";

/// fig2-uplink, fig2-downlink, lemma1, theorem1, propositions, sweep.
const std::vector<std::string>& preset_names();

struct PresetOutcome {
    std::vector<std::filesystem::path> files;
    std::vector<CrossingRecord> crossings;
};

/// Runs a named preset and writes its CSVs plus manifest.txt into out_dir.
/// Throws UsageError for an unknown name and IoError when out_dir cannot
/// be created or written.
PresetOutcome run_preset(const std::string& name, const ParsedConfig& config,
                         const std::filesystem::path& out_dir, int workers = 1);

/// The c values swept by the fig2 presets.
std::vector<double> fig2_c_values(Link link);

}  // namespace fdmimo
