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

// Exit codes: 0 success, 1 simulation failure, 2 I/O failure, 64 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "fdmimo/config.hpp"
#include "fdmimo/presets.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 64;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Full-duplex massive MU-MIMO self-interference simulator"};
    std::string preset = "sweep";
    std::string config_path;
    std::string out_dir = "out";
    std::string seed, trials, m_list, scheme;
    int workers = 1;
    std::vector<std::string> sets;

    app.add_option("--preset", preset,
                   "fig2-uplink | fig2-downlink | lemma1 | theorem1 | propositions | sweep");
    app.add_option("--config", config_path, "flat key=value configuration file");
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--seed", seed, "master seed (unsigned 64-bit)");
    app.add_option("--trials", trials, "Monte Carlo trials per M");
    app.add_option("--m-list", m_list, "comma-separated ascending array sizes");
    app.add_option("--scheme", scheme, "zf | mrt");
    app.add_option("--workers", workers, "parallel trial workers")->check(CLI::PositiveNumber);
    app.add_option("--set", sets, "extra key=value override (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        std::vector<fdmimo::ConfigEntry> entries;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw fdmimo::IoError("cannot read config: " + config_path);
            entries = fdmimo::read_config_entries(in, config_path);
        }
        auto add = [&](const std::string& key, const std::string& value) {
            if (!value.empty()) entries.push_back({key, value, "command line"});
        };
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) {
                throw fdmimo::UsageError("--set expects key=value, got '" + s + "'");
            }
            add(s.substr(0, eq), s.substr(eq + 1));
        }
        add("seed", seed);
        add("trials", trials);
        add("M_values", m_list);
        add("scheme", scheme);

        const fdmimo::ParsedConfig config = fdmimo::parse_config(entries);
        const auto outcome = fdmimo::run_preset(preset, config, out_dir, workers);
        for (const auto& f : outcome.files) std::cout << "wrote " << f.string() << '\n';
        for (const auto& c : outcome.crossings) {
            std::printf("crossing %s %s c=%g %s: M* = %s\n",
                        std::string(fdmimo::to_string(c.link)).c_str(),
                        std::string(fdmimo::to_string(c.scheme)).c_str(), c.c_value,
                        std::string(fdmimo::to_string(c.term)).c_str(),
                        c.m_star ? std::to_string(*c.m_star).c_str() : "not found");
        }
        return 0;
    } catch (const fdmimo::UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const fdmimo::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}
