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

#include "fdmimo/presets.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>

namespace fdmimo {

namespace {

std::string utc_timestamp() {
    const std::time_t now =
        std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string c_label(double c) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", c);
    return buf;
}

std::vector<Scheme> schemes_for(const ParsedConfig& pc) {
    if (pc.scheme_set) return {pc.sweep.params.scheme};
    return {Scheme::kZf, Scheme::kMrtMrc};
}

Manifest base_manifest(const std::string& preset, const SweepConfig& sc,
                       int workers) {
    Manifest m = {{"preset", preset},
                  {"version", std::string(kVersion)},
                  {"timestamp", utc_timestamp()},
                  {"master_seed", std::to_string(sc.master_seed)},
                  {"workers", std::to_string(workers)}};
    for (auto& kv : describe(sc)) m.push_back(std::move(kv));
    return m;
}

PresetOutcome run_fig2(Link link, const ParsedConfig& pc,
                       const std::filesystem::path& out_dir, int workers) {
    const std::string preset = link == Link::kUplink ? "fig2-uplink" : "fig2-downlink";
    PresetOutcome outcome;
    SweepConfig base = pc.sweep;
    base.links = {link};
    Manifest manifest = base_manifest(preset, base, workers);
    std::string c_list;
    int redraws = 0;

    for (double c : fig2_c_values(link)) {
        PowerTable table;
        for (Scheme scheme : schemes_for(pc)) {
            SweepConfig sc = base;
            sc.params.scheme = scheme;
            if (link == Link::kUplink) {
                sc.params.c_direct = c;
            } else {
                sc.params.c_prime = c;
            }
            SweepResult res = run_sweep(sc, workers);
            redraws += res.redraws;
            for (PowerTerm term : {PowerTerm::kSiTotal, PowerTerm::kTotalIntPlusNoise}) {
                const auto series = select_series(res.table, link, scheme, term);
                outcome.crossings.push_back(
                    {link, scheme, c, 0.0, find_crossing(series, 0.0), term});
            }
            table.insert(table.end(), res.table.begin(), res.table.end());
        }
        const auto path = out_dir / (preset + "_c" + c_label(c) + ".csv");
        write_csv(table, path);
        outcome.files.push_back(path);
        c_list += (c_list.empty() ? "" : ",") + c_label(c);
    }
    const auto crossings_path = out_dir / "crossings.csv";
    write_crossings(outcome.crossings, crossings_path);
    outcome.files.push_back(crossings_path);

    manifest.emplace_back(link == Link::kUplink ? "sweep_c_direct" : "sweep_c_prime",
                          c_list);
    manifest.emplace_back("redraws", std::to_string(redraws));
    const auto manifest_path = out_dir / "manifest.txt";
    write_manifest(manifest, manifest_path);
    outcome.files.push_back(manifest_path);
    return outcome;
}

PresetOutcome write_decay(const std::string& preset,
                          const std::vector<DecaySeries>& series,
                          const SweepConfig& sc, const std::filesystem::path& out_dir,
                          int workers) {
    PresetOutcome outcome;
    const auto data = out_dir / (preset + ".csv");
    const auto summary = out_dir / (preset + "_summary.csv");
    write_csv(series, data);
    write_decay_summary(series, summary);
    const auto manifest_path = out_dir / "manifest.txt";
    write_manifest(base_manifest(preset, sc, workers), manifest_path);
    outcome.files = {data, summary, manifest_path};
    return outcome;
}

SweepConfig decay_config(const ParsedConfig& pc) {
    SweepConfig sc = pc.sweep;
    if (!pc.m_values_set) sc.m_values = kDecayMGrid;
    return sc;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "fig2-uplink", "fig2-downlink", "lemma1", "theorem1", "propositions", "sweep"};
    return names;
}

std::vector<double> fig2_c_values(Link link) {
    if (link == Link::kUplink) return {0.5, 0.9};
    return {0.6, 0.7};
}

PresetOutcome run_preset(const std::string& name, const ParsedConfig& pc,
                         const std::filesystem::path& out_dir, int workers) {
    bool known = false;
    for (const auto& n : preset_names()) known = known || n == name;
    if (!known) throw UsageError("unknown preset '" + name + "'");

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir)) {
        throw IoError("cannot create output directory: " + out_dir.string());
    }

    const RngStream root(pc.sweep.master_seed, 0);

    if (name == "fig2-uplink") return run_fig2(Link::kUplink, pc, out_dir, workers);
    if (name == "fig2-downlink") return run_fig2(Link::kDownlink, pc, out_dir, workers);

    if (name == "lemma1") {
        const SweepConfig sc = decay_config(pc);
        std::vector<DecaySeries> series;
        std::uint64_t tag = 0;
        for (const LemmaMatrix& b : {LemmaMatrix::identity(), LemmaMatrix::all_equal(1.0),
                                     LemmaMatrix::random_iid(1.0)}) {
            for (LemmaPair pair : {LemmaPair::kXBxConj, LemmaPair::kXBy}) {
                series.push_back(lemma1_decay_sweep(b, pair, sc.m_values, sc.trials,
                                                    root.split(1, tag++), workers));
            }
        }
        return write_decay(name, series, sc, out_dir, workers);
    }
    if (name == "theorem1") {
        const SweepConfig sc = decay_config(pc);
        std::vector<DecaySeries> series;
        series.push_back(theorem1_sweep(sc.params, SiComponent::kDirect, sc.m_values,
                                        sc.trials, root.split(2, 0), workers));
        series.push_back(theorem1_sweep(sc.params, SiComponent::kReflected,
                                        sc.m_values, sc.trials, root.split(2, 1),
                                        workers));
        series.push_back(orthogonality_sweep(sc.params, sc.m_values, sc.trials,
                                             root.split(2, 2), workers));
        return write_decay(name, series, sc, out_dir, workers);
    }
    if (name == "propositions") {
        const SweepConfig sc = decay_config(pc);
        std::vector<DecaySeries> series;
        std::uint64_t tag = 0;
        for (PropositionKind kind : {PropositionKind::kUplink, PropositionKind::kDownlink}) {
            for (Scheme scheme : schemes_for(pc)) {
                SystemParams p = sc.params;
                p.scheme = scheme;
                series.push_back(proposition_convergence(kind, p, sc.m_values, sc.trials,
                                                         root.split(3, tag++), workers));
            }
        }
        return write_decay(name, series, sc, out_dir, workers);
    }

    // sweep: the configuration exactly as given
    PresetOutcome outcome;
    const SweepResult res = run_sweep(pc.sweep, workers);
    const auto data = out_dir / "sweep.csv";
    write_csv(res.table, data);
    Manifest manifest = base_manifest(name, pc.sweep, workers);
    manifest.emplace_back("redraws", std::to_string(res.redraws));
    const auto manifest_path = out_dir / "manifest.txt";
    write_manifest(manifest, manifest_path);
    outcome.files = {data, manifest_path};
    return outcome;
}

}  // namespace fdmimo
