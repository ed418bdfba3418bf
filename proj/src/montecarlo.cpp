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

#include "fdmimo/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fdmimo/channel.hpp"
#include "fdmimo/parallel.hpp"

namespace fdmimo {

namespace {

constexpr int kMaxRedrawsPerCell = 16;
constexpr double kMaxRedrawRate = 0.01;
constexpr std::uint64_t kRedrawTag = 0x5244;  // "RD"

ComplexVector<double> term_values(const TermBreakdownd& tb, PowerTerm term) {
    switch (term) {
        case PowerTerm::kDesired: return tb.desired;
        case PowerTerm::kInterUser: return tb.inter_user;
        case PowerTerm::kSiDirect: return tb.si_direct;
        case PowerTerm::kSiReflected: return tb.si_reflected;
        case PowerTerm::kSiTotal: return tb.si_direct + tb.si_reflected;
        case PowerTerm::kNoise: return tb.noise;
        case PowerTerm::kTotalIntPlusNoise:
            return tb.inter_user + tb.si_direct + tb.si_reflected + tb.noise;
    }
    return {};
}

struct CellResult {
    TermBreakdownd uplink;
    TermBreakdownd downlink;
    int redraws = 0;
};

}  // namespace

std::string_view to_string(Link link) {
    return link == Link::kUplink ? "uplink" : "downlink";
}

std::string_view to_string(PowerTerm term) {
    switch (term) {
        case PowerTerm::kDesired: return "desired";
        case PowerTerm::kInterUser: return "inter_user";
        case PowerTerm::kSiDirect: return "si_direct";
        case PowerTerm::kSiReflected: return "si_reflected";
        case PowerTerm::kSiTotal: return "si_total";
        case PowerTerm::kNoise: return "noise";
        case PowerTerm::kTotalIntPlusNoise: return "total_int_plus_noise";
    }
    return "unknown";
}

Link parse_link(std::string_view text) {
    if (text == "uplink") return Link::kUplink;
    if (text == "downlink") return Link::kDownlink;
    throw UsageError("unknown link '" + std::string(text) + "'");
}

PowerTerm parse_power_term(std::string_view text) {
    for (PowerTerm t : kAllPowerTerms) {
        if (to_string(t) == text) return t;
    }
    throw UsageError("unknown term '" + std::string(text) + "'");
}

void SweepConfig::validate() const {
    if (trials < 1) throw ParameterError("trials must be >= 1");
    if (m_values.empty()) throw ParameterError("M grid is empty");
    if (links.empty()) throw ParameterError("no links selected");
    for (std::size_t i = 0; i < m_values.size(); ++i) {
        if (m_values[i] <= params.K) {
            throw ParameterError("every M must exceed K (M=" +
                                 std::to_string(m_values[i]) + ")");
        }
        if (i > 0 && m_values[i] <= m_values[i - 1]) {
            throw ParameterError("M grid must be strictly ascending");
        }
    }
    SystemParams p = params;
    p.M = m_values.front();
    p.validate();
}

double to_db(double power_linear) {
    if (power_linear == 0.0) return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(power_linear);
}

PowerReport estimate_powers(std::span<const TermBreakdownd> samples) {
    if (samples.empty()) throw UsageError("estimate_powers: no samples");
    const auto n = static_cast<double>(samples.size());
    PowerReport report;
    for (PowerTerm term : kAllPowerTerms) {
        std::vector<double> per_trial;
        per_trial.reserve(samples.size());
        for (const auto& tb : samples) {
            per_trial.push_back(term_values(tb, term).squaredNorm() /
                                static_cast<double>(tb.desired.size()));
        }
        double mean = 0.0;
        for (double v : per_trial) mean += v;
        mean /= n;
        double se = 0.0;
        if (samples.size() > 1) {
            double ss = 0.0;
            for (double v : per_trial) ss += (v - mean) * (v - mean);
            se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
        }
        TermPower& tp = report.terms[static_cast<std::size_t>(term)];
        tp.power_linear = mean;
        tp.stderr_linear = se;
        // delta method: d(10 log10 p) = 10 / ln 10 * dp / p
        tp.stderr_db = mean > 0.0 ? 10.0 / std::numbers::ln10 * se / mean : 0.0;
    }
    return report;
}

SweepResult run_sweep(const SweepConfig& config, int workers) {
    config.validate();
    const bool want_up = std::find(config.links.begin(), config.links.end(),
                                   Link::kUplink) != config.links.end();
    const bool want_down = std::find(config.links.begin(), config.links.end(),
                                     Link::kDownlink) != config.links.end();
    const SamplingScope scope =
        want_up ? SamplingScope::kFull : SamplingScope::kDownlinkOnly;
    const Scheme scheme = config.params.scheme;

    const std::size_t n_m = config.m_values.size();
    const auto n_t = static_cast<std::size_t>(config.trials);
    const RngStream root(config.master_seed, 0);
    std::vector<CellResult> cells(n_m * n_t);

    parallel_for(cells.size(), workers, [&](std::size_t idx) {
        const std::size_t mi = idx / n_t;
        const std::size_t t = idx % n_t;
        SystemParams p = config.params;
        p.M = config.m_values[mi];
        CellResult& out = cells[idx];
        const RngStream base = root.split(mi, t);
        for (int attempt = 0;; ++attempt) {
            const RngStream stream =
                attempt == 0 ? base : base.split(kRedrawTag, attempt);
            try {
                const ChannelRealizationd real = sample_realization(p, stream, scope);
                const ComplexMatrixd a = build_precoder(real.G, scheme, p);
                if (want_up) {
                    const ComplexMatrixd w = build_receiver(real.G, scheme);
                    TermBreakdownd up = uplink_terms(real, a, w, p);
                    out.uplink = config.normalize ? normalize_uplink(up, scheme, p)
                                                  : std::move(up);
                }
                if (want_down) {
                    TermBreakdownd down = downlink_terms(real, a, p);
                    out.downlink = config.normalize
                                       ? normalize_downlink(down, scheme, p)
                                       : std::move(down);
                }
                break;
            } catch (const SingularMatrixError&) {
                ++out.redraws;
                if (attempt + 1 >= kMaxRedrawsPerCell) throw;
            }
        }
    });

    SweepResult result;
    for (const auto& c : cells) result.redraws += c.redraws;
    if (result.redraws > kMaxRedrawRate * static_cast<double>(cells.size())) {
        throw std::runtime_error("run_sweep: singular-channel redraw rate " +
                                 std::to_string(result.redraws) + "/" +
                                 std::to_string(cells.size()) + " exceeds 1%");
    }

    for (Link link : {Link::kUplink, Link::kDownlink}) {
        if ((link == Link::kUplink && !want_up) ||
            (link == Link::kDownlink && !want_down)) {
            continue;
        }
        for (std::size_t mi = 0; mi < n_m; ++mi) {
            std::vector<TermBreakdownd> samples;
            samples.reserve(n_t);
            for (std::size_t t = 0; t < n_t; ++t) {
                const CellResult& c = cells[mi * n_t + t];
                samples.push_back(link == Link::kUplink ? c.uplink : c.downlink);
            }
            const PowerReport report = estimate_powers(samples);
            for (PowerTerm term : kAllPowerTerms) {
                const TermPower& tp = report[term];
                result.table.push_back({link, scheme, term, config.m_values[mi],
                                        tp.power_linear, to_db(tp.power_linear),
                                        tp.stderr_db, config.trials,
                                        config.master_seed});
            }
        }
    }
    return result;
}

std::vector<std::pair<double, double>> select_series(const PowerTable& table,
                                                     Link link, Scheme scheme,
                                                     PowerTerm term) {
    std::vector<std::pair<double, double>> out;
    for (const auto& row : table) {
        if (row.link == link && row.scheme == scheme && row.term == term) {
            out.emplace_back(row.M, row.power_db);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<double> find_crossing(std::span<const std::pair<double, double>> series,
                                    double level_db) {
    for (std::size_t i = 0; i < series.size(); ++i) {
        const auto [m0, p0] = series[i];
        if (p0 == level_db) return m0;
        if (i + 1 == series.size()) break;
        const auto [m1, p1] = series[i + 1];
        if (p0 > level_db && p1 < level_db) {
            if (!std::isfinite(p1)) return m1;
            const double x0 = std::log10(m0);
            const double x1 = std::log10(m1);
            const double x = x0 + (level_db - p0) * (x1 - x0) / (p1 - p0);
            return std::pow(10.0, x);
        }
    }
    return std::nullopt;
}

}  // namespace fdmimo
