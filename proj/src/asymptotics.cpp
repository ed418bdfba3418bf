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

#include "fdmimo/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "fdmimo/parallel.hpp"

namespace fdmimo {

namespace {

constexpr int kMinSweepTrials = 30;

void check_grid(const std::vector<int>& m_values, int trials) {
    if (m_values.empty()) throw ParameterError("sweep: empty M grid");
    for (std::size_t i = 1; i < m_values.size(); ++i) {
        if (m_values[i] <= m_values[i - 1]) {
            throw ParameterError("sweep: M grid must be strictly ascending");
        }
    }
    if (trials < kMinSweepTrials) {
        throw ParameterError("sweep: need at least " +
                             std::to_string(kMinSweepTrials) +
                             " trials per M, got " + std::to_string(trials));
    }
}

// Evaluates cell(m, stream) for every (M index, trial) pair. Cell streams
// are rng.split(m_index, trial), so results do not depend on worker count.
DecaySeries run_cells(std::string statistic, const std::vector<int>& m_values,
                      int trials, const RngStream& rng, int workers,
                      const std::function<double(int, RngStream&)>& cell) {
    check_grid(m_values, trials);
    const std::size_t n_m = m_values.size();
    const auto n_t = static_cast<std::size_t>(trials);
    std::vector<double> flat(n_m * n_t);
    parallel_for(flat.size(), workers, [&](std::size_t idx) {
        const std::size_t mi = idx / n_t;
        const std::size_t t = idx % n_t;
        RngStream stream = rng.split(mi, t);
        flat[idx] = cell(m_values[mi], stream);
    });
    DecaySeries out;
    out.statistic = std::move(statistic);
    out.m_values = m_values;
    out.stats.resize(n_m);
    for (std::size_t mi = 0; mi < n_m; ++mi) {
        out.stats[mi].assign(flat.begin() + mi * n_t, flat.begin() + (mi + 1) * n_t);
    }
    out.summarize();
    return out;
}

SystemParams with_m(const SystemParams& params, int m) {
    SystemParams p = params;
    p.M = m;
    return p;
}

}  // namespace

double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw ParameterError("quantile of empty sample");
    std::sort(values.begin(), values.end());
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

void DecaySeries::summarize() {
    if (stats.size() != m_values.size()) {
        throw ParameterError("DecaySeries: stats rows != number of M values");
    }
    for (std::size_t i = 1; i < m_values.size(); ++i) {
        if (m_values[i] <= m_values[i - 1]) {
            throw ParameterError("DecaySeries: m_values not strictly ascending");
        }
    }
    summary.clear();
    for (const auto& row : stats) {
        if (row.empty()) throw ParameterError("DecaySeries: empty stats row");
        summary.push_back({quantile(row, 0.25), quantile(row, 0.5), quantile(row, 0.75)});
    }
}

std::vector<double> DecaySeries::medians() const {
    std::vector<double> out;
    out.reserve(summary.size());
    for (const auto& s : summary) out.push_back(s.median);
    return out;
}

bool DecaySeries::medians_strictly_decreasing() const {
    const auto med = medians();
    for (std::size_t i = 1; i < med.size(); ++i) {
        if (!(med[i] < med[i - 1])) return false;
    }
    return true;
}

std::string LemmaMatrix::name() const {
    switch (kind) {
        case Kind::kAllEqual: return "allequal";
        case Kind::kRandomIid: return "iid";
        case Kind::kIdentity: return "identity";
    }
    return "unknown";
}

ComplexMatrixd LemmaMatrix::build(int m, RngStream& rng) const {
    switch (kind) {
        case Kind::kAllEqual: return ComplexMatrixd::Constant(m, m, cd(value, 0.0));
        case Kind::kRandomIid: return cscg_sample(rng, m, m) * std::sqrt(value);
        case Kind::kIdentity: return ComplexMatrixd::Identity(m, m);
    }
    return {};
}

std::string_view to_string(LemmaPair pair) {
    return pair == LemmaPair::kXBxConj ? "xBx_conj" : "xBy";
}

std::string_view to_string(PropositionKind kind) {
    return kind == PropositionKind::kUplink ? "uplink_p1" : "downlink_p2";
}

std::string_view to_string(SiComponent c) {
    return c == SiComponent::kDirect ? "direct" : "reflected";
}

DecaySeries lemma1_decay_sweep(const LemmaMatrix& b_kind, LemmaPair pair,
                               const std::vector<int>& m_values, int trials,
                               const RngStream& rng, int workers) {
    std::string name = "lemma1_" + b_kind.name() + "_" + std::string(to_string(pair));
    return run_cells(std::move(name), m_values, trials, rng, workers,
                     [&](int m, RngStream& cell) {
                         RngStream x_rng = cell.split(1);
                         RngStream b_rng = cell.split(2);
                         const ComplexMatrixd x = cscg_sample(x_rng, m, 1);
                         const ComplexMatrixd b = b_kind.build(m, b_rng);
                         if (pair == LemmaPair::kXBy) {
                             RngStream y_rng = cell.split(3);
                             const ComplexMatrixd y = cscg_sample(y_rng, m, 1);
                             return std::abs(lemma1_statistic<double>(x, b, y));
                         }
                         return std::abs(lemma1_statistic<double>(x, b));
                     });
}

DecaySeries theorem1_sweep(const SystemParams& params, SiComponent component,
                           const std::vector<int>& m_values, int trials,
                           const RngStream& rng, int workers) {
    std::string name = "theorem1_" + std::string(to_string(component));
    return run_cells(std::move(name), m_values, trials, rng, workers,
                     [&](int m, RngStream& cell) {
                         const SystemParams p = with_m(params, m);
                         RngStream g_rng = cell.split(kTagUserChannel);
                         const ComplexMatrixd g = sample_user_channel(p, g_rng);
                         if (component == SiComponent::kDirect) {
                             return si_projection_statistic<double>(
                                 g, direct_si_matrix(p));
                         }
                         RngStream si_rng = cell.split(kTagBsSi);
                         return si_projection_statistic<double>(
                             g, sample_si_channel(p, si_rng).second);
                     });
}

DecaySeries orthogonality_sweep(const SystemParams& params,
                                const std::vector<int>& m_values, int trials,
                                const RngStream& rng, int workers) {
    return run_cells("orthogonality", m_values, trials, rng, workers,
                     [&](int m, RngStream& cell) {
                         const SystemParams p = with_m(params, m);
                         RngStream g_rng = cell.split(kTagUserChannel);
                         return orthogonality_deviation<double>(
                             sample_user_channel(p, g_rng), p);
                     });
}

double proposition_error(PropositionKind kind, const ChannelRealizationd& real,
                         const SystemParams& params) {
    const ComplexMatrixd a = build_precoder(real.G, params.scheme, params);
    ComplexVector<double> decoded;
    ComplexVector<double> target;
    if (kind == PropositionKind::kUplink) {
        const ComplexMatrixd w = build_receiver(real.G, params.scheme);
        decoded = normalize_uplink(uplink_terms(real, a, w, params), params.scheme,
                                   params)
                      .total();
        target = std::sqrt(params.p_u) * real.x_u.col(0);
    } else {
        decoded = normalize_downlink(downlink_terms(real, a, params), params.scheme,
                                     params)
                      .total();
        target = std::sqrt(params.p_d) * real.x_d.col(0);
    }
    return (decoded - target).cwiseAbs().mean();
}

DecaySeries proposition_convergence(PropositionKind kind,
                                    const SystemParams& params,
                                    const std::vector<int>& m_values, int trials,
                                    const RngStream& rng, int workers) {
    std::string name = std::string(to_string(kind)) + "_" +
                       std::string(to_string(params.scheme));
    const SamplingScope scope = kind == PropositionKind::kUplink
                                    ? SamplingScope::kFull
                                    : SamplingScope::kDownlinkOnly;
    return run_cells(std::move(name), m_values, trials, rng, workers,
                     [&](int m, RngStream& cell) {
                         const SystemParams p = with_m(params, m);
                         return proposition_error(
                             kind, sample_realization(p, cell, scope), p);
                     });
}

}  // namespace fdmimo
