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

// Numerical checks of the large-array concentration results: scaled
// quadratic forms, SI projections onto the user subspace, channel
// orthogonality and the decoded-signal limits. Almost-sure convergence is
// checked as median decay over a geometric grid of array sizes.

#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "fdmimo/channel.hpp"
#include "fdmimo/numerics.hpp"
#include "fdmimo/processing.hpp"

namespace fdmimo {

struct QuantileSummary {
    double lower_quartile = 0.0;
    double median = 0.0;
    double upper_quartile = 0.0;
};

/// Linear-interpolated quantile (type 7) of an unsorted sample.
double quantile(std::vector<double> values, double q);

/// Per-M samples of one statistic's magnitude, with quartile summaries.
struct DecaySeries {
    std::string statistic;
    std::vector<int> m_values;
    std::vector<std::vector<double>> stats;
    std::vector<QuantileSummary> summary;

    /// Recomputes summary from stats; throws if an invariant is violated.
    void summarize();
    std::vector<double> medians() const;
    bool medians_strictly_decreasing() const;
};

/// x^H B x^* / M^{3/2}, or x^H B y / M^{3/2} when y is given.
template <typename Scalar>
std::complex<Scalar> lemma1_statistic(
    const ComplexMatrix<Scalar>& x, const ComplexMatrix<Scalar>& b,
    const std::optional<ComplexMatrix<Scalar>>& y = std::nullopt) {
    const Eigen::Index m = x.rows();
    if (x.cols() != 1 || b.rows() != m || b.cols() != m ||
        (y && (y->rows() != m || y->cols() != 1))) {
        throw ShapeError("lemma1_statistic: expected M x 1 vectors and M x M B");
    }
    const Scalar scale = std::pow(static_cast<Scalar>(m), Scalar(1.5));
    const ComplexMatrix<Scalar> bx = y ? ComplexMatrix<Scalar>(b * *y)
                                       : ComplexMatrix<Scalar>(b * x.conjugate());
    return (x.adjoint() * bx)(0, 0) / scale;
}

/// || G^H Gs G^* ||_F / M^{3/2}.
template <typename Scalar>
Scalar si_projection_statistic(const ComplexMatrix<Scalar>& g,
                               const ComplexMatrix<Scalar>& gs_component) {
    const Eigen::Index m = g.rows();
    if (gs_component.rows() != m || gs_component.cols() != m) {
        throw ShapeError("si_projection_statistic: SI component must be " +
                         detail::shape_str(m, m));
    }
    const ComplexMatrix<Scalar> inner = gs_component * g.conjugate();
    const ComplexMatrix<Scalar> proj = g.adjoint() * inner;
    return proj.norm() / std::pow(static_cast<Scalar>(m), Scalar(1.5));
}

/// || G^T G^* / M - D ||_F, D = diag(beta_k).
template <typename Scalar>
Scalar orthogonality_deviation(const ComplexMatrix<Scalar>& g,
                               const SystemParams& params) {
    const Eigen::Index k_users = g.cols();
    if (static_cast<std::size_t>(k_users) != params.beta_k.size()) {
        throw ShapeError("orthogonality_deviation: beta_k length != G columns");
    }
    ComplexMatrix<Scalar> dev =
        (g.transpose() * g.conjugate()) / static_cast<Scalar>(g.rows());
    for (Eigen::Index k = 0; k < k_users; ++k) {
        dev(k, k) -= static_cast<Scalar>(params.beta_k[k]);
    }
    return dev.norm();
}

/// Matrix B used in the quadratic-form sweep.
struct LemmaMatrix {
    enum class Kind { kAllEqual, kRandomIid, kIdentity };
    Kind kind = Kind::kIdentity;
    double value = 1.0;  ///< entry value c (all-equal) or entry variance (iid)

    static LemmaMatrix all_equal(double c) { return {Kind::kAllEqual, c}; }
    static LemmaMatrix random_iid(double variance) { return {Kind::kRandomIid, variance}; }
    static LemmaMatrix identity() { return {Kind::kIdentity, 1.0}; }

    std::string name() const;
    ComplexMatrixd build(int m, RngStream& rng) const;
};

enum class LemmaPair { kXBxConj, kXBy };

enum class PropositionKind { kUplink, kDownlink };

enum class SiComponent { kDirect, kReflected };

std::string_view to_string(LemmaPair pair);
std::string_view to_string(PropositionKind kind);
std::string_view to_string(SiComponent c);

/// Fresh x (and y) and B per (M, trial) cell; records |statistic|.
DecaySeries lemma1_decay_sweep(const LemmaMatrix& b_kind, LemmaPair pair,
                               const std::vector<int>& m_values, int trials,
                               const RngStream& rng, int workers = 1);

/// Per cell: draw G and the chosen SI component at params with M replaced
/// by each grid value; records si_projection_statistic.
DecaySeries theorem1_sweep(const SystemParams& params, SiComponent component,
                           const std::vector<int>& m_values, int trials,
                           const RngStream& rng, int workers = 1);

/// Per cell: || G^T G^* / M - D ||_F.
DecaySeries orthogonality_sweep(const SystemParams& params,
                                const std::vector<int>& m_values, int trials,
                                const RngStream& rng, int workers = 1);

/// Mean over users of |decoded_k - target_k| for one realization.
/// Uplink: decoded = r_k (ZF) or r_k / (M beta_k) (MRC), target sqrt(p_u) x_u.
/// Downlink: decoded = y_k / rho_k, target sqrt(p_d) x_d.
double proposition_error(PropositionKind kind, const ChannelRealizationd& real,
                         const SystemParams& params);

DecaySeries proposition_convergence(PropositionKind kind,
                                    const SystemParams& params,
                                    const std::vector<int>& m_values, int trials,
                                    const RngStream& rng, int workers = 1);

}  // namespace fdmimo
