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

#include <cmath>
#include <string>

#include "fdmimo/channel.hpp"
#include "fdmimo/numerics.hpp"
#include "fdmimo/params.hpp"

namespace fdmimo {

template <typename Scalar>
using ComplexVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

/// Per-user decomposition of a received signal into its five additive parts.
template <typename Scalar>
struct TermBreakdown {
    ComplexVector<Scalar> desired;
    ComplexVector<Scalar> inter_user;
    ComplexVector<Scalar> si_direct;
    ComplexVector<Scalar> si_reflected;
    ComplexVector<Scalar> noise;

    ComplexVector<Scalar> total() const {
        return desired + inter_user + si_direct + si_reflected + noise;
    }

    /// Every term of user k divided by divisor[k].
    TermBreakdown scaled(const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& divisor) const {
        TermBreakdown out;
        const auto inv = divisor.cwiseInverse().template cast<std::complex<Scalar>>();
        out.desired = desired.cwiseProduct(inv);
        out.inter_user = inter_user.cwiseProduct(inv);
        out.si_direct = si_direct.cwiseProduct(inv);
        out.si_reflected = si_reflected.cwiseProduct(inv);
        out.noise = noise.cwiseProduct(inv);
        return out;
    }
};

using TermBreakdownd = TermBreakdown<double>;

/// alpha_ZF = sqrt((M-K) / sum 1/beta_k), alpha_MRT = sqrt(1 / (M sum beta_k)).
/// Both make E{s^H s} = 1.
inline double normalization_factor(Scheme scheme, const SystemParams& params) {
    const double m = params.M;
    if (scheme == Scheme::kZf) {
        if (params.M <= params.K) {
            throw ParameterError("ZF normalization needs M > K (M=" +
                                 std::to_string(params.M) + ", K=" +
                                 std::to_string(params.K) + ")");
        }
        return std::sqrt((m - params.K) / params.inverse_beta_sum());
    }
    if (params.M < 1) throw ParameterError("M must be >= 1");
    return std::sqrt(1.0 / (m * params.beta_sum()));
}

/// Effective downlink amplitude rho_k: alpha_ZF, or alpha_MRT * M * beta_k.
inline double processing_gain(Scheme scheme, const SystemParams& params, int k) {
    const double alpha = normalization_factor(scheme, params);
    if (scheme == Scheme::kZf) return alpha;
    return alpha * params.M * params.beta_k.at(k);
}

namespace detail {

template <typename Derived>
void check_channel_shape(const Eigen::MatrixBase<Derived>& g,
                         const SystemParams& params, const char* who) {
    if (g.rows() != params.M || g.cols() != params.K) {
        throw ShapeError(std::string(who) + ": G is " +
                         shape_str(g.rows(), g.cols()) + ", expected " +
                         shape_str(params.M, params.K));
    }
}

}  // namespace detail

/// Precoder A (M x K): ZF alpha G^* (G^T G^*)^{-1}, MRT alpha G^*.
template <typename Derived>
auto build_precoder(const Eigen::MatrixBase<Derived>& g, Scheme scheme,
                    const SystemParams& params) {
    using Scalar = typename Derived::Scalar::value_type;
    detail::check_channel_shape(g, params, "build_precoder");
    const auto alpha = static_cast<Scalar>(normalization_factor(scheme, params));
    ComplexMatrix<Scalar> g_conj = g.conjugate();
    if (scheme == Scheme::kMrtMrc) {
        ComplexMatrix<Scalar> a = alpha * g_conj;
        return a;
    }
    const ComplexMatrix<Scalar> gram = g.transpose() * g_conj;
    ComplexMatrix<Scalar> a = alpha * (g_conj * invert_small(gram));
    return a;
}

/// Receiver W^T (K x M): ZF (G^H G)^{-1} G^H, MRC G^H.
template <typename Derived>
auto build_receiver(const Eigen::MatrixBase<Derived>& g, Scheme scheme) {
    using Scalar = typename Derived::Scalar::value_type;
    ComplexMatrix<Scalar> gh = g.adjoint();
    if (scheme == Scheme::kMrtMrc) return gh;
    const ComplexMatrix<Scalar> gram = gh * g;
    ComplexMatrix<Scalar> w = invert_small(gram) * gh;
    return w;
}

/// Exact per-user uplink decomposition of r = W^T y_BS for given A and W^T.
template <typename Scalar>
TermBreakdown<Scalar> uplink_terms(const ChannelRealization<Scalar>& real,
                                   const ComplexMatrix<Scalar>& precoder,
                                   const ComplexMatrix<Scalar>& receiver,
                                   const SystemParams& params) {
    using Complex = std::complex<Scalar>;
    const Eigen::Index m = real.G.rows();
    const Eigen::Index k_users = real.G.cols();
    if (!real.has_bs_si() || real.Gs_bar.rows() != m || real.Gs_tilde.rows() != m) {
        throw ShapeError("uplink_terms: realization lacks M x M BS SI matrices");
    }
    if (receiver.rows() != k_users || receiver.cols() != m ||
        precoder.rows() != m || precoder.cols() != k_users) {
        throw ShapeError("uplink_terms: precoder/receiver do not match G");
    }
    const auto sqrt_pu = static_cast<Scalar>(std::sqrt(params.p_u));
    const auto sqrt_pd = static_cast<Scalar>(std::sqrt(params.p_d));

    const ComplexMatrix<Scalar> effective = receiver * real.G;  // W^T G
    const ComplexMatrix<Scalar> s = precoder * real.x_d;
    const ComplexMatrix<Scalar> direct = receiver * (real.Gs_bar * s);
    const ComplexMatrix<Scalar> reflected = receiver * (real.Gs_tilde * s);
    const ComplexMatrix<Scalar> noise = receiver * real.n;

    TermBreakdown<Scalar> out;
    out.desired.resize(k_users);
    out.inter_user.resize(k_users);
    for (Eigen::Index k = 0; k < k_users; ++k) {
        Complex inter(0);
        for (Eigen::Index i = 0; i < k_users; ++i) {
            if (i != k) inter += effective(k, i) * real.x_u(i, 0);
        }
        out.desired(k) = sqrt_pu * effective(k, k) * real.x_u(k, 0);
        out.inter_user(k) = sqrt_pu * inter;
    }
    out.si_direct = sqrt_pd * direct.col(0);
    out.si_reflected = sqrt_pd * reflected.col(0);
    out.noise = noise.col(0);
    return out;
}

/// Uplink decomposition with the precoder and receiver of params.scheme.
template <typename Scalar>
TermBreakdown<Scalar> uplink_terms(const ChannelRealization<Scalar>& real,
                                   const SystemParams& params) {
    const ComplexMatrix<Scalar> a = build_precoder(real.G, params.scheme, params);
    const ComplexMatrix<Scalar> w = build_receiver(real.G, params.scheme);
    return uplink_terms(real, a, w, params);
}

/// Scale applied to the UE-side SI: sqrt(p_u) under the y_UE convention,
/// 1 under the per-user convention (default).
inline double downlink_si_gain(const SystemParams& params) {
    return params.downlink_si_uses_uplink_power ? std::sqrt(params.p_u) : 1.0;
}

/// Exact per-user downlink decomposition of y_UE = sqrt(p_d) G^T A x_d + ...
/// si_direct carries the c' part, si_reflected the h' part.
template <typename Scalar>
TermBreakdown<Scalar> downlink_terms(const ChannelRealization<Scalar>& real,
                                     const ComplexMatrix<Scalar>& precoder,
                                     const SystemParams& params) {
    using Complex = std::complex<Scalar>;
    const Eigen::Index k_users = real.G.cols();
    if (precoder.rows() != real.G.rows() || precoder.cols() != k_users ||
        real.Gs_prime.rows() != k_users || real.Gs_prime.cols() != k_users) {
        throw ShapeError("downlink_terms: dimensions inconsistent with G");
    }
    const auto sqrt_pd = static_cast<Scalar>(std::sqrt(params.p_d));
    const auto gamma = static_cast<Scalar>(downlink_si_gain(params));
    const Complex c(static_cast<Scalar>(params.c_prime.real()),
                    static_cast<Scalar>(params.c_prime.imag()));

    const ComplexMatrix<Scalar> effective = real.G.transpose() * precoder;  // G^T A
    const ComplexMatrix<Scalar> reflected_part =
        (real.Gs_prime.array() - c).matrix();
    const Complex x_u_sum = real.x_u.sum();
    const ComplexMatrix<Scalar> reflected = reflected_part * real.x_u;

    TermBreakdown<Scalar> out;
    out.desired.resize(k_users);
    out.inter_user.resize(k_users);
    out.si_direct.resize(k_users);
    for (Eigen::Index k = 0; k < k_users; ++k) {
        Complex inter(0);
        for (Eigen::Index q = 0; q < k_users; ++q) {
            if (q != k) inter += effective(k, q) * real.x_d(q, 0);
        }
        out.desired(k) = sqrt_pd * effective(k, k) * real.x_d(k, 0);
        out.inter_user(k) = sqrt_pd * inter;
        out.si_direct(k) = gamma * c * x_u_sum;
    }
    out.si_reflected = gamma * reflected.col(0);
    out.noise = real.n_d.col(0);
    return out;
}

/// MRT/MRC uplink terms divided by M beta_k; ZF terms are returned as-is.
template <typename Scalar>
TermBreakdown<Scalar> normalize_uplink(const TermBreakdown<Scalar>& terms,
                                       Scheme scheme, const SystemParams& params) {
    if (scheme == Scheme::kZf) return terms;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> div(params.K);
    for (int k = 0; k < params.K; ++k) {
        div(k) = static_cast<Scalar>(params.M * params.beta_k.at(k));
    }
    return terms.scaled(div);
}

/// Downlink terms divided by rho_k.
template <typename Scalar>
TermBreakdown<Scalar> normalize_downlink(const TermBreakdown<Scalar>& terms,
                                         Scheme scheme, const SystemParams& params) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> div(params.K);
    for (int k = 0; k < params.K; ++k) {
        div(k) = static_cast<Scalar>(processing_gain(scheme, params, k));
    }
    return terms.scaled(div);
}

}  // namespace fdmimo
