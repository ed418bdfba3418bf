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
#include <utility>

#include "fdmimo/numerics.hpp"
#include "fdmimo/params.hpp"

namespace fdmimo {

/// One draw of every random quantity in the uplink/downlink model.
///
/// G is M x K, the BS self-interference parts Gs_bar (direct path) and
/// Gs_tilde (reflected path) are M x M, Gs_prime is the K x K UE-side SI
/// channel. The BS SI matrices are left empty (0 x 0) when a realization is
/// drawn for the downlink only.
template <typename Scalar>
struct ChannelRealization {
    ComplexMatrix<Scalar> G;
    ComplexMatrix<Scalar> Gs_bar;
    ComplexMatrix<Scalar> Gs_tilde;
    ComplexMatrix<Scalar> Gs_prime;
    ComplexMatrix<Scalar> x_u;
    ComplexMatrix<Scalar> x_d;
    ComplexMatrix<Scalar> n;
    ComplexMatrix<Scalar> n_d;

    bool has_bs_si() const { return Gs_bar.size() > 0; }
};

using ChannelRealizationd = ChannelRealization<double>;

/// G = H D^{1/2}: column k carries entry variance beta_k[k].
template <typename Scalar = double>
ComplexMatrix<Scalar> sample_user_channel(const SystemParams& params,
                                          RngStream& rng) {
    ComplexMatrix<Scalar> g = cscg_sample<Scalar>(rng, params.M, params.K);
    for (int k = 0; k < params.K; ++k) {
        g.col(k) *= static_cast<Scalar>(std::sqrt(params.beta_k.at(k)));
    }
    return g;
}

/// Direct-path BS SI matrix: every entry equals c_direct.
template <typename Scalar = double>
ComplexMatrix<Scalar> direct_si_matrix(const SystemParams& params) {
    return ComplexMatrix<Scalar>::Constant(
        params.M, params.M,
        std::complex<Scalar>(static_cast<Scalar>(params.c_direct.real()),
                             static_cast<Scalar>(params.c_direct.imag())));
}

/// (Gs_bar, Gs_tilde); Gs_tilde = H_s * sqrt(beta_si) I_M.
template <typename Scalar = double>
std::pair<ComplexMatrix<Scalar>, ComplexMatrix<Scalar>> sample_si_channel(
    const SystemParams& params, RngStream& rng) {
    ComplexMatrix<Scalar> tilde = cscg_sample<Scalar>(rng, params.M, params.M);
    tilde *= static_cast<Scalar>(std::sqrt(params.beta_si));
    return {direct_si_matrix<Scalar>(params), std::move(tilde)};
}

/// Reflected-path amplitude for the UE SI entries under the active convention.
inline double ue_reflected_amplitude(const SystemParams& params) {
    return params.ue_reflected_amplitude_convention ==
                   UeReflectedConvention::kSqrtBetaPrime
               ? std::sqrt(params.beta_prime)
               : params.beta_prime;
}

/// K x K with entries c' + a h'_pq.
template <typename Scalar = double>
ComplexMatrix<Scalar> sample_downlink_si_channel(const SystemParams& params,
                                                 RngStream& rng) {
    ComplexMatrix<Scalar> h = cscg_sample<Scalar>(rng, params.K, params.K);
    const auto a = static_cast<Scalar>(ue_reflected_amplitude(params));
    const std::complex<Scalar> c(static_cast<Scalar>(params.c_prime.real()),
                                 static_cast<Scalar>(params.c_prime.imag()));
    return ((h * a).array() + c).matrix();
}

template <typename Scalar>
struct SymbolDraw {
    ComplexMatrix<Scalar> x_u;
    ComplexMatrix<Scalar> x_d;
    ComplexMatrix<Scalar> n;
    ComplexMatrix<Scalar> n_d;
};

/// Gaussian-codebook symbols and unit-variance noise, drawn in the order
/// x_u, x_d, n, n_d.
template <typename Scalar = double>
SymbolDraw<Scalar> sample_symbols(const SystemParams& params, RngStream& rng) {
    SymbolDraw<Scalar> out;
    out.x_u = cscg_sample<Scalar>(rng, params.K, 1);
    out.x_d = cscg_sample<Scalar>(rng, params.K, 1);
    out.n = cscg_sample<Scalar>(rng, params.M, 1);
    out.n_d = cscg_sample<Scalar>(rng, params.K, 1);
    return out;
}

enum class SamplingScope { kFull, kDownlinkOnly };

/// Substream tags used by sample_realization. Each component draws from
/// its own child stream so skipping one component never shifts another.
enum StreamTag : std::uint64_t {
    kTagUserChannel = 1,
    kTagBsSi = 2,
    kTagUeSi = 3,
    kTagSymbols = 4,
};

template <typename Scalar = double>
ChannelRealization<Scalar> sample_realization(
    const SystemParams& params, const RngStream& cell,
    SamplingScope scope = SamplingScope::kFull) {
    ChannelRealization<Scalar> out;
    RngStream g_rng = cell.split(kTagUserChannel);
    out.G = sample_user_channel<Scalar>(params, g_rng);
    if (scope == SamplingScope::kFull) {
        RngStream si_rng = cell.split(kTagBsSi);
        auto [bar, tilde] = sample_si_channel<Scalar>(params, si_rng);
        out.Gs_bar = std::move(bar);
        out.Gs_tilde = std::move(tilde);
    }
    RngStream ue_rng = cell.split(kTagUeSi);
    out.Gs_prime = sample_downlink_si_channel<Scalar>(params, ue_rng);
    RngStream sym_rng = cell.split(kTagSymbols);
    SymbolDraw<Scalar> sym = sample_symbols<Scalar>(params, sym_rng);
    out.x_u = std::move(sym.x_u);
    out.x_d = std::move(sym.x_d);
    out.n = std::move(sym.n);
    out.n_d = std::move(sym.n_d);
    return out;
}

}  // namespace fdmimo
