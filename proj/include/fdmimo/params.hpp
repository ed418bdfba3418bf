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

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace fdmimo {

enum class Scheme { kZf, kMrtMrc };

/// Amplitude applied to h'_pq in the UE-side SI channel.
enum class UeReflectedConvention {
    kSqrtBetaPrime,  ///< sqrt(beta'), entry variance beta' (default)
    kBetaPrime,      ///< beta', entry variance beta'^2
};

std::string_view to_string(Scheme s);
std::string_view to_string(UeReflectedConvention c);
Scheme parse_scheme(std::string_view text);

/// Scenario constants. All powers and fading gains are linear.
struct SystemParams {
    int M = 64;
    int K = 4;
    double p_u = 10.0;
    double p_d = 19.952623149688797;  // 13 dB
    std::vector<double> beta_k = std::vector<double>(4, 0.1);
    double beta_si = 0.8;
    std::complex<double> c_direct = 0.5;
    std::complex<double> c_prime = 0.6;
    double beta_prime = 0.7;
    Scheme scheme = Scheme::kZf;
    bool downlink_si_uses_uplink_power = false;
    UeReflectedConvention ue_reflected_amplitude_convention =
        UeReflectedConvention::kSqrtBetaPrime;

    /// Throws ParameterError on the first violated invariant.
    void validate() const;

    /// Sum of 1/beta_k.
    double inverse_beta_sum() const;
    double beta_sum() const;
};

}  // namespace fdmimo
