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

#include "fdmimo/params.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fdmimo/errors.hpp"

namespace fdmimo {

std::string_view to_string(Scheme s) {
    return s == Scheme::kZf ? "ZF" : "MRT_MRC";
}

std::string_view to_string(UeReflectedConvention c) {
    return c == UeReflectedConvention::kSqrtBetaPrime ? "sqrt_beta_prime"
                                                      : "beta_prime";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "zf" || text == "ZF") return Scheme::kZf;
    if (text == "mrt" || text == "MRT" || text == "mrc" || text == "MRT_MRC" ||
        text == "mrt_mrc") {
        return Scheme::kMrtMrc;
    }
    throw UsageError("unknown scheme '" + std::string(text) +
                     "' (expected zf or mrt)");
}

void SystemParams::validate() const {
    auto finite = [](std::complex<double> z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    };
    if (K < 1) throw ParameterError("K must be >= 1");
    if (M <= K) {
        throw ParameterError("M must exceed K (M=" + std::to_string(M) +
                             ", K=" + std::to_string(K) + ")");
    }
    // Zero power switches a link off; the degenerate cases are exercised.
    if (!(p_u >= 0.0) || !(p_d >= 0.0) || !std::isfinite(p_u) ||
        !std::isfinite(p_d)) {
        throw ParameterError("p_u and p_d must be finite and >= 0");
    }
    if (beta_k.size() != static_cast<std::size_t>(K)) {
        throw ParameterError("beta_k has " + std::to_string(beta_k.size()) +
                             " entries, expected K=" + std::to_string(K));
    }
    for (double b : beta_k) {
        if (!(b > 0.0) || !std::isfinite(b)) {
            throw ParameterError("beta_k entries must be finite and > 0");
        }
    }
    if (!(beta_si >= 0.0) || !(beta_prime >= 0.0) || !std::isfinite(beta_si) ||
        !std::isfinite(beta_prime)) {
        throw ParameterError("beta_si and beta_prime must be finite and >= 0");
    }
    if (!finite(c_direct) || !finite(c_prime)) {
        throw ParameterError("SI coefficients must be finite");
    }
}

double SystemParams::inverse_beta_sum() const {
    return std::accumulate(beta_k.begin(), beta_k.end(), 0.0,
                           [](double acc, double b) { return acc + 1.0 / b; });
}

double SystemParams::beta_sum() const {
    return std::accumulate(beta_k.begin(), beta_k.end(), 0.0);
}

}  // namespace fdmimo
