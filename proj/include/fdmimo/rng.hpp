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

#include <array>
#include <complex>
#include <cstdint>

namespace fdmimo {

/// Counter-based random stream built on Philox4x32-10.
///
/// The 64-bit master seed is the Philox key. The 128-bit counter holds the
/// stream id in its upper two words and a block index in its lower two, so
/// every (master_seed, stream_id) pair addresses a disjoint, reproducible
/// sequence of 128-bit blocks. Parallel work never shares a stream; each
/// unit of work derives its own with split().
///
/// Gaussian draws use the Box-Muller transform on one block each:
/// words 0-1 give u1, words 2-3 give u2 (53-bit uniforms on (0,1)), and
///   re = sqrt(-ln u1) cos(2 pi u2),  im = sqrt(-ln u1) sin(2 pi u2),
/// so re and im are independent N(0, 1/2) and re + j im is CN(0,1).
class RngStream {
public:
    using Block = std::array<std::uint32_t, 4>;

    RngStream(std::uint64_t master_seed, std::uint64_t stream_id) noexcept
        : master_seed_(master_seed), stream_id_(stream_id) {}

    std::uint64_t master_seed() const noexcept { return master_seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }
    std::uint64_t counter() const noexcept { return counter_; }

    /// Next raw 128-bit block; advances the counter by one.
    Block next_block() noexcept;

    /// Uniform double on the open interval (0, 1) with 53 random bits.
    double uniform() noexcept;

    /// One circularly symmetric CN(0,1) sample (consumes exactly one block).
    std::complex<double> cscg() noexcept;

    /// Child stream under the same master seed, keyed by (this stream, a, b).
    RngStream split(std::uint64_t a, std::uint64_t b = 0) const noexcept;

private:
    std::uint64_t master_seed_;
    std::uint64_t stream_id_;
    std::uint64_t counter_ = 0;
};

/// Raw Philox4x32-10 bijection, exposed for known-answer tests.
RngStream::Block philox4x32_10(RngStream::Block counter,
                               std::array<std::uint32_t, 2> key) noexcept;

/// SplitMix64 finalizer; used to derive stream ids.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace fdmimo
