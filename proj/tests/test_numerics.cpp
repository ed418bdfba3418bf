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

#include <doctest.h>

#include <cstring>

#include "fdmimo/numerics.hpp"

using namespace fdmimo;

TEST_CASE("philox4x32-10 known-answer vectors") {
    // Reference vectors from the Random123 distribution (kat_vectors).
    const auto zero = philox4x32_10({0, 0, 0, 0}, {0, 0});
    CHECK(zero == RngStream::Block{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    const auto ones = philox4x32_10({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                    {0xffffffffu, 0xffffffffu});
    CHECK(ones == RngStream::Block{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("rng streams are reproducible and distinct") {
    RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    const auto xa = a.next_block();
    CHECK(xa == b.next_block());
    CHECK(xa != c.next_block());
    CHECK(xa != d.next_block());
    CHECK(a.counter() == 1);

    const RngStream parent(42, 0);
    CHECK(parent.split(1, 2).stream_id() == parent.split(1, 2).stream_id());
    CHECK(parent.split(1, 2).stream_id() != parent.split(2, 1).stream_id());
}

TEST_CASE("cscg_sample determinism is byte-exact") {
    RngStream r1(1234, 5), r2(1234, 5);
    const ComplexMatrixd a = cscg_sample(r1, 2, 2);
    const ComplexMatrixd b = cscg_sample(r2, 2, 2);
    CHECK(std::memcmp(a.data(), b.data(), sizeof(cd) * 4) == 0);

    RngStream r3(1234, 5), r4(1234, 5);
    const ComplexMatrixd big1 = cscg_sample(r3, 17, 9);
    const ComplexMatrixd big2 = cscg_sample(r4, 17, 9);
    CHECK(std::memcmp(big1.data(), big2.data(), sizeof(cd) * big1.size()) == 0);
}

TEST_CASE("cscg_sample moments over 1e5 draws") {
    RngStream rng(99, 1);
    const ComplexMatrixd h = cscg_sample(rng, 100000, 1);
    const cd mean = h.mean();
    const double power = h.squaredNorm() / 1e5;
    const cd pseudo = h.array().square().mean();
    double var_re = 0.0, var_im = 0.0;
    for (Eigen::Index i = 0; i < h.size(); ++i) {
        var_re += std::pow(h(i).real() - mean.real(), 2);
        var_im += std::pow(h(i).imag() - mean.imag(), 2);
    }
    var_re /= 1e5;
    var_im /= 1e5;
    CHECK(std::abs(mean) < 0.02);
    CHECK(power >= 0.97);
    CHECK(power <= 1.03);
    CHECK(var_re + var_im >= 0.97);
    CHECK(var_re + var_im <= 1.03);
    CHECK(var_re == doctest::Approx(0.5).epsilon(0.04));
    CHECK(var_im == doctest::Approx(0.5).epsilon(0.04));
    CHECK(std::abs(pseudo) < 0.02);
}

TEST_CASE("cscg_sample rejects empty shapes") {
    RngStream rng(1, 1);
    CHECK_THROWS_AS(cscg_sample(rng, 0, 3), ShapeError);
}

TEST_CASE("matmul examples") {
    RngStream rng(5, 5);
    const ComplexMatrixd x = cscg_sample(rng, 3, 3);
    CHECK(matmul(ComplexMatrixd::Identity(3, 3), x) == x);

    ComplexMatrixd a(2, 2), b(2, 1), expected(2, 1);
    a << cd(1, 0), cd(0, 1), cd(0, 0), cd(1, 0);
    b << cd(1, 0), cd(1, 0);
    expected << cd(1, 1), cd(1, 0);
    CHECK(matmul(a, b) == expected);

    const ComplexMatrixd p = cscg_sample(rng, 3, 4);
    const ComplexMatrixd q = cscg_sample(rng, 4, 2);
    const ComplexMatrixd lhs = adjoint(matmul(p, q), AdjointMode::kHermitian);
    const ComplexMatrixd rhs = matmul(adjoint(q, AdjointMode::kHermitian),
                                      adjoint(p, AdjointMode::kHermitian));
    CHECK(frobenius_norm(lhs - rhs) < 1e-12);

    CHECK_THROWS_AS(matmul(p, p), ShapeError);
}

TEST_CASE("matmul associativity on random conformable triples") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        RngStream rng(seed, 11);
        const auto r = 1 + static_cast<int>(rng.uniform() * 8);
        const auto s = 1 + static_cast<int>(rng.uniform() * 8);
        const auto t = 1 + static_cast<int>(rng.uniform() * 8);
        const auto u = 1 + static_cast<int>(rng.uniform() * 8);
        const ComplexMatrixd a = cscg_sample(rng, r, s);
        const ComplexMatrixd b = cscg_sample(rng, s, t);
        const ComplexMatrixd c = cscg_sample(rng, t, u);
        const ComplexMatrixd left = matmul(matmul(a, b), c);
        const ComplexMatrixd right = matmul(a, matmul(b, c));
        CHECK(frobenius_norm(left - right) <= 1e-10 * frobenius_norm(left));
    }
}

TEST_CASE("adjoint modes") {
    ComplexMatrixd i1(1, 1);
    i1 << cd(0, 1);
    CHECK(adjoint(i1, AdjointMode::kHermitian)(0, 0) == cd(0, -1));

    RngStream rng(3, 3);
    const ComplexMatrixd a = cscg_sample(rng, 2, 3);
    const ComplexMatrixd t = adjoint(a, AdjointMode::kTranspose);
    REQUIRE(t.rows() == 3);
    REQUIRE(t.cols() == 2);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(t(j, i) == a(i, j));
    }
    CHECK(adjoint(adjoint(a, AdjointMode::kConjugate), AdjointMode::kConjugate) == a);
    CHECK(adjoint(a, AdjointMode::kHermitian) ==
          adjoint(adjoint(a, AdjointMode::kConjugate), AdjointMode::kTranspose));
}

TEST_CASE("invert_small examples") {
    const ComplexMatrixd two = 2.0 * ComplexMatrixd::Identity(4, 4);
    CHECK(frobenius_norm(invert_small(two) - 0.5 * ComplexMatrixd::Identity(4, 4)) == 0.0);

    ComplexMatrixd rank1(2, 2);
    rank1 << cd(1), cd(1), cd(1), cd(1);
    CHECK_THROWS_AS(invert_small(rank1), SingularMatrixError);

    CHECK_THROWS_AS(invert_small(ComplexMatrixd::Zero(3, 3)), SingularMatrixError);
    CHECK_THROWS_AS(invert_small(ComplexMatrixd::Zero(2, 3)), ShapeError);

    // needs a row swap
    ComplexMatrixd perm(2, 2);
    perm << cd(0), cd(1), cd(1), cd(0);
    CHECK(frobenius_norm(perm * invert_small(perm) - ComplexMatrixd::Identity(2, 2)) == 0.0);
}

TEST_CASE("invert_small residual on random well-conditioned matrices") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RngStream rng(seed, 21);
        const int n = 1 + static_cast<int>(rng.uniform() * 8);
        const ComplexMatrixd a = cscg_sample(rng, n, n);
        Eigen::JacobiSVD<ComplexMatrixd> svd(a);
        const auto sv = svd.singularValues();
        if (sv(0) / sv(n - 1) >= 1e6) continue;
        ++checked;
        const ComplexMatrixd residual = a * invert_small(a) - ComplexMatrixd::Identity(n, n);
        CHECK(frobenius_norm(residual) < 1e-10);
    }
    CHECK(checked > 150);
}

TEST_CASE("frobenius_norm examples") {
    CHECK(frobenius_norm(ComplexMatrixd::Identity(4, 4)) == 2.0);
    CHECK(frobenius_norm(ComplexMatrixd::Zero(3, 2)) == 0.0);
    ComplexMatrixd v(1, 2);
    v << cd(0, 3), cd(4, 0);
    CHECK(frobenius_norm(v) == doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("numerics templates instantiate for float") {
    RngStream rng(8, 8);
    const ComplexMatrix<float> a = cscg_sample<float>(rng, 3, 3);
    const ComplexMatrix<float> inv = invert_small(a);
    CHECK(frobenius_norm(ComplexMatrix<float>(a * inv) -
                         ComplexMatrix<float>::Identity(3, 3)) < 1e-4f);
}
