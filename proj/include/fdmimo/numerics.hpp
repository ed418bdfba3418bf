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

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <string>
#include <utility>

#include "fdmimo/errors.hpp"
#include "fdmimo/rng.hpp"

namespace fdmimo {

/// Dense complex matrix, row-major. Vectors are single-column matrices.
template <typename Scalar>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic,
                                    Eigen::Dynamic, Eigen::RowMajor>;

using ComplexMatrixd = ComplexMatrix<double>;
using cd = std::complex<double>;

enum class AdjointMode { kConjugate, kTranspose, kHermitian };

namespace detail {

inline std::string shape_str(Eigen::Index r, Eigen::Index c) {
    return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace detail

/// rows x cols matrix of independent CN(0,1) entries, filled in row-major
/// order, one RNG block per entry.
template <typename Scalar = double>
ComplexMatrix<Scalar> cscg_sample(RngStream& rng, Eigen::Index rows,
                                  Eigen::Index cols) {
    if (rows < 1 || cols < 1) {
        throw ShapeError("cscg_sample: dimensions must be >= 1, got " +
                         detail::shape_str(rows, cols));
    }
    ComplexMatrix<Scalar> out(rows, cols);
    std::complex<Scalar>* data = out.data();
    for (Eigen::Index i = 0; i < rows * cols; ++i) {
        const std::complex<double> z = rng.cscg();
        data[i] = {static_cast<Scalar>(z.real()), static_cast<Scalar>(z.imag())};
    }
    return out;
}

/// Checked product; throws ShapeError unless lhs.cols() == rhs.rows().
template <typename DerivedA, typename DerivedB>
auto matmul(const Eigen::MatrixBase<DerivedA>& lhs,
            const Eigen::MatrixBase<DerivedB>& rhs) {
    using Scalar = typename DerivedA::Scalar::value_type;
    if (lhs.cols() != rhs.rows()) {
        throw ShapeError("matmul: cannot multiply " +
                         detail::shape_str(lhs.rows(), lhs.cols()) + " by " +
                         detail::shape_str(rhs.rows(), rhs.cols()));
    }
    ComplexMatrix<Scalar> out = lhs * rhs;
    return out;
}

template <typename Derived>
auto adjoint(const Eigen::MatrixBase<Derived>& a, AdjointMode mode) {
    using Scalar = typename Derived::Scalar::value_type;
    ComplexMatrix<Scalar> out;
    switch (mode) {
        case AdjointMode::kConjugate: out = a.conjugate(); break;
        case AdjointMode::kTranspose: out = a.transpose(); break;
        case AdjointMode::kHermitian: out = a.adjoint(); break;
    }
    return out;
}

/// Gauss-Jordan inverse with partial pivoting for the small K x K Gram
/// matrices. A pivot with magnitude below 1e-12 times the largest input
/// entry magnitude raises SingularMatrixError.
template <typename Derived>
auto invert_small(const Eigen::MatrixBase<Derived>& a) {
    using Scalar = typename Derived::Scalar::value_type;
    using Complex = std::complex<Scalar>;
    const Eigen::Index n = a.rows();
    if (n != a.cols() || n < 1) {
        throw ShapeError("invert_small: expected a square matrix, got " +
                         detail::shape_str(a.rows(), a.cols()));
    }
    ComplexMatrix<Scalar> work = a;
    ComplexMatrix<Scalar> inv = ComplexMatrix<Scalar>::Identity(n, n);
    const Scalar scale = work.cwiseAbs().maxCoeff();
    const Scalar tol = Scalar(1e-12) * scale;

    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot_row = col;
        work.col(col).tail(n - col).cwiseAbs().maxCoeff(&pivot_row);
        pivot_row += col;
        const Scalar pivot_mag = std::abs(work(pivot_row, col));
        if (!(pivot_mag >= tol) || pivot_mag == Scalar(0)) {
            throw SingularMatrixError("invert_small: pivot " +
                                      std::to_string(double(pivot_mag)) +
                                      " below tolerance in column " +
                                      std::to_string(col));
        }
        if (pivot_row != col) {
            work.row(col).swap(work.row(pivot_row));
            inv.row(col).swap(inv.row(pivot_row));
        }
        const Complex pivot_inv = Complex(1) / work(col, col);
        work.row(col) *= pivot_inv;
        inv.row(col) *= pivot_inv;
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex factor = work(r, col);
            if (factor == Complex(0)) continue;
            work.row(r) -= factor * work.row(col);
            inv.row(r) -= factor * inv.row(col);
        }
    }
    return inv;
}

template <typename Derived>
auto frobenius_norm(const Eigen::MatrixBase<Derived>& a) {
    return a.norm();
}

}  // namespace fdmimo
