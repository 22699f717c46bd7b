// SPDX-License-Identifier: Apache-2.0
//
// risce: semi-blind channel estimation for RIS-assisted MIMO links
// Copyright (C) 2026 The risce authors
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
//
// Dense complex kernels: Kronecker/Khatri-Rao products, vec/unvec,
// pseudo-inverse and dominant rank-one factorization. Storage is Eigen's
// column-major layout, so vec() is the column-stacking operator.

#pragma once

#include <Eigen/Dense>

#include <complex>

namespace risce {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Dominant singular triplet; u * sigma * v^H is the best rank-one approximation.
struct Rank1Factorization {
    CVector u;
    double sigma = 0.0;
    CVector v;
};

/// Pseudo-inverse together with the numerical rank used to build it.
struct PseudoInverse {
    CMatrix matrix;
    Index rank = 0;
};

struct LeastSquares {
    CMatrix solution;
    Index rank = 0;
};

/// A (P x Q) kron B (I x J) -> (PI x QJ).
CMatrix kron(const CMatrix& a, const CMatrix& b);

/// Column-wise Kronecker product. Throws DimensionError on a column-count mismatch.
CMatrix khatri_rao(const CMatrix& a, const CMatrix& b);

/// [A kron b_1, ..., A kron b_J]; a column permutation of kron(A, B).
CMatrix permuted_kron(const CMatrix& a, const CMatrix& b);

CVector vec(const CMatrix& a);
CMatrix unvec(const CVector& v, Index rows, Index cols);

CMatrix diag_of(const CVector& v);

/// Diagonal of a square diagonal matrix. Off-diagonal entries must be below 1e-14.
CVector vecd(const CMatrix& d);

/// Moore-Penrose pseudo-inverse. Singular values at or below
/// max(rows, cols) * sigma_max * eps are treated as zero.
CMatrix pinv(const CMatrix& a);
PseudoInverse pinv_with_rank(const CMatrix& a);

/// Solves min ||A X - B||_F for a tall A by column-pivoted QR. Equals
/// pinv(A) * B when A has full column rank; rank reports the detected rank.
LeastSquares lstsq(const CMatrix& a, const CMatrix& b);

/// Numerical rank under the same threshold as pinv().
Index numerical_rank(const CMatrix& a);

/// Dominant singular triplet by power iteration on the smaller Gram matrix.
///
/// The phase is fixed so that the first nonzero entry of u is real and
/// nonnegative. Throws DegenerateInputError for an empty or all-zero matrix.
Rank1Factorization rank1_truncated_svd(const CMatrix& a);

/// True when every entry is finite.
bool all_finite(const CMatrix& a);

}  // namespace risce
