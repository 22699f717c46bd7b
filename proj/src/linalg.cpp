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

#include "risce/linalg.hpp"

#include "risce/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace risce {

namespace {

constexpr double kDiagonalTolerance = 1e-14;
constexpr double kPowerTolerance = 1e-12;
constexpr int kPowerMaxSweeps = 1000;
// Sweeps on the current operator before it is squared.
constexpr int kSweepsPerSquaring = 16;

std::string shape(const CMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

double rank_threshold(const CMatrix& a, double sigma_max) {
    return static_cast<double>(std::max(a.rows(), a.cols())) * sigma_max *
           std::numeric_limits<double>::epsilon();
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    const Index I = b.rows();
    const Index J = b.cols();
    CMatrix out(a.rows() * I, a.cols() * J);
    for (Index q = 0; q < a.cols(); ++q) {
        for (Index p = 0; p < a.rows(); ++p) {
            out.block(p * I, q * J, I, J) = a(p, q) * b;
        }
    }
    return out;
}

CMatrix khatri_rao(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("khatri_rao: column counts differ (" + shape(a) + " vs " + shape(b) +
                             ")");
    }
    const Index I = b.rows();
    CMatrix out(a.rows() * I, a.cols());
    for (Index j = 0; j < a.cols(); ++j) {
        for (Index p = 0; p < a.rows(); ++p) {
            out.col(j).segment(p * I, I) = a(p, j) * b.col(j);
        }
    }
    return out;
}

CMatrix permuted_kron(const CMatrix& a, const CMatrix& b) {
    const Index I = b.rows();
    const Index Q = a.cols();
    CMatrix out(a.rows() * I, b.cols() * Q);
    for (Index j = 0; j < b.cols(); ++j) {
        out.middleCols(j * Q, Q) = kron(a, b.col(j));
    }
    return out;
}

CVector vec(const CMatrix& a) {
    return Eigen::Map<const CVector>(a.data(), a.size());
}

CMatrix unvec(const CVector& v, Index rows, Index cols) {
    if (rows < 0 || cols < 0 || rows * cols != v.size()) {
        throw DimensionError("unvec: cannot reshape length " + std::to_string(v.size()) + " to " +
                             std::to_string(rows) + "x" + std::to_string(cols));
    }
    return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

CMatrix diag_of(const CVector& v) {
    CMatrix out = CMatrix::Zero(v.size(), v.size());
    out.diagonal() = v;
    return out;
}

CVector vecd(const CMatrix& d) {
    if (d.rows() != d.cols()) throw StructureError("vecd: matrix is not square (" + shape(d) + ")");
    for (Index j = 0; j < d.cols(); ++j) {
        for (Index i = 0; i < d.rows(); ++i) {
            if (i != j && std::abs(d(i, j)) >= kDiagonalTolerance) {
                throw StructureError("vecd: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                     ") is off the diagonal");
            }
        }
    }
    return d.diagonal();
}

PseudoInverse pinv_with_rank(const CMatrix& a) {
    if (a.size() == 0) return {CMatrix::Zero(a.cols(), a.rows()), 0};
    Eigen::JacobiSVD<CMatrix, Eigen::ColPivHouseholderQRPreconditioner> svd(
        a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const double tau = rank_threshold(a, s.size() > 0 ? s(0) : 0.0);
    Index rank = 0;
    while (rank < s.size() && s(rank) > tau) ++rank;
    PseudoInverse out;
    out.rank = rank;
    if (rank == 0) {
        out.matrix = CMatrix::Zero(a.cols(), a.rows());
        return out;
    }
    const CMatrix v = svd.matrixV().leftCols(rank);
    const CMatrix u = svd.matrixU().leftCols(rank);
    out.matrix = v * s.head(rank).cwiseInverse().asDiagonal() * u.adjoint();
    return out;
}

LeastSquares lstsq(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows()) throw DimensionError("lstsq: row counts differ");
    if (a.rows() < a.cols()) throw DimensionError("lstsq: system must be tall or square");
    LeastSquares out;
    if (a.size() == 0) {
        out.solution = CMatrix::Zero(a.cols(), b.cols());
        return out;
    }
    Eigen::ColPivHouseholderQR<CMatrix> qr(a);
    qr.setThreshold(static_cast<double>(std::max(a.rows(), a.cols())) *
                    std::numeric_limits<double>::epsilon());
    out.rank = qr.rank();
    out.solution = out.rank == a.cols() ? CMatrix(qr.solve(b)) : CMatrix(pinv(a) * b);
    return out;
}

CMatrix pinv(const CMatrix& a) {
    return pinv_with_rank(a).matrix;
}

Index numerical_rank(const CMatrix& a) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<CMatrix, Eigen::ColPivHouseholderQRPreconditioner> svd(a);
    const auto& s = svd.singularValues();
    const double tau = rank_threshold(a, s(0));
    Index rank = 0;
    while (rank < s.size() && s(rank) > tau) ++rank;
    return rank;
}

Rank1Factorization rank1_truncated_svd(const CMatrix& a) {
    if (a.size() == 0 || a.cwiseAbs().maxCoeff() == 0.0) {
        throw DegenerateInputError("rank1_truncated_svd: input is zero");
    }
    const bool tall = a.rows() >= a.cols();
    const CMatrix gram = tall ? CMatrix(a.adjoint() * a) : CMatrix(a * a.adjoint());
    const double gram_scale = gram.norm();

    Index start = 0;
    gram.colwise().norm().maxCoeff(&start);
    CVector x = gram.col(start).normalized();

    // Plain power iteration; every kSweepsPerSquaring sweeps without convergence
    // the operator is squared, which squares the contraction ratio.
    CMatrix op = gram;
    for (int sweep = 0; sweep < kPowerMaxSweeps; ++sweep) {
        const CVector y = gram * x;
        const double rho = x.dot(y).real();
        if ((y - rho * x).norm() <= kPowerTolerance * gram_scale) break;
        x = (op * x).normalized();
        if ((sweep + 1) % kSweepsPerSquaring == 0) {
            op = op * op;
            op /= op.norm();
        }
    }

    Rank1Factorization out;
    if (tall) {
        out.v = x;
        const CVector av = a * x;
        out.sigma = av.norm();
        out.u = av / out.sigma;
    } else {
        out.u = x;
        const CVector ahu = a.adjoint() * x;
        out.sigma = ahu.norm();
        out.v = ahu / out.sigma;
    }

    // Phase convention: first nonzero entry of u real and nonnegative.
    const double floor = 1e-14 * out.u.cwiseAbs().maxCoeff();
    for (Index i = 0; i < out.u.size(); ++i) {
        const double mag = std::abs(out.u(i));
        if (mag > floor) {
            const cplx phase = std::conj(out.u(i)) / mag;
            out.u *= phase;
            out.v *= phase;
            out.u(i) = mag;
            break;
        }
    }
    return out;
}

bool all_finite(const CMatrix& a) {
    return a.array().isFinite().all();
}

}  // namespace risce
