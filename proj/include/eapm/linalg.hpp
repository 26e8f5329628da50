// Copyright 2026 The eapm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense complex linear algebra for the small (dim <= 64) operators that
// appear in prepare-and-measure problems. Storage and the eigen/SVD kernels
// come from Eigen; this header fixes the conventions the rest of the
// library relies on.
//
// Conventions:
//   * kron(A, B) puts A on the first (most significant) tensor factor.
//   * vec() stacks columns, so kron(A, B) * vec(C) == vec(B * C * A^T).
//   * eigenvalues are reported in descending order.

#ifndef EAPM_LINALG_HPP
#define EAPM_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "eapm/tolerances.hpp"

namespace eapm {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr cplx I_UNIT{0.0, 1.0};

/// Number field of the Hilbert space an optimizer works in.
enum class Field { Real, Complex };

inline double hermiticity_defect(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline bool is_hermitian(const CMatrix& a, double tolerance = tol::hermitian) {
    if (a.rows() != a.cols()) {
        return false;
    }
    if (a.size() == 0) {
        return true;
    }
    double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return hermiticity_defect(a) <= tolerance * scale;
}

inline CMatrix hermitian_part(const CMatrix& a) {
    return 0.5 * (a + a.adjoint());
}

inline void require_hermitian(const CMatrix& a, const char* where) {
    if (!is_hermitian(a)) {
        throw ContractViolation(std::string(where) + ": matrix is not Hermitian");
    }
}

struct EigenSystem {
    std::vector<double> values;    // descending
    std::vector<CVector> vectors;  // orthonormal, vectors[i] pairs with values[i]
};

namespace detail {

// Eigen returns ascending order; flip to descending in place.
inline void to_descending(RVector& values, CMatrix& vectors) {
    values.reverseInPlace();
    vectors = vectors.rowwise().reverse().eval();
}

// Eigendecomposition without contract checks, for inner loops.
inline void eig_fast(const CMatrix& a, Field field, RVector& values, CMatrix& vectors) {
    if (field == Field::Real) {
        RMatrix re = 0.5 * (a.real() + a.real().transpose());
        Eigen::SelfAdjointEigenSolver<RMatrix> solver(re);
        values = solver.eigenvalues();
        vectors = solver.eigenvectors().cast<cplx>();
    } else {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(a));
        values = solver.eigenvalues();
        vectors = solver.eigenvectors();
    }
    to_descending(values, vectors);
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix, eigenvalues descending.
inline EigenSystem hermitian_eig(const CMatrix& a) {
    require_hermitian(a, "hermitian_eig");
    RVector values;
    CMatrix vectors;
    detail::eig_fast(a, Field::Complex, values, vectors);
    EigenSystem out;
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        out.values.push_back(values[i]);
        out.vectors.push_back(vectors.col(i));
    }
    return out;
}

/// Largest eigenpair. With Field::Real the real part of `a` is diagonalized,
/// so the returned vector is real.
inline std::pair<double, CVector> top_eigenvector(const CMatrix& a, Field field = Field::Complex) {
    RVector values;
    CMatrix vectors;
    detail::eig_fast(a, field, values, vectors);
    return {values[0], vectors.col(0)};
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

inline CVector kron(const CVector& a, const CVector& b) {
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a[i] * b;
    }
    return out;
}

inline CMatrix kron_all(const std::vector<CMatrix>& factors) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (const auto& f : factors) {
        out = kron(out, f);
    }
    return out;
}

/// Traces out `traced` (0-based subsystem indices) of an operator on
/// H_0 (x) ... (x) H_{k-1} with local dimensions `dims`.
inline CMatrix partial_trace(const CMatrix& a, const std::vector<int>& dims, const std::set<int>& traced) {
    int total = 1;
    for (int d : dims) {
        if (d < 1) {
            throw DimensionMismatch("partial_trace: subsystem dimension must be >= 1");
        }
        total *= d;
    }
    if (a.rows() != total || a.cols() != total) {
        throw DimensionMismatch("partial_trace: operator size does not match subsystem dims");
    }
    for (int s : traced) {
        if (s < 0 || s >= static_cast<int>(dims.size())) {
            throw DimensionMismatch("partial_trace: subsystem index out of range");
        }
    }
    const int k = static_cast<int>(dims.size());
    std::vector<int> stride(k, 1);
    for (int i = k - 2; i >= 0; --i) {
        stride[i] = stride[i + 1] * dims[i + 1];
    }
    std::vector<int> kept_sys;
    std::vector<int> traced_sys;
    for (int i = 0; i < k; ++i) {
        (traced.count(i) ? traced_sys : kept_sys).push_back(i);
    }
    auto offsets = [&](const std::vector<int>& systems) {
        std::vector<int> offs{0};
        for (int s : systems) {
            std::vector<int> next;
            next.reserve(offs.size() * dims[s]);
            for (int o : offs) {
                for (int v = 0; v < dims[s]; ++v) {
                    next.push_back(o + v * stride[s]);
                }
            }
            offs = std::move(next);
        }
        return offs;
    };
    std::vector<int> kept = offsets(kept_sys);
    std::vector<int> summed = offsets(traced_sys);
    const auto n = static_cast<Eigen::Index>(kept.size());
    CMatrix out = CMatrix::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            cplx acc = 0.0;
            for (int t : summed) {
                acc += a(kept[i] + t, kept[j] + t);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

/// Sum of singular values.
inline double trace_norm(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("trace_norm: matrix must be square");
    }
    if (a.size() == 0) {
        return 0.0;
    }
    if (is_hermitian(a, tol::hermitian_tag)) {
        Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
        return solver.eigenvalues().cwiseAbs().sum();
    }
    Eigen::JacobiSVD<CMatrix> svd(a);
    return svd.singularValues().sum();
}

/// Largest absolute eigenvalue of a Hermitian matrix.
inline double operator_norm(const CMatrix& a) {
    require_hermitian(a, "operator_norm");
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

namespace detail {

// Polar factor W = U V^dagger of a (tall or square) matrix. Degenerate
// directions are resolved by the SVD's arbitrary completion.
inline CMatrix polar_factor(const CMatrix& a, double* min_over_max = nullptr) {
    Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (min_over_max != nullptr) {
        const auto& s = svd.singularValues();
        double largest = s.size() ? s[0] : 0.0;
        double smallest = s.size() ? s[s.size() - 1] : 0.0;
        *min_over_max = largest > 0 ? smallest / largest : 0.0;
    }
    return svd.matrixU() * svd.matrixV().adjoint();
}

}  // namespace detail

/// The isometry W (W^dagger W = 1) closest to `a` in Frobenius norm.
inline CMatrix nearest_isometry(const CMatrix& a) {
    if (a.rows() < a.cols()) {
        throw DimensionMismatch("nearest_isometry: matrix must have rows >= cols");
    }
    double ratio = 0.0;
    CMatrix w = detail::polar_factor(a, &ratio);
    if (ratio <= tol::degenerate_singular) {
        throw DegeneratePolar("nearest_isometry: matrix is rank deficient");
    }
    return w;
}

inline CMatrix nearest_unitary(const CMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionMismatch("nearest_unitary: matrix must be square");
    }
    return nearest_isometry(a);
}

/// Column-stacking vectorization.
inline CVector vec(const CMatrix& a) {
    return Eigen::Map<const CVector>(a.data(), a.size());
}

inline CMatrix unvec(const CVector& v, Eigen::Index rows, Eigen::Index cols) {
    if (rows * cols != v.size()) {
        throw DimensionMismatch("unvec: size mismatch");
    }
    return Eigen::Map<const CMatrix>(v.data(), rows, cols);
}

inline CMatrix projector(const CVector& v) {
    return v * v.adjoint();
}

inline CMatrix identity(Eigen::Index n) {
    return CMatrix::Identity(n, n);
}

inline CMatrix pauli_x() {
    CMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline CMatrix pauli_y() {
    CMatrix m(2, 2);
    m << 0, -I_UNIT, I_UNIT, 0;
    return m;
}

inline CMatrix pauli_z() {
    CMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// Projector onto the eigenspace of `a` with eigenvalues >= 0 (ties go to
/// the projector).
inline CMatrix nonnegative_projector(const CMatrix& a, Field field = Field::Complex) {
    RVector values;
    CMatrix vectors;
    detail::eig_fast(a, field, values, vectors);
    CMatrix p = CMatrix::Zero(a.rows(), a.cols());
    for (Eigen::Index i = 0; i < values.size(); ++i) {
        if (values[i] >= 0.0) {
            p.noalias() += vectors.col(i) * vectors.col(i).adjoint();
        }
    }
    return p;
}

/// Smallest eigenvalue of a Hermitian matrix.
inline double min_eigenvalue(const CMatrix& a) {
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(a), Eigen::EigenvaluesOnly);
    return solver.eigenvalues()[0];
}

/// A^{-1/2} for positive definite A; eigenvalues below `floor` are clamped.
inline CMatrix inverse_sqrt(const CMatrix& a, Field field, double floor) {
    RVector values;
    CMatrix vectors;
    detail::eig_fast(a, field, values, vectors);
    RVector inv = values.unaryExpr([floor](double v) { return 1.0 / std::sqrt(std::max(v, floor)); });
    return vectors * inv.asDiagonal() * vectors.adjoint();
}

inline double real_trace_product(const CMatrix& a, const CMatrix& b) {
    // Re tr(A B) without forming the product.
    return (a.transpose().cwiseProduct(b)).sum().real();
}

}  // namespace eapm

#endif
