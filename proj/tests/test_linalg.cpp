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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "eapm/linalg.hpp"
#include "eapm/strategies.hpp"
#include "helpers.hpp"

namespace eapm {
namespace {

using testing::max_abs;
using testing::random_hermitian;

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
    CMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

TEST(HermitianEig, IdentityHasUnitSpectrum) {
    auto e = hermitian_eig(identity(2));
    EXPECT_NEAR(e.values[0], 1.0, 1e-14);
    EXPECT_NEAR(e.values[1], 1.0, 1e-14);
}

TEST(HermitianEig, PauliX) {
    auto e = hermitian_eig(pauli_x());
    EXPECT_NEAR(e.values[0], 1.0, 1e-14);
    EXPECT_NEAR(e.values[1], -1.0, 1e-14);
    const double h = 1.0 / std::sqrt(2.0);
    EXPECT_NEAR(std::abs(e.vectors[0].dot(CVector::Constant(2, h))), 1.0, 1e-12);
    CVector minus(2);
    minus << h, -h;
    EXPECT_NEAR(std::abs(e.vectors[1].dot(minus)), 1.0, 1e-12);
}

TEST(HermitianEig, GoldenBlock) {
    auto e = hermitian_eig(mat2(-1, 1, 1, 0));
    EXPECT_NEAR(e.values[0], (-1.0 + std::sqrt(5.0)) / 2, 1e-13);
    EXPECT_NEAR(e.values[1], (-1.0 - std::sqrt(5.0)) / 2, 1e-13);
}

TEST(HermitianEig, RejectsNonHermitian) {
    EXPECT_THROW(hermitian_eig(mat2(0, 1, 0, 0)), ContractViolation);
}

TEST(HermitianEig, ResidualOnRandomMatrices) {
    Rng rng(11);
    for (int n = 2; n <= 16; ++n) {
        CMatrix a = random_hermitian(rng, n);
        auto e = hermitian_eig(a);
        CMatrix v(n, n);
        RVector lambda(n);
        for (int i = 0; i < n; ++i) {
            v.col(i) = e.vectors[i];
            lambda[i] = e.values[i];
            if (i > 0) EXPECT_GE(e.values[i - 1], e.values[i]);
        }
        CMatrix rebuilt = v * lambda.cast<cplx>().asDiagonal() * v.adjoint();
        EXPECT_LE(max_abs(a - rebuilt), 1e-9 * std::max(1.0, operator_norm(a))) << "n=" << n;
        EXPECT_LE(max_abs(v.adjoint() * v - identity(n)), 1e-12);
    }
}

TEST(Kron, Examples) {
    EXPECT_LE(max_abs(kron(identity(2), identity(2)) - identity(4)), 0.0);
    CMatrix zi = kron(pauli_z(), identity(2));
    RVector diag(4);
    diag << 1, 1, -1, -1;
    EXPECT_LE(max_abs(zi - CMatrix(diag.cast<cplx>().asDiagonal())), 0.0);
    CMatrix xx = kron(pauli_x(), pauli_x());
    EXPECT_LE(max_abs(xx * xx - identity(4)), 1e-15);
}

TEST(Kron, MixedProductRule) {
    Rng rng(3);
    CMatrix a = gaussian_matrix(rng, 2, 3);
    CMatrix b = gaussian_matrix(rng, 3, 2);
    CMatrix c = gaussian_matrix(rng, 3, 2);
    CMatrix d = gaussian_matrix(rng, 2, 3);
    EXPECT_LE(max_abs(kron(a, b) * kron(c, d) - kron(CMatrix(a * c), CMatrix(b * d))), 1e-12);
}

TEST(PartialTrace, Examples) {
    CVector phi = maximally_entangled(2);
    EXPECT_LE(max_abs(partial_trace(projector(phi), {2, 2}, {0}) - 0.5 * identity(2)), 1e-15);

    const double t = 0.3;
    CMatrix marginal = partial_trace(projector(theta_state(t)), {2, 2}, {1});
    EXPECT_NEAR(marginal(0, 0).real(), std::cos(t) * std::cos(t), 1e-15);
    EXPECT_NEAR(marginal(1, 1).real(), std::sin(t) * std::sin(t), 1e-15);
    EXPECT_NEAR(std::abs(marginal(0, 1)), 0.0, 1e-15);

    CVector ket01 = CVector::Zero(4);
    ket01[1] = 1.0;
    CMatrix one = CMatrix::Zero(2, 2);
    one(1, 1) = 1.0;
    EXPECT_LE(max_abs(partial_trace(projector(ket01), {2, 2}, {0}) - one), 0.0);
}

TEST(PartialTrace, ProductOperators) {
    Rng rng(5);
    CMatrix a = random_hermitian(rng, 2);
    CMatrix b = random_hermitian(rng, 3);
    EXPECT_LE(max_abs(partial_trace(kron(a, b), {2, 3}, {0}) - a.trace() * b), 1e-12);
    EXPECT_LE(max_abs(partial_trace(kron(a, b), {2, 3}, {1}) - b.trace() * a), 1e-12);
}

TEST(PartialTrace, Composes) {
    Rng rng(7);
    CMatrix a = random_hermitian(rng, 2 * 3 * 2);
    CMatrix once = partial_trace(a, {2, 3, 2}, {1, 2});
    CMatrix twice = partial_trace(partial_trace(a, {2, 3, 2}, {1}), {2, 2}, {1});
    EXPECT_LE(max_abs(once - twice), 1e-12);
    EXPECT_NEAR(partial_trace(a, {2, 3, 2}, {0, 1, 2})(0, 0).real(), a.trace().real(), 1e-12);
}

TEST(PartialTrace, RejectsBadDims) {
    EXPECT_THROW(partial_trace(identity(4), {2, 3}, {0}), DimensionMismatch);
}

TEST(TraceNorm, Examples) {
    EXPECT_EQ(trace_norm(CMatrix::Zero(3, 3)), 0.0);
    CVector e0 = CVector::Zero(2);
    CVector e1 = CVector::Zero(2);
    e0[0] = 1.0;
    e1[1] = 1.0;
    EXPECT_NEAR(trace_norm(projector(e0) - projector(e1)), 2.0, 1e-14);
}

TEST(TraceNorm, LargeBetaQuquartCombination) {
    auto s = frac_ququart_large_beta(1.0);
    CMatrix c = s.states[0].matrix() + s.states[1].matrix() - s.states[2].matrix() - s.states[3].matrix();
    EXPECT_NEAR(trace_norm(c), 1.0 + std::sqrt(5.0), 1e-12);
}

// trace norm = max tr[M A] over ||M|| <= 1, attained by the sign operator.
TEST(TraceNorm, MatchesSignOperatorAndDominatesContractions) {
    Rng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + trial % 5;
        CMatrix a = random_hermitian(rng, n);
        auto e = hermitian_eig(a);
        CMatrix sign = CMatrix::Zero(n, n);
        for (int i = 0; i < n; ++i) sign += (e.values[i] >= 0 ? 1.0 : -1.0) * projector(e.vectors[i]);
        const double tn = trace_norm(a);
        EXPECT_NEAR((sign * a).trace().real(), tn, 1e-10);
        CMatrix m = random_hermitian(rng, n);
        m /= operator_norm(m);
        EXPECT_LE((m * a).trace().real(), tn + 1e-10);
    }
}

TEST(OperatorNorm, Examples) {
    CMatrix zz = kron(pauli_z(), identity(2)) + kron(identity(2), pauli_z());
    EXPECT_NEAR(operator_norm(zz), 2.0, 1e-14);
    EXPECT_NEAR(operator_norm(identity(5)), 1.0, 1e-14);
}

TEST(OperatorNorm, SmallBetaOperatorAtBetaOne) {
    auto m = frac_ququart_observables();
    CMatrix op = m[0] + m[1] + m[2];
    auto e = hermitian_eig(op);
    const double direct = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
    EXPECT_NEAR(operator_norm(op), direct, 1e-12);
    EXPECT_NEAR(frac_ququart_small_beta_value(1.0), 4.0 * direct + 4.0, 1e-12);
}

TEST(NearestUnitary, Examples) {
    Rng rng(13);
    CMatrix u = random_unitary(rng, 3);
    EXPECT_LE(max_abs(nearest_unitary(u) - u), 1e-12);
    EXPECT_LE(max_abs(nearest_unitary(2.0 * identity(2)) - identity(2)), 1e-14);
    EXPECT_LE(max_abs(nearest_unitary(mat2(3.0, 0, 0, 1e-3)) - identity(2)), 1e-14);
}

TEST(NearestUnitary, DegenerateAndShapeErrors) {
    EXPECT_THROW(nearest_unitary(mat2(1, 0, 0, 0)), DegeneratePolar);
    EXPECT_THROW(nearest_unitary(CMatrix::Identity(3, 2)), DimensionMismatch);
    EXPECT_THROW(nearest_isometry(CMatrix::Identity(2, 3)), DimensionMismatch);
}

TEST(NearestIsometry, IsIsometricAndClosest) {
    Rng rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        CMatrix a = gaussian_matrix(rng, 6, 3);
        CMatrix w = nearest_isometry(a);
        EXPECT_LE(max_abs(w.adjoint() * w - identity(3)), 1e-12);
        CMatrix other = random_isometry(rng, 6, 3);
        EXPECT_LE((a - w).norm(), (a - other).norm() + 1e-12);
    }
}

TEST(Vec, Conventions) {
    EXPECT_LE((vec(identity(2)) / std::sqrt(2.0) - maximally_entangled(2)).norm(), 1e-15);
    Rng rng(19);
    CMatrix u = random_unitary(rng, 2);
    CVector lhs = kron(u, identity(2)) * vec(identity(2)) / std::sqrt(2.0);
    CVector rhs = vec(u.transpose()) / std::sqrt(2.0);
    EXPECT_LE((lhs - rhs).norm(), 1e-14);
    CMatrix a = gaussian_matrix(rng, 3, 4);
    EXPECT_LE(max_abs(unvec(vec(a), 3, 4) - a), 0.0);
    EXPECT_THROW(unvec(vec(a), 5, 2), DimensionMismatch);
}

TEST(Pauli, TraceOrthogonality) {
    const std::vector<CMatrix> basis{identity(2), pauli_x(), pauli_y(), pauli_z()};
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < basis.size(); ++j) {
            EXPECT_NEAR(std::abs((basis[i] * basis[j]).trace()), i == j ? 2.0 : 0.0, 1e-15);
        }
    }
}

TEST(NonnegativeProjector, SelectsPositiveEigenspace) {
    CMatrix p = nonnegative_projector(pauli_z());
    CMatrix zero = CMatrix::Zero(2, 2);
    zero(0, 0) = 1.0;
    EXPECT_LE(max_abs(p - zero), 1e-14);
}

}  // namespace
}  // namespace eapm
