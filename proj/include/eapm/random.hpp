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

#ifndef EAPM_RANDOM_HPP
#define EAPM_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "eapm/linalg.hpp"

namespace eapm {

using Rng = std::mt19937_64;

/// Seed for the `index`-th independent stream derived from `seed`
/// (splitmix64 finalizer, so neighbouring counters decorrelate).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline CMatrix gaussian_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols, Field field = Field::Complex) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMatrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            double re = normal(rng);
            double im = field == Field::Complex ? normal(rng) : 0.0;
            m(i, j) = cplx(re, im);
        }
    }
    return m;
}

/// Haar-random isometry (rows >= cols) from the QR decomposition of a
/// Gaussian matrix, with the phase of R's diagonal removed.
inline CMatrix random_isometry(Rng& rng, Eigen::Index rows, Eigen::Index cols, Field field = Field::Complex) {
    CMatrix g = gaussian_matrix(rng, rows, cols, field);
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ() * CMatrix::Identity(rows, cols);
    CMatrix r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < cols; ++j) {
        double mag = std::abs(r(j, j));
        if (mag > 0) {
            q.col(j) *= r(j, j) / mag;
        }
    }
    return q;
}

inline CMatrix random_unitary(Rng& rng, Eigen::Index n, Field field = Field::Complex) {
    return random_isometry(rng, n, n, field);
}

inline CVector random_state(Rng& rng, Eigen::Index n, Field field = Field::Complex) {
    CVector v = gaussian_matrix(rng, n, 1, field).col(0);
    return v / v.norm();
}

/// Random full-rank POVM: M_b = S^{-1/2} G_b^dagger G_b S^{-1/2}.
inline std::vector<CMatrix> random_povm_effects(Rng& rng, Eigen::Index dim, int outcomes, Field field = Field::Complex) {
    std::vector<CMatrix> raw;
    CMatrix total = CMatrix::Zero(dim, dim);
    for (int b = 0; b < outcomes; ++b) {
        CMatrix g = gaussian_matrix(rng, dim, dim, field);
        raw.push_back(g.adjoint() * g);
        total += raw.back();
    }
    CMatrix s = inverse_sqrt(total, field, 1e-300);
    for (auto& m : raw) {
        m = hermitian_part(s * m * s);
    }
    return raw;
}

}  // namespace eapm

#endif
