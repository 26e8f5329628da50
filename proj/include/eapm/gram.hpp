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

// Gram matrices of pure-state ensembles, real embeddability and the map
// from real unit vectors in R^4 to qubit unitaries acting on |phi+>.

#ifndef EAPM_GRAM_HPP
#define EAPM_GRAM_HPP

#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "eapm/linalg.hpp"
#include "eapm/quantum.hpp"

namespace eapm {

struct RankExcess : std::runtime_error {
    RankExcess(const std::string& what, RVector spectrum) : std::runtime_error(what), spectrum(std::move(spectrum)) {}
    RVector spectrum;
};

/// G[x][x'] = <psi_x|psi_x'>.
inline CMatrix gram(const std::vector<CVector>& states) {
    if (states.empty()) return CMatrix(0, 0);
    const auto n = static_cast<Eigen::Index>(states.size());
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        if (states[i].size() != states[0].size()) {
            throw DimensionMismatch("gram: states have different dimensions");
        }
        for (Eigen::Index j = 0; j < n; ++j) g(i, j) = states[i].dot(states[j]);
    }
    return g;
}

inline void require_gram(const CMatrix& g, const char* where) {
    require_hermitian(g, where);
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        if (std::abs(g(i, i) - 1.0) > 1e-10) {
            throw ContractViolation(std::string(where) + ": diagonal is not one");
        }
    }
    if (g.size() > 0 && min_eigenvalue(g) < -1e-10) {
        throw ContractViolation(std::string(where) + ": not positive semidefinite");
    }
}

struct Dephasing {
    bool embeddable = false;
    RVector phases;           // delta_x
    RMatrix real;             // Re of e^{i delta_x} G e^{-i delta_x'}
    std::vector<int> cycle;   // closed walk through an inconsistent edge
};

/// Looks for phases with e^{i delta_x} G_{xx'} e^{-i delta_x'} real. Phases
/// propagate along a spanning forest of the edges |G| > tol::gram_edge; every
/// other edge is then checked, which is the consistency of all cycles mod pi.
inline Dephasing dephase_to_real(const CMatrix& g) {
    require_gram(g, "dephase_to_real");
    const auto n = g.rows();
    Dephasing out;
    out.phases = RVector::Zero(n);
    std::vector<int> parent(n, -1);
    std::vector<int> depth(n, -1);
    for (Eigen::Index root = 0; root < n; ++root) {
        if (depth[root] >= 0) continue;
        depth[root] = 0;
        std::queue<int> frontier;
        frontier.push(static_cast<int>(root));
        while (!frontier.empty()) {
            int x = frontier.front();
            frontier.pop();
            for (int y = 0; y < n; ++y) {
                if (depth[y] >= 0 || std::abs(g(x, y)) <= tol::gram_edge) continue;
                depth[y] = depth[x] + 1;
                parent[y] = x;
                // Real entries may keep their sign, so only the phase mod pi matters.
                double a = std::arg(g(x, y));
                if (a > std::numbers::pi / 2) a -= std::numbers::pi;
                if (a <= -std::numbers::pi / 2) a += std::numbers::pi;
                out.phases[y] = out.phases[x] + a;
                frontier.push(y);
            }
        }
    }
    CMatrix rotated(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            rotated(i, j) = std::polar(1.0, out.phases[i] - out.phases[j]) * g(i, j);
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(rotated(i, j).imag()) <= tol::gram_real) continue;
            // Tree path i -> lca -> j, closed by the edge (j, i).
            std::vector<int> up_i{i};
            std::vector<int> up_j{j};
            int a = i;
            int b = j;
            while (a != b) {
                if (depth[a] >= depth[b]) {
                    a = parent[a];
                    up_i.push_back(a);
                } else {
                    b = parent[b];
                    up_j.push_back(b);
                }
            }
            up_j.pop_back();
            out.cycle = up_i;
            out.cycle.insert(out.cycle.end(), up_j.rbegin(), up_j.rend());
            out.cycle.push_back(i);
            return out;
        }
    }
    out.embeddable = true;
    out.real = rotated.real();
    return out;
}

/// Rows z_x in R^max_rank with z_x . z_x' = G_{xx'}, from the truncated
/// eigendecomposition (eigenvalues below tol::gram_rank * lambda_max are zero).
inline std::vector<RVector> factor_real_gram(const RMatrix& g, int max_rank = 4) {
    if (g.rows() != g.cols()) throw DimensionMismatch("factor_real_gram: not square");
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
        throw ContractViolation("factor_real_gram: not symmetric");
    }
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
        if (std::abs(g(i, i) - 1.0) > 1e-10) throw ContractViolation("factor_real_gram: diagonal is not one");
    }
    Eigen::SelfAdjointEigenSolver<RMatrix> solver(g);
    RVector values = solver.eigenvalues().reverse();
    RMatrix vectors = solver.eigenvectors().rowwise().reverse();
    const double top = values.size() > 0 ? values[0] : 0.0;
    if (values.size() > 0 && values[values.size() - 1] < -tol::gram_rank * std::max(1.0, top)) {
        throw ContractViolation("factor_real_gram: not positive semidefinite");
    }
    int rank = 0;
    while (rank < values.size() && values[rank] > tol::gram_rank * top) ++rank;
    if (rank > max_rank) {
        throw RankExcess("factor_real_gram: rank " + std::to_string(rank) + " exceeds " + std::to_string(max_rank),
                         values);
    }
    std::vector<RVector> out;
    for (Eigen::Index x = 0; x < g.rows(); ++x) {
        RVector z = RVector::Zero(max_rank);
        for (int k = 0; k < rank; ++k) z[k] = vectors(x, k) * std::sqrt(values[k]);
        out.push_back(z);
    }
    return out;
}

/// U = i z0 1 + z1 X + z2 Y + z3 Z, so that (1/2) tr[U^dagger U'] = z . z'.
inline std::vector<CMatrix> gdc_from_vectors(const std::vector<RVector>& zs) {
    std::vector<CMatrix> out;
    for (const auto& z : zs) {
        if (z.size() != 4) throw DimensionMismatch("gdc_from_vectors: vectors must lie in R^4");
        if (std::abs(z.norm() - 1.0) > 1e-8) throw ContractViolation("gdc_from_vectors: vector is not a unit vector");
        out.push_back(I_UNIT * z[0] * identity(2) + z[1] * pauli_x() + z[2] * pauli_y() + z[3] * pauli_z());
    }
    return out;
}

/// (U_x (x) 1)|phi+> for qubit (or qudit) unitaries.
inline std::vector<CVector> gdc_states(const std::vector<CMatrix>& unitaries) {
    std::vector<CVector> out;
    for (const auto& u : unitaries) {
        const auto k = u.rows();
        out.push_back(from_schmidt_matrix(u * schmidt_matrix(maximally_entangled(static_cast<int>(k)), k, k)));
    }
    return out;
}

struct GramRoundtrip {
    bool embeddable = false;
    std::vector<RVector> vectors;
    std::vector<CMatrix> unitaries;
    double residual = 0.0;  // max |realG - gram(reconstructed states)|
};

/// gram -> dephase_to_real -> factor_real_gram -> gdc_from_vectors.
inline GramRoundtrip gram_roundtrip(const std::vector<CVector>& states) {
    GramRoundtrip out;
    Dephasing dp = dephase_to_real(gram(states));
    out.embeddable = dp.embeddable;
    if (!dp.embeddable) return out;
    out.vectors = factor_real_gram(dp.real);
    for (auto& z : out.vectors) z /= z.norm();
    out.unitaries = gdc_from_vectors(out.vectors);
    CMatrix rebuilt = gram(gdc_states(out.unitaries));
    out.residual = (rebuilt - dp.real.cast<cplx>()).cwiseAbs().maxCoeff();
    return out;
}

/// || sum_x tr_C |psi_x><psi_x| - (trace / dim_b) 1 ||_inf for states on
/// C^dim_c (x) C^dim_b.
inline double marginal_flatness(const std::vector<CVector>& states, int dim_c, int dim_b) {
    CMatrix total = CMatrix::Zero(dim_b, dim_b);
    for (const auto& v : states) {
        if (v.size() != dim_c * dim_b) throw DimensionMismatch("marginal_flatness: state size does not match dims");
        total += partial_trace(projector(v), {dim_c, dim_b}, {0});
    }
    total = hermitian_part(total);
    const double tr = total.trace().real();
    return operator_norm(total - (tr / dim_b) * identity(dim_b));
}

}  // namespace eapm

#endif
