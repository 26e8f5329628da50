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


// Shared helpers for the unit tests.

#ifndef EAPM_TESTS_HELPERS_HPP
#define EAPM_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "eapm/eapm.hpp"

namespace eapm::testing {

inline CMatrix random_hermitian(Rng& rng, Eigen::Index n) {
    CMatrix g = gaussian_matrix(rng, n, n);
    return 0.5 * (g + g.adjoint());
}

inline double max_abs(const CMatrix& a) { return a.size() ? a.cwiseAbs().maxCoeff() : 0.0; }

inline BareQuantum random_bare(Rng& rng, int n_x, int n_y, int n_b, int d) {
    BareQuantum s;
    for (int x = 0; x < n_x; ++x) {
        CMatrix g = gaussian_matrix(rng, d, d);
        CMatrix rho = g * g.adjoint();
        rho /= rho.trace().real();
        s.states.emplace_back(hermitian_part(rho));
    }
    for (int y = 0; y < n_y; ++y) s.povms.emplace_back(random_povm_effects(rng, d, n_b));
    return s;
}

inline Witness random_binary_witness(Rng& rng, int n_x, int n_y) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::vector<double>> c(n_x, std::vector<double>(n_y));
    for (auto& row : c) {
        for (auto& v : row) v = u(rng);
    }
    return Witness::from_correlators("random", c);
}

}  // namespace eapm::testing

#endif
