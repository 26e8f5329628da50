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

// Explicit strategies, named state families and closed-form values.

#ifndef EAPM_STRATEGIES_HPP
#define EAPM_STRATEGIES_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "eapm/optimize.hpp"
#include "eapm/quantum.hpp"
#include "eapm/random.hpp"
#include "eapm/witnesses.hpp"

namespace eapm {

/// Optimal measurements for fixed effective operators rho_x (one
/// povm_step per setting). Binary settings get Helstrom projectors with
/// ties going to outcome 0.
inline std::vector<Povm> optimal_measurements(const Witness& w, const std::vector<CMatrix>& rhos,
                                              Field field = Field::Complex) {
    if (static_cast<int>(rhos.size()) != w.n_x()) {
        throw DimensionMismatch("optimal_measurements: one operator per preparation expected");
    }
    const auto n = rhos[0].rows();
    std::vector<Povm> out;
    for (int y = 0; y < w.n_y(); ++y) {
        std::vector<CMatrix> rewards(w.n_b(), CMatrix::Zero(n, n));
        for (int x = 0; x < w.n_x(); ++x) {
            for (int b = 0; b < w.n_b(); ++b) rewards[b] += w(x, y, b) * rhos[x];
        }
        out.emplace_back(povm_step(rewards, field, 2000).effects);
    }
    return out;
}

inline BareQuantum with_optimal_measurements(const Witness& w, const std::vector<CVector>& states) {
    BareQuantum out;
    std::vector<CMatrix> rhos;
    for (const auto& v : states) {
        out.states.push_back(DensityMatrix::pure(v));
        rhos.push_back(out.states.back().matrix());
    }
    out.povms = optimal_measurements(w, rhos);
    return out;
}

// ---------------------------------------------------------------------------
// Qutrit SIC and mutually unbiased bases

inline cplx omega3(int power) {
    return std::polar(1.0, 2.0 * std::numbers::pi * power / 3.0);
}

/// Nine states psi_{x0 x1}, index 3 x0 + x1.
inline std::vector<CVector> hesse_sic() {
    std::vector<CVector> out;
    for (int x0 = 0; x0 < 3; ++x0) {
        for (int x1 = 0; x1 < 3; ++x1) {
            CVector v = CVector::Zero(3);
            const cplx phase = -omega3(x1);
            switch (x0) {
                case 0:
                    v << 0.0, 1.0, phase;
                    break;
                case 1:
                    v << phase, 0.0, 1.0;
                    break;
                default:
                    v << 1.0, phase, 0.0;
                    break;
            }
            out.push_back(v / std::sqrt(2.0));
        }
    }
    return out;
}

/// Four mutually unbiased qutrit bases; columns are the basis vectors.
inline std::vector<CMatrix> qutrit_mubs() {
    const cplx w = omega3(1);
    const cplx w2 = omega3(2);
    std::vector<CMatrix> out(4, CMatrix(3, 3));
    out[0] = identity(3);
    out[1] << 1.0, 1.0, 1.0, 1.0, w, w2, 1.0, w2, w;
    out[2] << 1.0, w, w, w, 1.0, w, w, w, 1.0;
    out[3] << 1.0, w2, w2, w2, 1.0, w2, w2, w2, 1.0;
    for (int i = 1; i < 4; ++i) out[i] /= std::sqrt(3.0);
    return out;
}

/// Setting y = 2 y0 + y1 measures basis qutrit_mub_for_setting(y); the last
/// two bases pair with y = 11 and y = 10 in that order, which is the
/// assignment that zeroes every forbidden outcome.
inline int qutrit_mub_for_setting(int y) {
    static constexpr std::array<int, 4> order{0, 1, 3, 2};
    return order.at(y);
}

inline BareQuantum qutrit_optimal_strategy() {
    BareQuantum out;
    for (const auto& v : hesse_sic()) out.states.push_back(DensityMatrix::pure(v));
    const auto bases = qutrit_mubs();
    for (int y = 0; y < 4; ++y) out.povms.push_back(Povm::from_basis(bases[qutrit_mub_for_setting(y)]));
    return out;
}

// ---------------------------------------------------------------------------
// Flagged random access code

inline double frac_qubit_value(double beta) {
    if (beta < 0) throw ContractViolation("frac_qubit_value: beta must be nonnegative");
    return 4.0 * beta + 4.0 * std::sqrt(2.0 + beta * beta);
}

inline double frac_one_bit_value(double beta) { return 4.0 + 6.0 * beta; }

inline double frac_ququart_large_beta_value(double beta) { return 2.0 * (1.0 + std::sqrt(5.0)) + 8.0 * beta; }

inline double frac_ea4_value(double beta) { return 2.0 * (2.0 + std::sqrt(2.0)) + 8.0 * beta; }

/// Flag on the north pole, the other four on a square below it, tilted by
/// theta with beta tan(theta) = sqrt(2).
inline BareQuantum frac_qubit_strategy(double beta) {
    if (beta < 0) throw ContractViolation("frac_qubit_strategy: beta must be nonnegative");
    const double theta = beta == 0.0 ? std::numbers::pi / 2 : std::atan(std::sqrt(2.0) / beta);
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const std::array<BlochVector, 5> r{BlochVector{{0.0, s, -c}}, BlochVector{{s, 0.0, -c}},
                                       BlochVector{{-s, 0.0, -c}}, BlochVector{{0.0, -s, -c}},
                                       BlochVector{{0.0, 0.0, 1.0}}};
    BareQuantum out;
    std::vector<CMatrix> rhos;
    for (const auto& v : r) {
        out.states.push_back(bloch_to_state(v));
        rhos.push_back(out.states.back().matrix());
    }
    out.povms = optimal_measurements(frac_witness(beta), rhos);
    return out;
}

/// Fixed ququart observables of the small-beta family.
inline std::array<CMatrix, 3> frac_ququart_observables() {
    const CMatrix i2 = identity(2);
    const CMatrix x = pauli_x();
    const CMatrix z = pauli_z();
    CMatrix m3 = 0.5 * (kron(i2, i2) - kron(x, x) - kron(x, i2) - kron(i2, x));
    return {kron(z, i2), kron(i2, z), m3};
}

inline double frac_ququart_small_beta_value(double beta) {
    if (beta < 0) throw ContractViolation("frac_ququart_small_beta_value: beta must be nonnegative");
    auto m = frac_ququart_observables();
    return 4.0 * operator_norm(m[0] + m[1] + beta * m[2]) + 4.0 * beta;
}

/// Flag |++>, measurements fixed to the three observables above, and each
/// remaining state the top eigenvector of its reward operator.
inline BareQuantum frac_ququart_small_beta(double beta) {
    if (beta < 0) throw ContractViolation("frac_ququart_small_beta: beta must be nonnegative");
    const auto m = frac_ququart_observables();
    const Witness w = frac_witness(beta);
    BareQuantum out;
    for (int x = 0; x < 4; ++x) {
        CMatrix r = w(x, 0, 0) * m[0] + w(x, 1, 0) * m[1] + w(x, 2, 0) * m[2];
        out.states.push_back(DensityMatrix::pure(top_eigenvector(r).second));
    }
    out.states.push_back(DensityMatrix::pure(CVector::Constant(4, 0.5)));
    for (const auto& o : m) out.povms.push_back(Povm::from_observable(o));
    return out;
}

inline BareQuantum frac_ququart_large_beta(double beta) {
    if (beta < 0) throw ContractViolation("frac_ququart_large_beta: beta must be nonnegative");
    const double h = 1.0 / std::sqrt(2.0);
    std::vector<CVector> states(5, CVector::Zero(4));
    states[0](0) = 1.0;
    states[1](1) = h;
    states[1](2) = h;
    states[2](1) = h;
    states[2](2) = -h;
    states[3](1) = 1.0;
    states[4](3) = 1.0;
    return with_optimal_measurements(frac_witness(beta), states);
}

/// CNOT on two qubits (qubit 1 is the more significant index).
inline CMatrix cnot(int control) {
    CMatrix u = CMatrix::Zero(4, 4);
    for (int a1 = 0; a1 < 2; ++a1) {
        for (int a2 = 0; a2 < 2; ++a2) {
            int t1 = control == 2 ? a1 ^ a2 : a1;
            int t2 = control == 1 ? a2 ^ a1 : a2;
            u(t1 * 2 + t2, a1 * 2 + a2) = 1.0;
        }
    }
    return u;
}

inline std::vector<CMatrix> frac_ea4_unitaries() {
    const CMatrix i2 = identity(2);
    const CMatrix c1 = cnot(1);
    const CMatrix c2 = cnot(2);
    return {kron(i2, i2), c1 * c2, kron(i2, pauli_x()) * c1 * c2, kron(i2, pauli_z()),
            kron(i2, pauli_z() * pauli_x()) * c2};
}

/// Two shared ebits; Alice applies U_x to A1 A2, discards A1 and sends A2.
/// As an isometry C^4 -> C^2 (x) C^8 the discarded qubit is the environment
/// (padded with zeros).
inline EAQuantumIsometry frac_ea4_strategy(double beta) {
    if (beta < 0) throw ContractViolation("frac_ea4_strategy: beta must be nonnegative");
    EAQuantumIsometry out;
    out.d = 2;
    out.D = 4;
    out.E = 8;
    out.shared = maximally_entangled(4);
    for (const auto& u : frac_ea4_unitaries()) {
        CMatrix v = CMatrix::Zero(out.d * out.E, 4);
        for (int c = 0; c < 2; ++c) {
            for (int e = 0; e < 2; ++e) {
                v.row(c * out.E + e) = u.row(e * 2 + c);
            }
        }
        out.isometries.push_back(v);
    }
    // Measurements are placeholders until the effective states are known.
    for (int y = 0; y < 3; ++y) out.bob.push_back(Povm({identity(8), CMatrix::Zero(8, 8)}));
    out.bob = optimal_measurements(frac_witness(beta), effective_operators(out));
    return out;
}

struct NamedClassical {
    std::string name;
    ClassicalDet strategy;
};

/// Deterministic f-RAC strategies: the one-bit strategy and a family of
/// two-bit strategies (outcome 0 is "+1").
inline std::vector<NamedClassical> frac_classical_strategies(double beta) {
    if (beta < 0) throw ContractViolation("frac_classical_strategies: beta must be nonnegative");
    auto make = [](int d, std::vector<int> enc, std::vector<std::vector<int>> dec) {
        ClassicalDet cd;
        cd.d = d;
        cd.nB = 2;
        cd.enc = std::move(enc);
        cd.dec = std::move(dec);
        return cd;
    };
    std::vector<NamedClassical> out;
    out.push_back({"one_bit", make(2, {0, 0, 0, 1, 1}, {{0, 0, 0}, {1, 1, 1}})});
    // Printed encoding 1->00, 2->01, 3->10, 4,5->11 with the printed tuples
    // read literally.
    out.push_back({"two_bit_printed_low", make(4, {0, 1, 2, 3, 3}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}})});
    out.push_back({"two_bit_printed_high", make(4, {0, 1, 2, 3, 3}, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}})});
    // Same encoding, decoder chosen optimally per message and setting.
    out.push_back({"two_bit_printed_best", make(4, {0, 1, 2, 3, 3}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}})});
    // Inputs 3 and 4 share a message; the flag gets its own.
    out.push_back({"two_bit_merged_34", make(4, {0, 1, 2, 2, 3}, {{0, 0, 0}, {0, 1, 0}, {1, 0, 0}, {0, 0, 1}})});
    return out;
}

// ---------------------------------------------------------------------------
// Ququart MUBs and SIC

inline CMatrix pauli_string(const std::string& s) {
    auto single = [](char c) {
        switch (c) {
            case 'I':
                return identity(2);
            case 'X':
                return pauli_x();
            case 'Y':
                return pauli_y();
            case 'Z':
                return pauli_z();
            default:
                throw ContractViolation(std::string("pauli_string: unknown letter ") + c);
        }
    };
    std::vector<CMatrix> factors;
    for (char c : s) factors.push_back(single(c));
    return kron_all(factors);
}

namespace detail {

// Joint eigenbasis of commuting Paulis P1, P2 (P1 + sqrt(2) P2 has a
// simple spectrum).
inline CMatrix joint_eigenbasis(const std::string& p1, const std::string& p2, Field field) {
    CMatrix a = pauli_string(p1) + std::sqrt(2.0) * pauli_string(p2);
    RVector values;
    CMatrix vectors;
    eig_fast(a, field, values, vectors);
    return vectors;
}

}  // namespace detail

inline std::vector<CMatrix> complex_mubs_d4() {
    const std::array<std::array<const char*, 2>, 5> triples{
        {{"ZI", "IZ"}, {"XI", "IX"}, {"YI", "IY"}, {"XY", "YZ"}, {"XZ", "YX"}}};
    std::vector<CMatrix> out;
    for (const auto& t : triples) out.push_back(detail::joint_eigenbasis(t[0], t[1], Field::Complex));
    return out;
}

inline std::vector<CMatrix> real_mubs_r4() {
    const std::array<std::array<const char*, 2>, 3> triples{{{"ZI", "IZ"}, {"XI", "IX"}, {"XZ", "ZX"}}};
    std::vector<CMatrix> out;
    for (const auto& t : triples) out.push_back(detail::joint_eigenbasis(t[0], t[1], Field::Real));
    return out;
}

/// max over cross-basis pairs of | |<e|f>|^2 - 1/d |.
inline double mub_defect(const std::vector<CMatrix>& bases) {
    double worst = 0.0;
    for (size_t i = 0; i < bases.size(); ++i) {
        const double d = static_cast<double>(bases[i].rows());
        worst = std::max(worst, (bases[i].adjoint() * bases[i] - identity(bases[i].rows())).cwiseAbs().maxCoeff());
        for (size_t j = i + 1; j < bases.size(); ++j) {
            CMatrix g = bases[i].adjoint() * bases[j];
            worst = std::max(worst, (g.cwiseAbs2().array() - 1.0 / d).abs().maxCoeff());
        }
    }
    return worst;
}

/// sum_{(a,b) != (0,0)} |<psi|X^a Z^b|psi>|^4. Its minimum (d-1)/(d+1) is
/// reached exactly by SIC fiducials.
inline double sic_fiducial_objective(const CVector& psi, int d) {
    double total = 0.0;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a == 0 && b == 0) continue;
            total += std::pow(std::norm(psi.dot(heisenberg_weyl(d, a, b) * psi)), 2);
        }
    }
    return total;
}

namespace detail {

// Damped Gauss-Newton on r_k = |<psi|D_k psi>|^2 - 1/(d+1) plus |psi|^2 - 1.
// Plain descent stalls near the continuous family of fiducials in d = 3.
inline CVector polish_fiducial(CVector psi, const std::vector<CMatrix>& ops, int d) {
    const int n = static_cast<int>(ops.size());
    const double c = 1.0 / (d + 1.0);
    auto residuals = [&](const CVector& p) {
        RVector r(n + 1);
        for (int k = 0; k < n; ++k) r(k) = std::norm(p.dot(ops[k] * p)) - c;
        r(n) = p.squaredNorm() - 1.0;
        return r;
    };
    double lambda = 1e-6;
    RVector r = residuals(psi);
    for (int it = 0; it < 200 && r.norm() > 1e-15; ++it) {
        RMatrix jac(n + 1, 2 * d);
        for (int k = 0; k < n; ++k) {
            const CVector dp = ops[k] * psi;
            const CVector dhp = ops[k].adjoint() * psi;
            const cplx t = psi.dot(dp);
            for (int j = 0; j < d; ++j) {
                const cplx du = dp(j) + std::conj(dhp(j));
                const cplx dv = cplx(0, -1) * dp(j) + cplx(0, 1) * std::conj(dhp(j));
                jac(k, j) = 2.0 * (std::conj(t) * du).real();
                jac(k, d + j) = 2.0 * (std::conj(t) * dv).real();
            }
        }
        for (int j = 0; j < d; ++j) {
            jac(n, j) = 2.0 * psi(j).real();
            jac(n, d + j) = 2.0 * psi(j).imag();
        }
        RMatrix normal = jac.transpose() * jac;
        normal.diagonal().array() += lambda;
        const RVector delta = normal.ldlt().solve(-jac.transpose() * r);
        CVector trial = psi;
        for (int j = 0; j < d; ++j) trial(j) += cplx(delta(j), delta(d + j));
        const RVector rt = residuals(trial);
        if (rt.norm() < r.norm()) {
            psi = trial;
            r = rt;
            lambda = std::max(lambda * 0.1, 1e-15);
        } else {
            lambda *= 10.0;
            if (lambda > 1e6) break;
        }
    }
    return psi / psi.norm();
}

}  // namespace detail

/// Heisenberg-Weyl orbit of a numerically found fiducial in C^d.
inline std::vector<CVector> sic_by_search(int d, std::uint64_t seed = 0, int attempts = 50) {
    std::vector<CMatrix> ops;
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            if (a != 0 || b != 0) ops.push_back(heisenberg_weyl(d, a, b));
        }
    }
    const double target = static_cast<double>(d * d - 1) / ((d + 1) * (d + 1));
    for (int attempt = 0; attempt < attempts; ++attempt) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(attempt)));
        CVector psi = random_state(rng, d);
        double f = sic_fiducial_objective(psi, d);
        double step = 0.1;
        for (int it = 0; it < 20000 && f - target > 1e-15; ++it) {
            CVector grad = CVector::Zero(d);
            for (const auto& op : ops) {
                cplx t = psi.dot(op * psi);
                grad += 2.0 * std::norm(t) * (std::conj(t) * (op * psi) + t * (op.adjoint() * psi));
            }
            grad -= psi.dot(grad) * psi;
            CVector trial = psi - step * grad;
            trial /= trial.norm();
            double ft = sic_fiducial_objective(trial, d);
            if (ft < f) {
                psi = trial;
                f = ft;
                step *= 1.2;
            } else {
                step *= 0.5;
                if (step < 1e-16) break;
            }
        }
        psi = detail::polish_fiducial(psi, ops, d);
        f = sic_fiducial_objective(psi, d);
        if (f - target < 1e-13) {
            std::vector<CVector> out;
            for (int a = 0; a < d; ++a) {
                for (int b = 0; b < d; ++b) out.push_back(heisenberg_weyl(d, a, b) * psi);
            }
            return out;
        }
    }
    throw std::runtime_error("sic_by_search: no fiducial found; try another seed");
}

inline std::vector<CVector> sic_d4(std::uint64_t seed = 0) { return sic_by_search(4, seed); }

/// max over distinct pairs of | |<psi|psi'>|^2 - 1/(d+1) |.
inline double sic_defect(const std::vector<CVector>& states) {
    const double d = static_cast<double>(states[0].size());
    double worst = 0.0;
    for (auto [i, j] : unordered_pairs(static_cast<int>(states.size()))) {
        worst = std::max(worst, std::abs(std::norm(states[i].dot(states[j])) - 1.0 / (d + 1.0)));
    }
    return worst;
}

}  // namespace eapm

#endif
