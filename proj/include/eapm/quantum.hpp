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

// States, measurements and strategies of (entanglement-assisted)
// prepare-and-measure scenarios, and the Born rule that turns a strategy
// into its behavior p(b|x,y).
//
// Bipartite vectors are indexed a * dim_B + b (first factor most
// significant). For a shared state phi on A (x) B the "Schmidt matrix"
// Phi(a, b) = phi[a * dim_B + b] is used throughout: (K (x) 1) phi has
// Schmidt matrix K * Phi.

#ifndef EAPM_QUANTUM_HPP
#define EAPM_QUANTUM_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "eapm/linalg.hpp"

namespace eapm {

enum class MessageKind { Classical, Quantum };

struct Scenario {
    int nX = 1;
    int nY = 1;
    int nB = 2;
    int d = 2;
    MessageKind message = MessageKind::Quantum;
    int D = 1;
    Field field = Field::Complex;

    void validate() const {
        if (nX < 1 || nY < 1 || nB < 1 || d < 1 || D < 1) {
            throw ContractViolation("Scenario: all counts must be >= 1");
        }
        if (field == Field::Real && message != MessageKind::Quantum) {
            throw ContractViolation("Scenario: real field requires quantum messages");
        }
    }

    /// Same input/output alphabet sizes (resources may differ).
    bool same_shape(const Scenario& o) const {
        return nX == o.nX && nY == o.nY && nB == o.nB;
    }
};

/// Conditional probability table p(b|x,y).
class Behavior {
  public:
    Behavior() = default;
    Behavior(Scenario scenario, std::vector<double> table)
        : scenario_(scenario), table_(std::move(table)) {
        if (table_.size() != static_cast<size_t>(scenario_.nX * scenario_.nY * scenario_.nB)) {
            throw DimensionMismatch("Behavior: table size does not match scenario");
        }
    }

    static Behavior zeros(const Scenario& s) {
        return Behavior(s, std::vector<double>(static_cast<size_t>(s.nX * s.nY * s.nB), 0.0));
    }

    static Behavior uniform(const Scenario& s) {
        return Behavior(s, std::vector<double>(static_cast<size_t>(s.nX * s.nY * s.nB), 1.0 / s.nB));
    }

    const Scenario& scenario() const { return scenario_; }
    const std::vector<double>& table() const { return table_; }

    double operator()(int x, int y, int b) const { return table_[index(x, y, b)]; }
    double& operator()(int x, int y, int b) { return table_[index(x, y, b)]; }

    /// Throws ContractViolation unless entries are nonnegative and each
    /// (x, y) row sums to one.
    void validate() const {
        for (int x = 0; x < scenario_.nX; ++x) {
            for (int y = 0; y < scenario_.nY; ++y) {
                double total = 0.0;
                for (int b = 0; b < scenario_.nB; ++b) {
                    double p = (*this)(x, y, b);
                    if (!(p >= -tol::probability_floor)) {
                        throw ContractViolation("Behavior: negative probability");
                    }
                    total += p;
                }
                if (std::abs(total - 1.0) > tol::normalization) {
                    throw ContractViolation("Behavior: probabilities do not sum to one");
                }
            }
        }
    }

    double max_abs_difference(const Behavior& o) const {
        if (!scenario_.same_shape(o.scenario_)) {
            throw DimensionMismatch("Behavior: shapes differ");
        }
        double worst = 0.0;
        for (size_t i = 0; i < table_.size(); ++i) {
            worst = std::max(worst, std::abs(table_[i] - o.table_[i]));
        }
        return worst;
    }

  private:
    size_t index(int x, int y, int b) const {
        return static_cast<size_t>((x * scenario_.nY + y) * scenario_.nB + b);
    }

    Scenario scenario_{};
    std::vector<double> table_;
};

class DensityMatrix {
  public:
    DensityMatrix() = default;
    explicit DensityMatrix(CMatrix m) : m_(std::move(m)) {
        if (!is_hermitian(m_)) {
            throw ContractViolation("DensityMatrix: not Hermitian");
        }
        if (std::abs(m_.trace().real() - 1.0) > tol::trace) {
            throw ContractViolation("DensityMatrix: trace is not one");
        }
        if (min_eigenvalue(m_) < -tol::psd) {
            throw ContractViolation("DensityMatrix: not positive semidefinite");
        }
    }

    static DensityMatrix pure(const CVector& v) {
        return DensityMatrix(projector(v / v.norm()));
    }

    const CMatrix& matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

  private:
    CMatrix m_;
};

class Povm {
  public:
    Povm() = default;
    explicit Povm(std::vector<CMatrix> effects) : effects_(std::move(effects)) {
        if (effects_.empty()) {
            throw ContractViolation("Povm: needs at least one effect");
        }
        const auto n = effects_[0].rows();
        CMatrix total = CMatrix::Zero(n, n);
        for (const auto& e : effects_) {
            if (e.rows() != n || e.cols() != n) {
                throw DimensionMismatch("Povm: effects have different sizes");
            }
            if (!is_hermitian(e)) {
                throw ContractViolation("Povm: effect is not Hermitian");
            }
            if (min_eigenvalue(e) < -tol::psd) {
                throw ContractViolation("Povm: effect is not positive semidefinite");
            }
            total += e;
        }
        if ((total - identity(n)).cwiseAbs().maxCoeff() > tol::povm_sum) {
            throw ContractViolation("Povm: effects do not sum to identity");
        }
    }

    /// Two-outcome measurement of a +-1 observable: {(1+O)/2, (1-O)/2}.
    static Povm from_observable(const CMatrix& observable) {
        const auto n = observable.rows();
        return Povm({0.5 * (identity(n) + observable), 0.5 * (identity(n) - observable)});
    }

    static Povm from_basis(const CMatrix& basis_columns) {
        std::vector<CMatrix> effects;
        for (Eigen::Index i = 0; i < basis_columns.cols(); ++i) {
            effects.push_back(projector(basis_columns.col(i)));
        }
        return Povm(std::move(effects));
    }

    const std::vector<CMatrix>& effects() const { return effects_; }
    const CMatrix& operator[](size_t b) const { return effects_[b]; }
    int outcomes() const { return static_cast<int>(effects_.size()); }
    Eigen::Index dim() const { return effects_.empty() ? 0 : effects_[0].rows(); }

  private:
    std::vector<CMatrix> effects_;
};

struct BlochVector {
    std::array<double, 3> r{0.0, 0.0, 0.0};

    double norm() const { return std::sqrt(r[0] * r[0] + r[1] * r[1] + r[2] * r[2]); }
};

// ---------------------------------------------------------------------------
// Strategies

/// Deterministic classical strategy: enc[x] in [d], dec[m][y] in [nB].
struct ClassicalDet {
    int d = 2;
    int nB = 2;
    std::vector<int> enc;
    std::vector<std::vector<int>> dec;
};

struct BareQuantum {
    std::vector<DensityMatrix> states;
    std::vector<Povm> povms;
};

/// Entanglement-assisted classical message: Alice measures {N_{c|x}} on her
/// half of phi and sends c; Bob measures {M_{b|y,c}} on his half.
struct EAClassical {
    int D = 2;
    CVector shared;
    std::vector<Povm> alice;             // [x], d outcomes each
    std::vector<std::vector<Povm>> bob;  // [y][c]
};

/// Alice applies U_x to her d-dimensional half of phi in C^d (x) C^D and
/// sends it; Bob measures on C^d (x) C^D.
struct EAQuantumUnitary {
    int d = 2;
    int D = 2;
    CVector shared;
    std::vector<CMatrix> unitaries;
    std::vector<Povm> bob;
};

/// General channel from Alice's C^D to the message C^d, as an isometry
/// V_x: C^D -> C^d (x) C^E (row index c * E + e). Bob measures on C^d (x) C^D.
struct EAQuantumIsometry {
    int d = 2;
    int D = 2;
    int E = 4;
    CVector shared;
    std::vector<CMatrix> isometries;
    std::vector<Povm> bob;
};

using Strategy = std::variant<ClassicalDet, BareQuantum, EAClassical, EAQuantumUnitary, EAQuantumIsometry>;

inline std::string strategy_tag(const Strategy& s) {
    static const char* names[] = {"ClassicalDet", "BareQuantum", "EAClassical", "EAQuantumUnitary", "EAQuantumIsometry"};
    return names[s.index()];
}

// ---------------------------------------------------------------------------
// Named states and operators

inline CVector maximally_entangled(int D) {
    if (D < 1) {
        throw ContractViolation("maximally_entangled: D must be >= 1");
    }
    CVector v = CVector::Zero(D * D);
    for (int i = 0; i < D; ++i) {
        v[i * D + i] = 1.0 / std::sqrt(static_cast<double>(D));
    }
    return v;
}

/// cos(theta)|00> + sin(theta)|11>.
inline CVector theta_state(double theta) {
    if (theta < -1e-15 || theta > std::numbers::pi / 2 + 1e-15) {
        throw ContractViolation("theta_state: theta must lie in [0, pi/2]");
    }
    CVector v = CVector::Zero(4);
    v[0] = std::cos(theta);
    v[3] = std::sin(theta);
    return v;
}

inline CMatrix shift_operator(int k) {
    CMatrix x = CMatrix::Zero(k, k);
    for (int j = 0; j < k; ++j) {
        x((j + 1) % k, j) = 1.0;
    }
    return x;
}

inline CMatrix clock_operator(int k) {
    CMatrix z = CMatrix::Zero(k, k);
    for (int j = 0; j < k; ++j) {
        z(j, j) = std::polar(1.0, 2.0 * std::numbers::pi * j / k);
    }
    return z;
}

/// Heisenberg-Weyl operator X^a Z^b on C^k.
inline CMatrix heisenberg_weyl(int k, int a, int b) {
    CMatrix out = identity(k);
    CMatrix x = shift_operator(k);
    CMatrix z = clock_operator(k);
    for (int i = 0; i < a; ++i) out = out * x;
    for (int i = 0; i < b; ++i) out = out * z;
    return out;
}

inline DensityMatrix bloch_to_state(const BlochVector& r) {
    if (r.norm() > 1.0 + tol::bloch_norm) {
        throw ContractViolation("bloch_to_state: Bloch vector longer than one");
    }
    CMatrix m = 0.5 * (identity(2) + r.r[0] * pauli_x() + r.r[1] * pauli_y() + r.r[2] * pauli_z());
    return DensityMatrix(m);
}

/// m . sigma for a unit vector m.
inline CMatrix qubit_observable(const std::array<double, 3>& m) {
    return m[0] * pauli_x() + m[1] * pauli_y() + m[2] * pauli_z();
}

inline CMatrix schmidt_matrix(const CVector& phi, Eigen::Index dim_a, Eigen::Index dim_b) {
    if (phi.size() != dim_a * dim_b) {
        throw DimensionMismatch("schmidt_matrix: state size does not match dims");
    }
    // phi[a * dim_b + b] is row-major in (a, b); Eigen maps column-major.
    return Eigen::Map<const CMatrix>(phi.data(), dim_b, dim_a).transpose();
}

inline CVector from_schmidt_matrix(const CMatrix& m) {
    CMatrix t = m.transpose();
    return Eigen::Map<const CVector>(t.data(), t.size());
}

/// Bob's conditional state tr_A[(N (x) 1) phi phi^dagger] = Phi^T N^T conj(Phi).
inline CMatrix steer_to_bob(const CMatrix& schmidt, const CMatrix& alice_effect) {
    return schmidt.transpose() * alice_effect.transpose() * schmidt.conjugate();
}

/// Alice's conditional operator tr_B[(1 (x) M) phi phi^dagger] = Phi M^T Phi^dagger.
inline CMatrix steer_to_alice(const CMatrix& schmidt, const CMatrix& bob_effect) {
    return schmidt * bob_effect.transpose() * schmidt.adjoint();
}

// ---------------------------------------------------------------------------
// Validation and evaluation

namespace detail {

inline void require_unit(const CVector& v, const char* what) {
    if (std::abs(v.norm() - 1.0) > 1e-10) {
        throw ContractViolation(std::string(what) + ": shared state is not normalized");
    }
}

inline void require_povm_family(const std::vector<Povm>& povms, Eigen::Index dim, int outcomes, const char* what) {
    for (const auto& p : povms) {
        if (p.dim() != dim) {
            throw DimensionMismatch(std::string(what) + ": POVM dimension mismatch");
        }
        if (p.outcomes() != outcomes) {
            throw DimensionMismatch(std::string(what) + ": POVMs have different outcome counts");
        }
    }
}

// Effective states of an isometric strategy given the Schmidt matrix.
inline CMatrix isometry_output(const CMatrix& v, const CMatrix& schmidt, int d, int E) {
    CMatrix psi = v * schmidt;  // rows (c, e), cols b
    const auto db = schmidt.cols();
    CMatrix rho = CMatrix::Zero(d * db, d * db);
    CVector ve(d * db);
    for (int e = 0; e < E; ++e) {
        for (int c = 0; c < d; ++c) {
            ve.segment(c * db, db) = psi.row(c * E + e).transpose();
        }
        rho.noalias() += ve * ve.adjoint();
    }
    return rho;
}

}  // namespace detail

/// Scenario implied by a strategy (message kind, dims, entanglement).
inline Scenario scenario_of(const Strategy& strategy) {
    Scenario s;
    std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, ClassicalDet>) {
                s.nX = static_cast<int>(st.enc.size());
                s.nY = st.dec.empty() ? 0 : static_cast<int>(st.dec[0].size());
                s.nB = st.nB;
                s.d = st.d;
                s.message = MessageKind::Classical;
            } else if constexpr (std::is_same_v<T, BareQuantum>) {
                s.nX = static_cast<int>(st.states.size());
                s.nY = static_cast<int>(st.povms.size());
                s.nB = st.povms.empty() ? 0 : st.povms[0].outcomes();
                s.d = st.states.empty() ? 0 : static_cast<int>(st.states[0].dim());
            } else if constexpr (std::is_same_v<T, EAClassical>) {
                s.nX = static_cast<int>(st.alice.size());
                s.nY = static_cast<int>(st.bob.size());
                s.nB = (st.bob.empty() || st.bob[0].empty()) ? 0 : st.bob[0][0].outcomes();
                s.d = st.alice.empty() ? 0 : st.alice[0].outcomes();
                s.D = st.D;
                s.message = MessageKind::Classical;
            } else if constexpr (std::is_same_v<T, EAQuantumUnitary>) {
                s.nX = static_cast<int>(st.unitaries.size());
                s.nY = static_cast<int>(st.bob.size());
                s.nB = st.bob.empty() ? 0 : st.bob[0].outcomes();
                s.d = st.d;
                s.D = st.D;
            } else {
                s.nX = static_cast<int>(st.isometries.size());
                s.nY = static_cast<int>(st.bob.size());
                s.nB = st.bob.empty() ? 0 : st.bob[0].outcomes();
                s.d = st.d;
                s.D = st.D;
            }
        },
        strategy);
    return s;
}

/// Checks the cross-part consistency that the per-type constructors cannot.
inline void validate_strategy(const Strategy& strategy) {
    Scenario s = scenario_of(strategy);
    if (s.nX < 1 || s.nY < 1 || s.nB < 1) {
        throw ContractViolation("strategy: empty input or outcome alphabet");
    }
    std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, ClassicalDet>) {
                if (static_cast<int>(st.dec.size()) != st.d) {
                    throw DimensionMismatch("ClassicalDet: decoder needs one row per message");
                }
                for (int m : st.enc) {
                    if (m < 0 || m >= st.d) throw ContractViolation("ClassicalDet: message out of range");
                }
                for (const auto& row : st.dec) {
                    if (static_cast<int>(row.size()) != s.nY) throw DimensionMismatch("ClassicalDet: ragged decoder");
                    for (int b : row) {
                        if (b < 0 || b >= st.nB) throw ContractViolation("ClassicalDet: outcome out of range");
                    }
                }
            } else if constexpr (std::is_same_v<T, BareQuantum>) {
                for (const auto& rho : st.states) {
                    if (rho.dim() != s.d) throw DimensionMismatch("BareQuantum: states have different dims");
                }
                detail::require_povm_family(st.povms, s.d, s.nB, "BareQuantum");
            } else if constexpr (std::is_same_v<T, EAClassical>) {
                if (st.shared.size() != st.D * st.D) throw DimensionMismatch("EAClassical: shared state size");
                detail::require_unit(st.shared, "EAClassical");
                detail::require_povm_family(st.alice, st.D, s.d, "EAClassical(alice)");
                for (const auto& row : st.bob) {
                    if (static_cast<int>(row.size()) != s.d) {
                        throw DimensionMismatch("EAClassical: need one Bob POVM per (y, c)");
                    }
                    detail::require_povm_family(row, st.D, s.nB, "EAClassical(bob)");
                }
            } else if constexpr (std::is_same_v<T, EAQuantumUnitary>) {
                if (st.shared.size() != st.d * st.D) throw DimensionMismatch("EAQuantumUnitary: shared state size");
                detail::require_unit(st.shared, "EAQuantumUnitary");
                for (const auto& u : st.unitaries) {
                    if (u.rows() != st.d || u.cols() != st.d) {
                        throw DimensionMismatch("EAQuantumUnitary: unitary size");
                    }
                    if ((u.adjoint() * u - identity(st.d)).cwiseAbs().maxCoeff() > tol::isometry) {
                        throw ContractViolation("EAQuantumUnitary: operator is not unitary");
                    }
                }
                detail::require_povm_family(st.bob, st.d * st.D, s.nB, "EAQuantumUnitary");
            } else {
                if (st.shared.size() != st.D * st.D) throw DimensionMismatch("EAQuantumIsometry: shared state size");
                detail::require_unit(st.shared, "EAQuantumIsometry");
                for (const auto& v : st.isometries) {
                    if (v.rows() != st.d * st.E || v.cols() != st.D) {
                        throw DimensionMismatch("EAQuantumIsometry: isometry shape");
                    }
                    if ((v.adjoint() * v - identity(st.D)).cwiseAbs().maxCoeff() > tol::isometry) {
                        throw ContractViolation("EAQuantumIsometry: V^dagger V != 1");
                    }
                }
                detail::require_povm_family(st.bob, st.d * st.D, s.nB, "EAQuantumIsometry");
            }
        },
        strategy);
}

/// Operators Bob measures for each x. Bare quantum: rho_x. EA quantum:
/// the state of (message, Bob's share). EA classical: the classical-quantum
/// state sum_c |c><c| (x) rho^{x,c}.
inline std::vector<CMatrix> effective_operators(const Strategy& strategy) {
    std::vector<CMatrix> out;
    std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, ClassicalDet>) {
                for (int m : st.enc) {
                    CMatrix rho = CMatrix::Zero(st.d, st.d);
                    rho(m, m) = 1.0;
                    out.push_back(rho);
                }
            } else if constexpr (std::is_same_v<T, BareQuantum>) {
                for (const auto& rho : st.states) out.push_back(rho.matrix());
            } else if constexpr (std::is_same_v<T, EAClassical>) {
                CMatrix phi = schmidt_matrix(st.shared, st.D, st.D);
                for (const auto& n : st.alice) {
                    const int d = n.outcomes();
                    CMatrix rho = CMatrix::Zero(d * st.D, d * st.D);
                    for (int c = 0; c < d; ++c) {
                        rho.block(c * st.D, c * st.D, st.D, st.D) = steer_to_bob(phi, n[c]);
                    }
                    out.push_back(rho);
                }
            } else if constexpr (std::is_same_v<T, EAQuantumUnitary>) {
                CMatrix phi = schmidt_matrix(st.shared, st.d, st.D);
                for (const auto& u : st.unitaries) {
                    out.push_back(projector(from_schmidt_matrix(u * phi)));
                }
            } else {
                CMatrix phi = schmidt_matrix(st.shared, st.D, st.D);
                for (const auto& v : st.isometries) {
                    out.push_back(detail::isometry_output(v, phi, st.d, st.E));
                }
            }
        },
        strategy);
    return out;
}

/// Effective states on C^d (x) C^D of an entanglement-assisted strategy.
inline std::vector<DensityMatrix> effective_states(const Strategy& strategy) {
    if (std::holds_alternative<ClassicalDet>(strategy) || std::holds_alternative<BareQuantum>(strategy)) {
        throw ContractViolation("effective_states: strategy is not entanglement assisted");
    }
    std::vector<DensityMatrix> out;
    for (auto& m : effective_operators(strategy)) {
        out.emplace_back(hermitian_part(m));
    }
    return out;
}

/// Born rule.
inline Behavior behavior_of(const Strategy& strategy) {
    validate_strategy(strategy);
    Scenario s = scenario_of(strategy);
    Behavior p = Behavior::zeros(s);
    if (const auto* cd = std::get_if<ClassicalDet>(&strategy)) {
        for (int x = 0; x < s.nX; ++x) {
            for (int y = 0; y < s.nY; ++y) {
                p(x, y, cd->dec[cd->enc[x]][y]) = 1.0;
            }
        }
        return p;
    }
    if (const auto* ea = std::get_if<EAClassical>(&strategy)) {
        CMatrix phi = schmidt_matrix(ea->shared, ea->D, ea->D);
        for (int x = 0; x < s.nX; ++x) {
            for (int c = 0; c < s.d; ++c) {
                CMatrix rho_b = steer_to_bob(phi, ea->alice[x][c]);
                for (int y = 0; y < s.nY; ++y) {
                    for (int b = 0; b < s.nB; ++b) {
                        p(x, y, b) += real_trace_product(rho_b, ea->bob[y][c][b]);
                    }
                }
            }
        }
        return p;
    }
    const std::vector<Povm>* povms = nullptr;
    std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, BareQuantum>) {
                povms = &st.povms;
            } else if constexpr (std::is_same_v<T, EAQuantumUnitary> || std::is_same_v<T, EAQuantumIsometry>) {
                povms = &st.bob;
            }
        },
        strategy);
    std::vector<CMatrix> rhos = effective_operators(strategy);
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            for (int b = 0; b < s.nB; ++b) {
                p(x, y, b) = real_trace_product(rhos[x], (*povms)[y][b]);
            }
        }
    }
    return p;
}

// ---------------------------------------------------------------------------
// Lifts between resources

/// Dense coding: a classical strategy with d = k^2 messages becomes an
/// EA strategy sending a k-dimensional system over a maximally entangled
/// pair. Message m = a * k + b is encoded by X^a Z^b.
inline EAQuantumUnitary dense_coding_lift(const ClassicalDet& cd) {
    const int k = static_cast<int>(std::lround(std::sqrt(static_cast<double>(cd.d))));
    if (k * k != cd.d) {
        throw ContractViolation("dense_coding_lift: message alphabet is not a perfect square");
    }
    validate_strategy(cd);
    EAQuantumUnitary out;
    out.d = k;
    out.D = k;
    out.shared = maximally_entangled(k);
    std::vector<CMatrix> codes;
    std::vector<CVector> bell;
    for (int m = 0; m < cd.d; ++m) {
        codes.push_back(heisenberg_weyl(k, m / k, m % k));
        bell.push_back(from_schmidt_matrix(codes.back() * schmidt_matrix(out.shared, k, k)));
    }
    for (int x : cd.enc) {
        out.unitaries.push_back(codes[x]);
    }
    const int n_y = cd.dec.empty() ? 0 : static_cast<int>(cd.dec[0].size());
    for (int y = 0; y < n_y; ++y) {
        std::vector<CMatrix> effects(cd.nB, CMatrix::Zero(k * k, k * k));
        for (int m = 0; m < cd.d; ++m) {
            effects[cd.dec[m][y]] += projector(bell[m]);
        }
        out.bob.emplace_back(std::move(effects));
    }
    return out;
}

/// Teleportation: a bare d-dimensional quantum strategy becomes an EA
/// classical strategy with d^2 messages over a maximally entangled pair.
/// Alice's effective POVM on her share for Bell outcome c = (a, b) is
/// N_c = (W_c^dagger rho_x W_c)^T / d with W_c = X^a Z^b; Bob undoes W_c
/// before measuring.
inline EAClassical teleportation_lift(const BareQuantum& bq) {
    validate_strategy(bq);
    const int d = static_cast<int>(bq.states[0].dim());
    EAClassical out;
    out.D = d;
    out.shared = maximally_entangled(d);
    std::vector<CMatrix> corrections;
    for (int c = 0; c < d * d; ++c) {
        corrections.push_back(heisenberg_weyl(d, c / d, c % d));
    }
    for (const auto& rho : bq.states) {
        std::vector<CMatrix> effects;
        for (const auto& w : corrections) {
            effects.push_back(hermitian_part((w.adjoint() * rho.matrix() * w).transpose() / d));
        }
        out.alice.emplace_back(std::move(effects));
    }
    for (const auto& m : bq.povms) {
        std::vector<Povm> row;
        for (const auto& w : corrections) {
            std::vector<CMatrix> effects;
            for (const auto& e : m.effects()) {
                effects.push_back(hermitian_part(w.adjoint() * e * w));
            }
            row.emplace_back(std::move(effects));
        }
        out.bob.push_back(std::move(row));
    }
    return out;
}

}  // namespace eapm

#endif
