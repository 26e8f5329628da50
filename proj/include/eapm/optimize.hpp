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

// Exact classical bounds by enumeration and see-saw lower bounds.
//
// Every see-saw alternates blocks of parameters. Each block update either
// solves its subproblem exactly (top eigenvectors, Helstrom measurements)
// or is accepted only when the objective does not decrease, so each run is
// monotone and its final strategy is a certified lower bound.

#ifndef EAPM_OPTIMIZE_HPP
#define EAPM_OPTIMIZE_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "eapm/quantum.hpp"
#include "eapm/random.hpp"
#include "eapm/witnesses.hpp"

namespace eapm {

// ---------------------------------------------------------------------------
// Exact classical value

inline std::uint64_t default_enumeration_cap() {
    if (const char* env = std::getenv("EAPM_ENUM_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && v > 0) {
            return v;
        }
    }
    return 10'000'000ULL;
}

struct ClassicalOptimum {
    double value = 0.0;
    ClassicalDet strategy;
};

/// Maximum of the witness over deterministic strategies with d messages.
/// Shared randomness cannot exceed it since the witness is linear. Ties in
/// the decoder go to the smallest outcome.
inline ClassicalOptimum classical_exact(const Witness& w, int d, std::uint64_t cap = default_enumeration_cap()) {
    if (d < 1) {
        throw ContractViolation("classical_exact: d must be >= 1");
    }
    const int nx = w.n_x();
    const int ny = w.n_y();
    const int nb = w.n_b();
    double count = std::pow(static_cast<double>(d), nx);
    if (count > static_cast<double>(cap)) {
        throw CapacityError("classical_exact: " + std::to_string(d) + "^" + std::to_string(nx) +
                            " encodings exceed the enumeration cap of " + std::to_string(cap));
    }
    std::vector<int> enc(nx, 0);
    std::vector<double> sums(static_cast<size_t>(d * ny * nb));
    ClassicalOptimum best;
    best.value = -std::numeric_limits<double>::infinity();
    while (true) {
        std::fill(sums.begin(), sums.end(), 0.0);
        for (int x = 0; x < nx; ++x) {
            for (int y = 0; y < ny; ++y) {
                for (int b = 0; b < nb; ++b) {
                    sums[(enc[x] * ny + y) * nb + b] += w(x, y, b);
                }
            }
        }
        double value = 0.0;
        for (int m = 0; m < d; ++m) {
            for (int y = 0; y < ny; ++y) {
                const double* row = &sums[(m * ny + y) * nb];
                value += *std::max_element(row, row + nb);
            }
        }
        if (value > best.value + 1e-12) {
            best.value = value;
            best.strategy.d = d;
            best.strategy.nB = nb;
            best.strategy.enc = enc;
            best.strategy.dec.assign(d, std::vector<int>(ny, 0));
            for (int m = 0; m < d; ++m) {
                for (int y = 0; y < ny; ++y) {
                    const double* row = &sums[(m * ny + y) * nb];
                    best.strategy.dec[m][y] = static_cast<int>(std::max_element(row, row + nb) - row);
                }
            }
        }
        int pos = 0;
        while (pos < nx && ++enc[pos] == d) {
            enc[pos++] = 0;
        }
        if (pos == nx) break;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Measurement step

namespace detail {

// Clips negative eigenvalues and renormalizes so the effects sum to 1.
inline void polish_povm(std::vector<CMatrix>& effects, Field field) {
    const auto n = effects[0].rows();
    RVector values;
    CMatrix vectors;
    CMatrix total = CMatrix::Zero(n, n);
    for (auto& e : effects) {
        eig_fast(hermitian_part(e), field, values, vectors);
        e = vectors * values.cwiseMax(0.0).asDiagonal() * vectors.adjoint();
        total += e;
    }
    CMatrix root = inverse_sqrt(hermitian_part(total), field, 1e-14);
    for (auto& e : effects) e = hermitian_part(root * e * root);
}

// Projective candidate near a POVM: eigenvectors with eigenvalue > 1/2 of
// each effect, orthonormalized together. Empty when they do not span.
inline std::vector<CMatrix> round_projective(const std::vector<CMatrix>& effects, Field field) {
    const auto n = effects[0].rows();
    CMatrix basis(n, n);
    std::vector<int> owner;
    RVector values;
    CMatrix vectors;
    for (size_t b = 0; b < effects.size(); ++b) {
        eig_fast(hermitian_part(effects[b]), field, values, vectors);
        for (Eigen::Index k = 0; k < n; ++k) {
            if (values(k) <= 0.5) continue;
            if (static_cast<Eigen::Index>(owner.size()) == n) return {};
            basis.col(static_cast<Eigen::Index>(owner.size())) = vectors.col(k);
            owner.push_back(static_cast<int>(b));
        }
    }
    if (static_cast<Eigen::Index>(owner.size()) != n) return {};
    CMatrix u = nearest_unitary(basis);
    std::vector<CMatrix> out(effects.size(), CMatrix::Zero(n, n));
    for (Eigen::Index k = 0; k < n; ++k) out[owner[k]] += u.col(k) * u.col(k).adjoint();
    return out;
}

}  // namespace detail

struct PovmStep {
    std::vector<CMatrix> effects;
    double value = 0.0;
    bool certified = false;
    int iterations = 0;
};

/// sum_b Re tr(F_b M_b).
inline double povm_objective(const std::vector<CMatrix>& rewards, const std::vector<CMatrix>& effects) {
    double total = 0.0;
    for (size_t b = 0; b < rewards.size(); ++b) {
        total += real_trace_product(rewards[b], effects[b]);
    }
    return total;
}

/// Dual feasibility of Y = herm(sum_b F_b M_b): Y - F_b >= -tolerance for
/// all b certifies that {M_b} maximizes sum_b tr(F_b M_b).
inline bool povm_certificate(const std::vector<CMatrix>& rewards, const std::vector<CMatrix>& effects,
                             double tolerance = tol::povm_certificate) {
    CMatrix y = CMatrix::Zero(rewards[0].rows(), rewards[0].cols());
    for (size_t b = 0; b < rewards.size(); ++b) {
        y.noalias() += rewards[b] * effects[b];
    }
    y = hermitian_part(y);
    double scale = 1.0;
    for (const auto& f : rewards) scale = std::max(scale, f.cwiseAbs().maxCoeff());
    for (const auto& f : rewards) {
        if (min_eigenvalue(y - f) < -tolerance * scale) {
            return false;
        }
    }
    return true;
}

/// Optimal measurement for reward operators F_b: maximizes
/// sum_b tr(F_b M_b) over POVMs. Two outcomes are solved exactly
/// (Helstrom); more outcomes use the fixed point
/// M_b <- S^{-1/2} F'_b M_b F'_b S^{-1/2}, S = sum_b F'_b M_b F'_b, on the
/// shifted rewards F'_b = F_b + c 1 >= 0, returning the best iterate.
inline PovmStep povm_step(const std::vector<CMatrix>& rewards, Field field = Field::Complex, int max_iterations = 500,
                          const std::vector<CMatrix>* warm = nullptr) {
    if (rewards.empty()) {
        throw ContractViolation("povm_step: need at least one reward operator");
    }
    const auto n = rewards[0].rows();
    for (const auto& f : rewards) {
        if (f.rows() != n || f.cols() != n) {
            throw DimensionMismatch("povm_step: rewards have different dimensions");
        }
    }
    const int nb = static_cast<int>(rewards.size());
    PovmStep out;
    if (nb == 1) {
        out.effects = {identity(n)};
        out.value = povm_objective(rewards, out.effects);
        out.certified = true;
        return out;
    }
    double scale = 0.0;
    bool all_equal = true;
    for (const auto& f : rewards) scale = std::max(scale, f.cwiseAbs().maxCoeff());
    for (int b = 1; b < nb; ++b) {
        if ((rewards[b] - rewards[0]).cwiseAbs().maxCoeff() > 1e-14 * std::max(1.0, scale)) {
            all_equal = false;
            break;
        }
    }
    if (all_equal) {
        out.effects.assign(nb, identity(n) / static_cast<double>(nb));
        out.value = povm_objective(rewards, out.effects);
        out.certified = true;
        return out;
    }
    if (nb == 2) {
        CMatrix p = nonnegative_projector(rewards[0] - rewards[1], field);
        out.effects = {p, identity(n) - p};
        out.value = povm_objective(rewards, out.effects);
        out.certified = true;
        return out;
    }

    // A margin keeps S >= margin^2 1 well conditioned.
    double shift = 1e-3 * std::max(1.0, scale);
    for (const auto& f : rewards) shift = std::max(shift, 1e-3 * std::max(1.0, scale) - min_eigenvalue(f));
    std::vector<CMatrix> shifted;
    for (const auto& f : rewards) shifted.push_back(f + shift * identity(n));

    std::vector<CMatrix> m;
    double warm_value = -std::numeric_limits<double>::infinity();
    if (warm != nullptr && static_cast<int>(warm->size()) == nb) {
        warm_value = povm_objective(rewards, *warm);
        // Keep every effect full rank so the iteration can move mass.
        for (const auto& e : *warm) m.push_back(0.999 * e + 0.001 * identity(n) / nb);
    } else {
        m.assign(nb, identity(n) / static_cast<double>(nb));
    }
    std::vector<CMatrix> best = m;
    double best_value = povm_objective(rewards, m);
    double previous = best_value;
    int it = 0;
    for (; it < max_iterations; ++it) {
        std::vector<CMatrix> fm(nb);
        CMatrix s = CMatrix::Zero(n, n);
        for (int b = 0; b < nb; ++b) {
            fm[b] = shifted[b] * m[b] * shifted[b];
            s += fm[b];
        }
        CMatrix root = inverse_sqrt(s, field, 1e-300);
        for (int b = 0; b < nb; ++b) {
            m[b] = hermitian_part(root * fm[b] * root);
        }
        detail::polish_povm(m, field);
        double value = povm_objective(rewards, m);
        if (value > best_value) {
            best_value = value;
            best = m;
        }
        if ((it + 1) % 10 == 0) {
            if (povm_certificate(rewards, best)) {
                out.certified = true;
                ++it;
                break;
            }
            auto rounded = detail::round_projective(best, field);
            if (!rounded.empty()) {
                double rv = povm_objective(rewards, rounded);
                if (rv >= best_value && povm_certificate(rewards, rounded)) {
                    best = std::move(rounded);
                    best_value = rv;
                    out.certified = true;
                    ++it;
                    break;
                }
            }
        }
        if (std::abs(value - previous) <= 1e-15 * std::max(1.0, std::abs(value))) {
            ++it;
            break;
        }
        previous = value;
    }
    if (!out.certified) {
        auto rounded = detail::round_projective(best, field);
        if (!rounded.empty()) {
            double rv = povm_objective(rewards, rounded);
            if (rv >= best_value) {
                best = std::move(rounded);
                best_value = rv;
            }
        }
    }
    if (warm != nullptr && warm_value >= best_value) {
        out.effects = *warm;
        out.value = warm_value;
    } else {
        out.effects = std::move(best);
        out.value = best_value;
    }
    if (!out.certified) {
        out.certified = povm_certificate(rewards, out.effects);
    }
    out.iterations = it;
    return out;
}

// ---------------------------------------------------------------------------
// See-saw configuration and report

struct SeesawConfig {
    int restarts = 100;
    int max_sweeps = 500;
    double tolerance = 1e-10;
    std::uint64_t seed = 0;
    Field field = Field::Complex;
    int inner_povm_iterations = 1000;
    int inner_isometry_iterations = 30;

    void validate() const {
        if (restarts < 1) throw ContractViolation("SeesawConfig: restarts must be >= 1");
        if (max_sweeps < 1) throw ContractViolation("SeesawConfig: max_sweeps must be >= 1");
        if (!(tolerance > 0)) throw ContractViolation("SeesawConfig: tolerance must be positive");
        if (inner_povm_iterations < 1 || inner_isometry_iterations < 1) {
            throw ContractViolation("SeesawConfig: inner iteration counts must be >= 1");
        }
    }
};

struct SeesawReport {
    double best_value = -std::numeric_limits<double>::infinity();
    Strategy best_strategy;
    int best_restart = -1;
    std::vector<double> per_restart_values;
    std::vector<int> sweeps_used;
    std::vector<double> best_trace;  // objective after every sweep of the best restart
    int certificates_ok = 0;
    int certificates_total = 0;
    bool monotone = true;
};

/// Shared entangled state: fixed to a given vector, or optimized.
struct SharedStatePolicy {
    std::optional<CVector> fixed;

    static SharedStatePolicy free_state() { return {}; }
    static SharedStatePolicy fixed_state(CVector v) { return {std::move(v)}; }

    void validate(int D, const char* where) const {
        if (!fixed) return;
        if (fixed->size() != D * D) {
            throw DimensionMismatch(std::string(where) + ": fixed shared state has the wrong size");
        }
        if (std::abs(fixed->norm() - 1.0) > tol::normalization) {
            throw ContractViolation(std::string(where) + ": fixed shared state is not normalized");
        }
    }
};

namespace detail {

struct RestartResult {
    double value = -std::numeric_limits<double>::infinity();
    Strategy strategy;
    int sweeps = 0;
    int cert_ok = 0;
    int cert_total = 0;
    bool monotone = true;
    std::vector<double> trace;
};

class MonotoneTracker {
  public:
    void record(double value) {
        if (value < last_ - tol::monotone_slack * std::max(1.0, std::abs(last_))) {
            ok_ = false;
        }
        last_ = value;
    }
    bool ok() const { return ok_; }
    double last() const { return last_; }

  private:
    double last_ = -std::numeric_limits<double>::infinity();
    bool ok_ = true;
};

/// Runs independent restarts (concurrently when hardware allows); restart
/// i draws from the stream derive_seed(seed, i), so the result does not
/// depend on scheduling.
template <class Fn>
SeesawReport run_restarts(const Witness& w, const SeesawConfig& cfg, Fn&& restart) {
    cfg.validate();
    std::vector<RestartResult> results(cfg.restarts);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (int i; (i = next++) < cfg.restarts;) {
            try {
                Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
                results[i] = restart(rng);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1u, std::min(std::thread::hardware_concurrency(), static_cast<unsigned>(cfg.restarts)));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    SeesawReport report;
    for (int i = 0; i < cfg.restarts; ++i) {
        auto& r = results[i];
        // The reported value is always recomputed from the strategy.
        r.value = evaluate(w, behavior_of(r.strategy));
        report.per_restart_values.push_back(r.value);
        report.sweeps_used.push_back(r.sweeps);
        report.certificates_ok += r.cert_ok;
        report.certificates_total += r.cert_total;
        report.monotone = report.monotone && r.monotone;
        if (r.value > report.best_value) {
            report.best_value = r.value;
            report.best_restart = i;
        }
    }
    report.best_strategy = results[report.best_restart].strategy;
    report.best_trace = results[report.best_restart].trace;
    return report;
}

/// Nonzero coefficients grouped for fast reward assembly.
struct Term {
    int x;
    int y;
    int b;
    double c;
};

inline std::vector<Term> witness_terms(const Witness& w) {
    std::vector<Term> out;
    for (int x = 0; x < w.n_x(); ++x) {
        for (int y = 0; y < w.n_y(); ++y) {
            for (int b = 0; b < w.n_b(); ++b) {
                if (w(x, y, b) != 0.0) out.push_back({x, y, b, w(x, y, b)});
            }
        }
    }
    return out;
}

/// One measurement step for every setting y given effective operators
/// rho_x; returns sum_y of the step values.
inline double measurement_step(const Witness& w, const std::vector<CMatrix>& rhos, std::vector<std::vector<CMatrix>>& povms,
                               Field field, int iterations, RestartResult& r) {
    const auto n = rhos[0].rows();
    double total = 0.0;
    for (int y = 0; y < w.n_y(); ++y) {
        std::vector<CMatrix> rewards(w.n_b(), CMatrix::Zero(n, n));
        for (int x = 0; x < w.n_x(); ++x) {
            for (int b = 0; b < w.n_b(); ++b) {
                double c = w(x, y, b);
                if (c != 0.0) rewards[b] += c * rhos[x];
            }
        }
        PovmStep step = povm_step(rewards, field, iterations, povms[y].empty() ? nullptr : &povms[y]);
        povms[y] = std::move(step.effects);
        total += step.value;
        ++r.cert_total;
        if (step.certified) ++r.cert_ok;
    }
    return total;
}

/// R_x = sum_{y,b} c[x][y][b] M_{b|y}.
inline std::vector<CMatrix> state_rewards(const Witness& w, const std::vector<std::vector<CMatrix>>& povms, Eigen::Index n) {
    std::vector<CMatrix> out(w.n_x(), CMatrix::Zero(n, n));
    for (int x = 0; x < w.n_x(); ++x) {
        for (int y = 0; y < w.n_y(); ++y) {
            for (int b = 0; b < w.n_b(); ++b) {
                double c = w(x, y, b);
                if (c != 0.0) out[x] += c * povms[y][b];
            }
        }
    }
    return out;
}

inline std::vector<Povm> to_povms(const std::vector<std::vector<CMatrix>>& effects) {
    std::vector<Povm> out;
    for (const auto& e : effects) out.emplace_back(e);
    return out;
}

inline bool converged(double previous, double current, double tolerance) {
    return current - previous < tolerance * std::max(1.0, std::abs(current));
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bare quantum messages

/// See-saw over d-dimensional pure states and Bob's POVMs. With
/// cfg.field == Field::Real every operator is kept real symmetric.
inline SeesawReport seesaw_bare(const Witness& w, int d, const SeesawConfig& cfg) {
    if (d < 1) throw ContractViolation("seesaw_bare: d must be >= 1");
    return detail::run_restarts(w, cfg, [&](Rng& rng) {
        detail::RestartResult r;
        detail::MonotoneTracker track;
        std::vector<CVector> psi;
        std::vector<CMatrix> rhos;
        for (int x = 0; x < w.n_x(); ++x) {
            psi.push_back(random_state(rng, d, cfg.field));
            rhos.push_back(projector(psi.back()));
        }
        std::vector<std::vector<CMatrix>> povms(w.n_y());
        double previous = -std::numeric_limits<double>::infinity();
        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            track.record(detail::measurement_step(w, rhos, povms, cfg.field, cfg.inner_povm_iterations, r));
            auto rewards = detail::state_rewards(w, povms, d);
            double value = 0.0;
            for (int x = 0; x < w.n_x(); ++x) {
                auto [lambda, v] = top_eigenvector(rewards[x], cfg.field);
                psi[x] = v;
                rhos[x] = projector(v);
                value += lambda;
            }
            track.record(value);
            r.trace.push_back(value);
            r.sweeps = sweep + 1;
            if (detail::converged(previous, value, cfg.tolerance)) break;
            previous = value;
        }
        BareQuantum st;
        for (const auto& v : psi) st.states.push_back(DensityMatrix::pure(v));
        st.povms = detail::to_povms(povms);
        r.strategy = std::move(st);
        r.monotone = track.ok();
        return r;
    });
}

// ---------------------------------------------------------------------------
// Generalized dense coding: U_x (x) 1 applied to a maximally entangled pair

namespace detail {

// Orthonormal basis (sigma_i (x) 1)|phi+> with sigma = (i 1, X, Y, Z);
// maximally entangled two-qubit states are real combinations of it up to
// a global phase.
inline CMatrix magic_basis() {
    const std::array<CMatrix, 4> sigma{I_UNIT * identity(2), pauli_x(), pauli_y(), pauli_z()};
    CMatrix phi = schmidt_matrix(maximally_entangled(2), 2, 2);
    CMatrix t(4, 4);
    for (int i = 0; i < 4; ++i) {
        t.col(i) = from_schmidt_matrix(sigma[i] * phi);
    }
    return t;
}

inline CMatrix unitary_from_real4(const RVector& z) {
    return I_UNIT * z[0] * identity(2) + z[1] * pauli_x() + z[2] * pauli_y() + z[3] * pauli_z();
}

}  // namespace detail

/// See-saw restricted to states (U_x (x) 1)|phi+> on C^k (x) C^k. The state
/// step tries the polar projection of the unconstrained optimum and a
/// projected ascent step, accepting only improvements; for k = 2 it also
/// solves the step exactly in the magic basis.
inline SeesawReport seesaw_gdc(const Witness& w, int k, const SeesawConfig& cfg) {
    if (k < 2) throw ContractViolation("seesaw_gdc: k must be >= 2");
    const int n = k * k;
    const CVector phi = maximally_entangled(k);
    const CMatrix phi_mat = schmidt_matrix(phi, k, k);
    const CMatrix magic = k == 2 ? detail::magic_basis() : CMatrix();
    auto state_of = [&](const CMatrix& u) { return CVector(from_schmidt_matrix(u * phi_mat)); };
    auto rayleigh = [](const CMatrix& r, const CVector& v) { return v.dot(r * v).real(); };

    return detail::run_restarts(w, cfg, [&](Rng& rng) {
        detail::RestartResult r;
        detail::MonotoneTracker track;
        std::vector<CMatrix> us;
        std::vector<CMatrix> rhos;
        for (int x = 0; x < w.n_x(); ++x) {
            us.push_back(random_unitary(rng, k));
            rhos.push_back(projector(state_of(us.back())));
        }
        std::vector<std::vector<CMatrix>> povms(w.n_y());
        double previous = -std::numeric_limits<double>::infinity();
        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            track.record(detail::measurement_step(w, rhos, povms, Field::Complex, cfg.inner_povm_iterations, r));
            auto rewards = detail::state_rewards(w, povms, n);
            double value = 0.0;
            for (int x = 0; x < w.n_x(); ++x) {
                const CMatrix& rx = rewards[x];
                CVector current = state_of(us[x]);
                double best = rayleigh(rx, current);
                CMatrix best_u = us[x];
                auto consider = [&](const CMatrix& candidate) {
                    double v = rayleigh(rx, state_of(candidate));
                    if (v > best) {
                        best = v;
                        best_u = candidate;
                    }
                };
                auto [lambda, top] = top_eigenvector(rx);
                double ratio = 0.0;
                CMatrix projected = detail::polar_factor(schmidt_matrix(top, k, k), &ratio);
                if (ratio > tol::degenerate_singular) consider(projected);
                const double shift = std::max(0.0, -min_eigenvalue(rx));
                CVector ascent = rx * current + shift * current;
                consider(detail::polar_factor(schmidt_matrix(ascent, k, k) + 1e-9 * us[x]));
                if (k == 2) {
                    RMatrix reduced = (magic.adjoint() * rx * magic).real();
                    Eigen::SelfAdjointEigenSolver<RMatrix> solver(0.5 * (reduced + reduced.transpose()));
                    RVector z = solver.eigenvectors().col(3);
                    consider(detail::unitary_from_real4(z / z.norm()));
                }
                us[x] = best_u;
                rhos[x] = projector(state_of(best_u));
                value += best;
            }
            track.record(value);
            r.trace.push_back(value);
            r.sweeps = sweep + 1;
            if (detail::converged(previous, value, cfg.tolerance)) break;
            previous = value;
        }
        EAQuantumUnitary st;
        st.d = k;
        st.D = k;
        st.shared = phi;
        st.unitaries = us;
        st.bob = detail::to_povms(povms);
        r.strategy = std::move(st);
        r.monotone = track.ok();
        return r;
    });
}

// ---------------------------------------------------------------------------
// Entanglement-assisted quantum messages through general channels

namespace detail {

// Columns psi_e (indexed c * D_B + b) of the purified output (V (x) 1) phi.
inline CMatrix purified_columns(const CMatrix& v, const CMatrix& phi_mat, int d, int E) {
    const auto db = phi_mat.cols();
    CMatrix psi = v * phi_mat;
    CMatrix cols(d * db, E);
    for (int c = 0; c < d; ++c) {
        for (int e = 0; e < E; ++e) {
            cols.block(c * db, e, db, 1) = psi.row(c * E + e).transpose();
        }
    }
    return cols;
}

// d f / d conj(V) for f(V) = sum_e psi_e^dagger R psi_e.
inline CMatrix isometry_gradient(const CMatrix& r_psi, const CMatrix& phi_mat, int d, int E) {
    const auto db = phi_mat.cols();
    CMatrix g(d * E, db);
    for (int c = 0; c < d; ++c) {
        for (int e = 0; e < E; ++e) {
            g.row(c * E + e) = r_psi.block(c * db, e, db, 1).transpose();
        }
    }
    return g * phi_mat.adjoint();
}

// Monotone ascent on f(V) = tr[rho_x(V) R] over isometries. With R shifted
// to be positive semidefinite f is convex in V, so the polar factor of the
// gradient never decreases it. Returns the final value.
inline double improve_isometry(CMatrix& v, const CMatrix& r, const CMatrix& phi_mat, int d, int E, int iterations,
                               double tolerance) {
    const double shift = std::max(0.0, -min_eigenvalue(r));
    const CMatrix rs = r + shift * identity(r.rows());
    CMatrix cols = purified_columns(v, phi_mat, d, E);
    double value = (cols.adjoint() * r * cols).trace().real();
    for (int it = 0; it < iterations; ++it) {
        CMatrix grad = isometry_gradient(rs * cols, phi_mat, d, E);
        CMatrix candidate = polar_factor(grad + 1e-9 * std::max(1.0, grad.norm()) * v);
        CMatrix cand_cols = purified_columns(candidate, phi_mat, d, E);
        double cand_value = (cand_cols.adjoint() * r * cand_cols).trace().real();
        if (cand_value < value) break;
        const bool small = cand_value - value < tolerance * std::max(1.0, std::abs(cand_value));
        v = std::move(candidate);
        cols = std::move(cand_cols);
        value = cand_value;
        if (small) break;
    }
    return value;
}

}  // namespace detail

/// See-saw over a shared state phi in C^D (x) C^D, channels given by
/// isometries V_x: C^D -> C^d (x) C^{dD}, and Bob's POVMs on C^d (x) C^D.
inline SeesawReport seesaw_ea_quantum(const Witness& w, int d, int D, const SharedStatePolicy& shared,
                                      const SeesawConfig& cfg) {
    if (d < 1 || D < 1) throw ContractViolation("seesaw_ea_quantum: d and D must be >= 1");
    shared.validate(D, "seesaw_ea_quantum");
    const int E = d * D;
    const int n = d * D;
    return detail::run_restarts(w, cfg, [&](Rng& rng) {
        detail::RestartResult r;
        detail::MonotoneTracker track;
        CVector phi = shared.fixed ? *shared.fixed : random_state(rng, D * D, cfg.field);
        CMatrix phi_mat = schmidt_matrix(phi, D, D);
        std::vector<CMatrix> vs;
        std::vector<CMatrix> rhos;
        for (int x = 0; x < w.n_x(); ++x) {
            vs.push_back(random_isometry(rng, d * E, D, cfg.field));
            rhos.push_back(detail::isometry_output(vs.back(), phi_mat, d, E));
        }
        std::vector<std::vector<CMatrix>> povms(w.n_y());
        double previous = -std::numeric_limits<double>::infinity();
        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            track.record(detail::measurement_step(w, rhos, povms, cfg.field, cfg.inner_povm_iterations, r));
            auto rewards = detail::state_rewards(w, povms, n);
            double value = 0.0;
            for (int x = 0; x < w.n_x(); ++x) {
                value += detail::improve_isometry(vs[x], rewards[x], phi_mat, d, E, cfg.inner_isometry_iterations,
                                                  cfg.tolerance);
            }
            track.record(value);
            if (!shared.fixed) {
                CMatrix k = CMatrix::Zero(D * D, D * D);
                const CMatrix id_b = identity(D);
                for (int x = 0; x < w.n_x(); ++x) {
                    for (int e = 0; e < E; ++e) {
                        CMatrix ve(d, D);
                        for (int c = 0; c < d; ++c) ve.row(c) = vs[x].row(c * E + e);
                        CMatrix lift = kron(ve, id_b);
                        k.noalias() += lift.adjoint() * rewards[x] * lift;
                    }
                }
                auto [lambda, top] = top_eigenvector(k);
                if (lambda >= value) {
                    phi = top;
                    phi_mat = schmidt_matrix(phi, D, D);
                    value = lambda;
                }
                track.record(value);
            }
            for (int x = 0; x < w.n_x(); ++x) {
                rhos[x] = detail::isometry_output(vs[x], phi_mat, d, E);
            }
            r.trace.push_back(value);
            r.sweeps = sweep + 1;
            if (detail::converged(previous, value, cfg.tolerance)) break;
            previous = value;
        }
        EAQuantumIsometry st;
        st.d = d;
        st.D = D;
        st.E = E;
        st.shared = phi;
        st.isometries = vs;
        st.bob = detail::to_povms(povms);
        r.strategy = std::move(st);
        r.monotone = track.ok();
        return r;
    });
}

// ---------------------------------------------------------------------------
// Entanglement-assisted classical messages

/// See-saw over phi, Alice's d-outcome POVMs {N_{c|x}} on her share and
/// Bob's POVMs {M_{b|y,c}} on his. The marginal sum_c rho^{x,c} = tr_A phi
/// holds for every iterate by construction.
inline SeesawReport seesaw_ea_classical(const Witness& w, int d, int D, const SharedStatePolicy& shared,
                                        const SeesawConfig& cfg) {
    if (d < 1 || D < 1) throw ContractViolation("seesaw_ea_classical: d and D must be >= 1");
    shared.validate(D, "seesaw_ea_classical");
    const int nx = w.n_x();
    const int ny = w.n_y();
    const int nb = w.n_b();
    return detail::run_restarts(w, cfg, [&](Rng& rng) {
        detail::RestartResult r;
        detail::MonotoneTracker track;
        CVector phi = shared.fixed ? *shared.fixed : random_state(rng, D * D, cfg.field);
        CMatrix phi_mat = schmidt_matrix(phi, D, D);
        std::vector<std::vector<CMatrix>> alice;  // [x][c]
        // Random projective start: each vector of a Haar basis goes to a random outcome.
        std::uniform_int_distribution<int> outcome(0, d - 1);
        for (int x = 0; x < nx; ++x) {
            CMatrix u = random_unitary(rng, D, cfg.field);
            std::vector<CMatrix> effects(d, CMatrix::Zero(D, D));
            for (int k = 0; k < D; ++k) effects[outcome(rng)] += projector(u.col(k));
            alice.push_back(std::move(effects));
        }
        std::vector<std::vector<std::vector<CMatrix>>> bob(ny, std::vector<std::vector<CMatrix>>(d));  // [y][c][b]
        double previous = -std::numeric_limits<double>::infinity();

        auto bob_weights = [&](int x, int c) {
            CMatrix out = CMatrix::Zero(D, D);
            for (int y = 0; y < ny; ++y) {
                for (int b = 0; b < nb; ++b) {
                    double coef = w(x, y, b);
                    if (coef != 0.0) out += coef * bob[y][c][b];
                }
            }
            return out;
        };

        for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
            // Bob, per (y, c).
            std::vector<std::vector<CMatrix>> steered(nx, std::vector<CMatrix>(d));
            for (int x = 0; x < nx; ++x) {
                for (int c = 0; c < d; ++c) steered[x][c] = steer_to_bob(phi_mat, alice[x][c]);
            }
            double value = 0.0;
            for (int y = 0; y < ny; ++y) {
                for (int c = 0; c < d; ++c) {
                    std::vector<CMatrix> rewards(nb, CMatrix::Zero(D, D));
                    for (int x = 0; x < nx; ++x) {
                        for (int b = 0; b < nb; ++b) {
                            double coef = w(x, y, b);
                            if (coef != 0.0) rewards[b] += coef * steered[x][c];
                        }
                    }
                    PovmStep step = povm_step(rewards, cfg.field, cfg.inner_povm_iterations,
                                              bob[y][c].empty() ? nullptr : &bob[y][c]);
                    bob[y][c] = std::move(step.effects);
                    value += step.value;
                    ++r.cert_total;
                    if (step.certified) ++r.cert_ok;
                }
            }
            track.record(value);

            // Alice, per x.
            value = 0.0;
            for (int x = 0; x < nx; ++x) {
                std::vector<CMatrix> rewards;
                for (int c = 0; c < d; ++c) rewards.push_back(hermitian_part(steer_to_alice(phi_mat, bob_weights(x, c))));
                PovmStep step = povm_step(rewards, cfg.field, cfg.inner_povm_iterations, &alice[x]);
                alice[x] = std::move(step.effects);
                value += step.value;
                ++r.cert_total;
                if (step.certified) ++r.cert_ok;
            }
            track.record(value);

            if (!shared.fixed) {
                CMatrix k = CMatrix::Zero(D * D, D * D);
                for (int x = 0; x < nx; ++x) {
                    for (int c = 0; c < d; ++c) k += kron(alice[x][c], bob_weights(x, c));
                }
                auto [lambda, top] = top_eigenvector(k, cfg.field);
                if (lambda >= value) {
                    phi = top;
                    phi_mat = schmidt_matrix(phi, D, D);
                    value = lambda;
                }
                track.record(value);
            }
            r.trace.push_back(value);
            r.sweeps = sweep + 1;
            if (detail::converged(previous, value, cfg.tolerance)) break;
            previous = value;
        }
        EAClassical st;
        st.D = D;
        st.shared = phi;
        for (int x = 0; x < nx; ++x) st.alice.emplace_back(alice[x]);
        for (int y = 0; y < ny; ++y) st.bob.push_back(detail::to_povms(bob[y]));
        r.strategy = std::move(st);
        r.monotone = track.ok();
        return r;
    });
}

}  // namespace eapm

#endif
