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

#ifndef EAPM_WITNESSES_HPP
#define EAPM_WITNESSES_HPP

#include <array>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "eapm/quantum.hpp"

namespace eapm {

/// Linear functional sum_{x,y,b} c[x][y][b] p(b|x,y) on behaviors.
class Witness {
  public:
    Witness() = default;
    Witness(std::string name, int n_x, int n_y, int n_b, std::map<std::string, double> parameters = {})
        : name_(std::move(name)),
          n_x_(n_x),
          n_y_(n_y),
          n_b_(n_b),
          parameters_(std::move(parameters)),
          coefficients_(static_cast<size_t>(n_x * n_y * n_b), 0.0) {
        if (n_x < 1 || n_y < 1 || n_b < 1) {
            throw ContractViolation("Witness: all counts must be >= 1");
        }
    }

    /// Binary-outcome witness sum_{x,y} c[x][y] E_xy with E = p(0) - p(1).
    static Witness from_correlators(std::string name, const std::vector<std::vector<double>>& c,
                                    std::map<std::string, double> parameters = {}) {
        if (c.empty() || c[0].empty()) {
            throw ContractViolation("Witness: empty correlator matrix");
        }
        Witness w(std::move(name), static_cast<int>(c.size()), static_cast<int>(c[0].size()), 2, std::move(parameters));
        for (int x = 0; x < w.n_x_; ++x) {
            if (static_cast<int>(c[x].size()) != w.n_y_) {
                throw DimensionMismatch("Witness: ragged correlator matrix");
            }
            for (int y = 0; y < w.n_y_; ++y) {
                w(x, y, 0) = c[x][y];
                w(x, y, 1) = -c[x][y];
            }
        }
        return w;
    }

    const std::string& name() const { return name_; }
    int n_x() const { return n_x_; }
    int n_y() const { return n_y_; }
    int n_b() const { return n_b_; }
    const std::map<std::string, double>& parameters() const { return parameters_; }
    const std::vector<double>& coefficients() const { return coefficients_; }

    double operator()(int x, int y, int b) const { return coefficients_[index(x, y, b)]; }
    double& operator()(int x, int y, int b) { return coefficients_[index(x, y, b)]; }

    /// Shape-only scenario; resources are attached by the caller.
    Scenario scenario() const {
        Scenario s;
        s.nX = n_x_;
        s.nY = n_y_;
        s.nB = n_b_;
        return s;
    }

    /// Value obtained by maximizing every (x, y) term independently.
    double algebraic_max() const {
        double total = 0.0;
        for (int x = 0; x < n_x_; ++x) {
            for (int y = 0; y < n_y_; ++y) {
                double best = (*this)(x, y, 0);
                for (int b = 1; b < n_b_; ++b) best = std::max(best, (*this)(x, y, b));
                total += best;
            }
        }
        return total;
    }

  private:
    size_t index(int x, int y, int b) const { return static_cast<size_t>((x * n_y_ + y) * n_b_ + b); }

    std::string name_;
    int n_x_ = 1;
    int n_y_ = 1;
    int n_b_ = 2;
    std::map<std::string, double> parameters_;
    std::vector<double> coefficients_;
};

inline double evaluate(const Witness& w, const Behavior& p) {
    if (!w.scenario().same_shape(p.scenario())) {
        throw DimensionMismatch("evaluate: witness and behavior scenarios differ");
    }
    double total = 0.0;
    const auto& c = w.coefficients();
    const auto& t = p.table();
    for (size_t i = 0; i < c.size(); ++i) {
        total += c[i] * t[i];
    }
    return total;
}

/// E[x][y] = p(0|x,y) - p(1|x,y).
inline std::vector<std::vector<double>> correlators(const Behavior& p) {
    const auto& s = p.scenario();
    if (s.nB != 2) {
        throw ContractViolation("correlators: behavior must have binary outcomes");
    }
    std::vector<std::vector<double>> e(s.nX, std::vector<double>(s.nY));
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            e[x][y] = p(x, y, 0) - p(x, y, 1);
        }
    }
    return e;
}

/// Five-preparation, four-setting dimension witness.
inline Witness gallego_w5() {
    return Witness::from_correlators("gallego_w5", {
                                                       {1, 1, 1, 1},
                                                       {1, 1, 1, -1},
                                                       {1, 1, -1, 0},
                                                       {1, -1, 0, 0},
                                                       {-1, 0, 0, 0},
                                                   });
}

/// Nine qutrit preparations x = 3 x0 + x1, four settings y = 2 y0 + y1,
/// three outcomes; c = -1 on the single forbidden outcome
/// b = x_{y1} - y0 (-1)^{y1} x_{1-y1} mod 3 and +1 elsewhere.
inline int qutrit_forbidden_outcome(int x, int y) {
    const std::array<int, 2> digits{x / 3, x % 3};
    const int y0 = y / 2;
    const int y1 = y % 2;
    const int sign = y1 == 0 ? 1 : -1;
    int b = digits[y1] - y0 * sign * digits[1 - y1];
    return ((b % 3) + 3) % 3;
}

inline Witness qutrit_witness() {
    Witness w("qutrit", 9, 4, 3);
    for (int x = 0; x < 9; ++x) {
        for (int y = 0; y < 4; ++y) {
            const int forbidden = qutrit_forbidden_outcome(x, y);
            for (int b = 0; b < 3; ++b) {
                w(x, y, b) = b == forbidden ? -1.0 : 1.0;
            }
        }
    }
    return w;
}

/// Flagged random access code. Outcome 0 is the "+1" outcome.
inline Witness frac_witness(double beta, double gamma) {
    if (beta < 0 || gamma < 0) {
        throw ContractViolation("frac_witness: beta and gamma must be nonnegative");
    }
    return Witness::from_correlators("frac",
                                     {
                                         {1, 1, beta},
                                         {1, -1, beta},
                                         {-1, 1, beta},
                                         {-1, -1, beta},
                                         {0, 0, -gamma},
                                     },
                                     {{"beta", beta}, {"gamma", gamma}});
}

/// Equal-weight regime gamma = 4 beta.
inline Witness frac_witness(double beta) {
    return frac_witness(beta, 4.0 * beta);
}

// ---------------------------------------------------------------------------
// Pair scenarios: Bob's setting is an unordered pair (x, x'), x < x'.

inline std::vector<std::pair<int, int>> unordered_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            out.emplace_back(i, j);
        }
    }
    return out;
}

/// sum_{x<x'} p(0|x,(x,x')) - p(0|x',(x,x')) over n preparations.
inline Witness sic_witness(int n_states) {
    if (n_states < 2) {
        throw ContractViolation("sic_witness: need at least two preparations");
    }
    auto pairs = unordered_pairs(n_states);
    Witness w("sic", n_states, static_cast<int>(pairs.size()), 2, {{"states", n_states}});
    for (size_t y = 0; y < pairs.size(); ++y) {
        w(pairs[y].first, static_cast<int>(y), 0) = 1.0;
        w(pairs[y].second, static_cast<int>(y), 0) = -1.0;
    }
    return w;
}

/// Pair-witness value with optimal binary measurements on pure states:
/// sum_{x<x'} sqrt(1 - |<psi_x|psi_x'>|^2).
inline double sic_witness_value(const std::vector<CVector>& states, int d) {
    if (static_cast<int>(states.size()) != d * d) {
        throw ContractViolation("sic_witness_value: need d^2 states");
    }
    double total = 0.0;
    for (auto [i, j] : unordered_pairs(static_cast<int>(states.size()))) {
        double overlap = std::norm(states[i].dot(states[j]));
        total += std::sqrt(std::max(0.0, 1.0 - overlap));
    }
    return total;
}

/// Same value for mixed states: each pair contributes the sum of the
/// positive eigenvalues of rho_x - rho_x'.
inline double sic_witness_value_mixed(const std::vector<CMatrix>& states) {
    double total = 0.0;
    for (auto [i, j] : unordered_pairs(static_cast<int>(states.size()))) {
        CMatrix diff = states[i] - states[j];
        total += 0.5 * (trace_norm(diff) + diff.trace().real());
    }
    return total;
}

/// Mean optimal identification probability when Bob is promised that the
/// preparation is one of a pair and measures the Helstrom measurement.
inline double pair_discrimination_score(const std::vector<CVector>& states) {
    if (states.size() < 2) {
        throw ContractViolation("pair_discrimination_score: need at least two states");
    }
    double total = 0.0;
    auto pairs = unordered_pairs(static_cast<int>(states.size()));
    for (auto [i, j] : pairs) {
        double overlap = std::norm(states[i].dot(states[j]) / (states[i].norm() * states[j].norm()));
        total += 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - overlap)));
    }
    return total / static_cast<double>(pairs.size());
}

// ---------------------------------------------------------------------------
// Dihedral symmetry of the flagged RAC.

/// (g.p)(b|x,y) = p(b xor flip[y] | perm[x], tau[y]).
struct FracSymmetry {
    std::array<int, 5> perm{0, 1, 2, 3, 4};
    std::array<int, 3> tau{0, 1, 2};
    std::array<int, 3> flip{0, 0, 0};

    bool operator<(const FracSymmetry& o) const {
        return std::tie(perm, tau, flip) < std::tie(o.perm, o.tau, o.flip);
    }

    /// this after g: (this . (g . p)).
    FracSymmetry after(const FracSymmetry& g) const {
        FracSymmetry out;
        for (int x = 0; x < 5; ++x) out.perm[x] = g.perm[perm[x]];
        for (int y = 0; y < 3; ++y) {
            out.tau[y] = g.tau[tau[y]];
            out.flip[y] = flip[y] ^ g.flip[tau[y]];
        }
        return out;
    }

    Behavior act(const Behavior& p) const {
        const auto& s = p.scenario();
        if (s.nX != 5 || s.nY != 3 || s.nB != 2) {
            throw ContractViolation("FracSymmetry: behavior is not in the flagged RAC scenario");
        }
        Behavior out = Behavior::zeros(s);
        for (int x = 0; x < 5; ++x) {
            for (int y = 0; y < 3; ++y) {
                for (int b = 0; b < 2; ++b) {
                    out(x, y, b) = p(perm[x], tau[y], b ^ flip[y]);
                }
            }
        }
        return out;
    }
};

inline std::array<FracSymmetry, 3> frac_symmetry_generators() {
    FracSymmetry g1;  // (12)(34), E_x2 -> -E_x2
    g1.perm = {1, 0, 3, 2, 4};
    g1.flip = {0, 1, 0};
    FracSymmetry g2;  // (13)(24), E_x1 -> -E_x1
    g2.perm = {2, 3, 0, 1, 4};
    g2.flip = {1, 0, 0};
    FracSymmetry g3;  // (23), E_x1 <-> E_x2
    g3.perm = {0, 2, 1, 3, 4};
    g3.tau = {1, 0, 2};
    return {g1, g2, g3};
}

/// Closure of the generators; the dihedral group of order eight.
inline std::vector<FracSymmetry> frac_symmetry_group() {
    std::set<FracSymmetry> seen{FracSymmetry{}};
    std::vector<FracSymmetry> frontier{FracSymmetry{}};
    auto gens = frac_symmetry_generators();
    while (!frontier.empty()) {
        std::vector<FracSymmetry> next;
        for (const auto& h : frontier) {
            for (const auto& g : gens) {
                FracSymmetry c = h.after(g);
                if (seen.insert(c).second) next.push_back(c);
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

inline bool dihedral_orbit_check(const Witness& w, const Behavior& p) {
    if (w.n_x() != 5 || w.n_y() != 3 || w.n_b() != 2) {
        throw ContractViolation("dihedral_orbit_check: witness is not a flagged RAC witness");
    }
    const double base = evaluate(w, p);
    for (const auto& g : frac_symmetry_group()) {
        if (std::abs(evaluate(w, g.act(p)) - base) > tol::equality) {
            return false;
        }
    }
    return true;
}

}  // namespace eapm

#endif
