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

// Reproduction commands behind the command-line tool. Each returns a table
// (fixed, versioned columns) plus a JSON detail block holding the strategies
// the values were computed from.

#ifndef EAPM_COMMANDS_HPP
#define EAPM_COMMANDS_HPP

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eapm/gram.hpp"
#include "eapm/optimize.hpp"
#include "eapm/random.hpp"
#include "eapm/serialize.hpp"
#include "eapm/strategies.hpp"
#include "eapm/witnesses.hpp"

namespace eapm {

inline constexpr int kCsvSchemaVersion = 1;

struct RunConfig {
    std::string command;
    std::string mode;
    std::string witness = "gallego_w5";  // or a witness JSON file
    std::vector<double> betas{0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0};
    std::optional<double> gamma;
    std::vector<double> theta_grid;
    std::vector<std::string> resources;
    std::vector<int> entanglement{1, 2, 4};
    int d = 4;
    Field field = Field::Complex;
    SeesawConfig seesaw;
    std::string states;
    std::string format = "csv";

    void validate() const {
        seesaw.validate();
        if (betas.empty()) throw ContractViolation("config: beta grid is empty");
        for (double b : betas) {
            if (b < 0) throw ContractViolation("config: beta must be nonnegative");
        }
        if (gamma && *gamma < 0) throw ContractViolation("config: gamma must be nonnegative");
        for (double t : theta_grid) {
            if (t < 0 || t > std::numbers::pi / 2) throw ContractViolation("config: theta must lie in [0, pi/2]");
        }
        if (format != "csv" && format != "json") throw ContractViolation("config: format must be csv or json");
    }
};

struct CommandResult {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json detail = json::object();
};

inline std::string to_csv(const CommandResult& r) {
    std::ostringstream s;
    s << "# eapm csv schema " << kCsvSchemaVersion << '\n';
    for (size_t i = 0; i < r.columns.size(); ++i) s << (i ? "," : "") << r.columns[i];
    s << '\n';
    for (const auto& row : r.rows) {
        for (size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << row[i];
        s << '\n';
    }
    return s.str();
}

inline json to_json(const CommandResult& r) {
    json rows = json::array();
    for (const auto& row : r.rows) {
        json obj = json::object();
        for (size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = row[i];
        rows.push_back(obj);
    }
    return {{"schema_version", kCsvSchemaVersion}, {"columns", r.columns}, {"rows", rows}, {"detail", r.detail}};
}

namespace detail {

inline std::string fmt(double v) { return format_number(v); }

inline std::string yes_no(bool v) { return v ? "true" : "false"; }

inline std::vector<std::string> report_cells(const SeesawReport& r) {
    return {fmt(r.best_value), std::to_string(r.per_restart_values.size()), std::to_string(r.certificates_ok),
            std::to_string(r.certificates_total), yes_no(r.monotone)};
}

inline const std::vector<std::string> kReportColumns{"value", "restarts", "certified", "certificates_total",
                                                     "monotone"};

inline std::vector<double> default_theta_grid() {
    std::vector<double> out;
    for (int i = 0; i <= 8; ++i) out.push_back(std::numbers::pi / 4 * i / 8);
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Witness load_witness(const std::string& source) {
    if (source == "gallego_w5") return gallego_w5();
    std::ifstream in(source);
    if (!in) throw ContractViolation("unknown witness " + source + " (gallego_w5 or a JSON file)");
    try {
        json j;
        in >> j;
        return witness_from_json(j);
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("malformed witness file: ") + e.what());
    }
}

/// Witness values for classical (C) and quantum (Q) messages of dimension
/// 2, 3, 4 and entanglement D. D = 1 classical rows are exact; the rest are
/// see-saw lower bounds.
inline CommandResult cmd_table1(const RunConfig& cfg) {
    cfg.validate();
    const Witness w = load_witness(cfg.witness);
    std::vector<std::string> resources = cfg.resources;
    if (resources.empty()) resources = {"C2", "Q2", "C3", "Q3", "C4", "Q4"};
    CommandResult out;
    out.columns = {"resource", "D", "method"};
    out.columns.insert(out.columns.end(), detail::kReportColumns.begin(), detail::kReportColumns.end());
    out.detail["strategies"] = json::array();
    for (const auto& res : resources) {
        if (res.size() != 2 || (res[0] != 'C' && res[0] != 'Q') || res[1] < '2' || res[1] > '4') {
            throw ContractViolation("table1: unknown resource " + res + " (expected C2..C4 or Q2..Q4)");
        }
    }
    for (int D : cfg.entanglement) {
        if (D != 1 && D != 2 && D != 4) throw ContractViolation("table1: D must be 1, 2 or 4");
    }
    for (const auto& res : resources) {
        const bool classical = res[0] == 'C';
        const int d = res[1] - '0';
        for (int D : cfg.entanglement) {
            std::vector<std::string> row{res, std::to_string(D)};
            Strategy strategy;
            if (classical && D == 1) {
                auto opt = classical_exact(w, d);
                strategy = opt.strategy;
                row.insert(row.end(), {"exact", detail::fmt(opt.value), "0", "0", "0", "true"});
            } else {
                SeesawReport r;
                if (D == 1) {
                    r = seesaw_bare(w, d, cfg.seesaw);
                } else if (classical) {
                    r = seesaw_ea_classical(w, d, D, SharedStatePolicy::free_state(), cfg.seesaw);
                } else {
                    r = seesaw_ea_quantum(w, d, D, SharedStatePolicy::free_state(), cfg.seesaw);
                }
                strategy = r.best_strategy;
                row.push_back("seesaw");
                auto cells = detail::report_cells(r);
                row.insert(row.end(), cells.begin(), cells.end());
            }
            out.rows.push_back(row);
            out.detail["strategies"].push_back(
                {{"resource", res}, {"D", D}, {"strategy", strategy_to_json(strategy)}});
        }
    }
    out.detail["witness"] = witness_to_json(w);
    return out;
}

/// Flagged random access code over a beta grid (gamma = 4 beta unless set).
inline CommandResult cmd_frac(const RunConfig& cfg) {
    cfg.validate();
    CommandResult out;
    out.columns = {"beta",
                   "gamma",
                   "classical_1bit_exact",
                   "classical_2bit_exact",
                   "qubit_strategy",
                   "qubit_seesaw",
                   "ququart_small_beta_strategy",
                   "ququart_large_beta_strategy",
                   "ququart_seesaw",
                   "ea2_gdc_seesaw",
                   "ea4_strategy",
                   "gap_ququart_minus_ea2",
                   "gap_ea4_minus_ququart_large"};
    out.detail["points"] = json::array();
    for (double beta : cfg.betas) {
        const double gamma = cfg.gamma.value_or(4.0 * beta);
        const Witness w = frac_witness(beta, gamma);
        auto value = [&](const Strategy& s) { return evaluate(w, behavior_of(s)); };
        const double c1 = classical_exact(w, 2).value;
        const double c2 = classical_exact(w, 4).value;
        const BareQuantum qubit = frac_qubit_strategy(beta);
        const SeesawReport qubit_ss = seesaw_bare(w, 2, cfg.seesaw);
        const BareQuantum small = frac_ququart_small_beta(beta);
        const BareQuantum large = frac_ququart_large_beta(beta);
        const SeesawReport ququart_ss = seesaw_bare(w, 4, cfg.seesaw);
        const SeesawReport gdc_ss = seesaw_gdc(w, 2, cfg.seesaw);
        const EAQuantumIsometry ea4 = frac_ea4_strategy(beta);
        const double ea4_value = value(ea4);
        const double large_value = value(large);
        out.rows.push_back({detail::fmt(beta), detail::fmt(gamma), detail::fmt(c1), detail::fmt(c2),
                            detail::fmt(value(qubit)), detail::fmt(qubit_ss.best_value), detail::fmt(value(small)),
                            detail::fmt(large_value), detail::fmt(ququart_ss.best_value),
                            detail::fmt(gdc_ss.best_value), detail::fmt(ea4_value),
                            detail::fmt(ququart_ss.best_value - gdc_ss.best_value),
                            detail::fmt(ea4_value - large_value)});
        out.detail["points"].push_back({{"beta", beta},
                                        {"gamma", gamma},
                                        {"qubit_strategy", strategy_to_json(qubit)},
                                        {"ququart_seesaw", strategy_to_json(ququart_ss.best_strategy)},
                                        {"ea2_gdc_seesaw", strategy_to_json(gdc_ss.best_strategy)},
                                        {"ea4_strategy", strategy_to_json(ea4)}});
    }
    return out;
}

/// Pairwise witness over sixteen preparations.
inline CommandResult cmd_sic(const RunConfig& cfg) {
    cfg.validate();
    const std::string mode = cfg.mode.empty() ? "complex-d4" : cfg.mode;
    const Witness w = sic_witness(16);
    CommandResult out;
    out.columns = {"mode", "theta", "target"};
    out.columns.insert(out.columns.end(), detail::kReportColumns.begin(), detail::kReportColumns.end());
    out.columns.push_back("nondecreasing");
    out.detail["strategies"] = json::array();
    auto add = [&](const std::string& m, const std::string& theta, double target, const SeesawReport& r, bool mono) {
        std::vector<std::string> row{m, theta, std::isnan(target) ? "" : detail::fmt(target)};
        auto cells = detail::report_cells(r);
        row.insert(row.end(), cells.begin(), cells.end());
        row.push_back(detail::yes_no(mono));
        out.rows.push_back(row);
        out.detail["strategies"].push_back({{"mode", m}, {"theta", theta}, {"strategy", strategy_to_json(r.best_strategy)}});
    };
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (mode == "complex-d4" || mode == "real-d4") {
        SeesawConfig sc = cfg.seesaw;
        sc.field = mode == "real-d4" ? Field::Real : Field::Complex;
        add(mode, "", mode == "real-d4" ? 106.75 : 48.0 * std::sqrt(5.0), seesaw_bare(w, 4, sc), true);
    } else if (mode == "theta-sweep") {
        std::vector<double> grid = cfg.theta_grid.empty() ? detail::default_theta_grid() : cfg.theta_grid;
        std::sort(grid.begin(), grid.end());
        add("bare-qubit", "", nan, seesaw_bare(w, 2, cfg.seesaw), true);
        double previous = -std::numeric_limits<double>::infinity();
        bool mono = true;
        for (double theta : grid) {
            auto r = seesaw_ea_quantum(w, 2, 2, SharedStatePolicy::fixed_state(theta_state(theta)), cfg.seesaw);
            mono = mono && r.best_value >= previous - 1e-3;
            previous = r.best_value;
            add("theta-sweep", detail::fmt(theta), nan, r, mono);
        }
    } else {
        throw ContractViolation("sic: mode must be complex-d4, real-d4 or theta-sweep");
    }
    return out;
}

/// Nine-preparation qutrit witness.
inline CommandResult cmd_qutrit(const RunConfig& cfg) {
    cfg.validate();
    const std::string mode = cfg.mode.empty() ? "verify" : cfg.mode;
    const Witness w = qutrit_witness();
    CommandResult out;
    out.columns = {"mode", "value", "target", "max_forbidden_probability", "restarts", "status"};
    if (mode == "verify") {
        BareQuantum s = qutrit_optimal_strategy();
        Behavior p = behavior_of(s);
        double worst = 0.0;
        for (int x = 0; x < 9; ++x) {
            for (int y = 0; y < 4; ++y) worst = std::max(worst, p(x, y, qutrit_forbidden_outcome(x, y)));
        }
        const double v = evaluate(w, p);
        const bool pass = std::abs(v - 36.0) <= 1e-9 && worst <= 1e-12;
        out.rows.push_back({mode, detail::fmt(v), detail::fmt(36.0), format_number(worst, 17), "0", pass ? "PASS" : "FAIL"});
        out.detail["strategy"] = strategy_to_json(s);
    } else if (mode == "real-seesaw" || mode == "ea-qubit-D4") {
        SeesawReport r;
        bool pass = false;
        double target = 0.0;
        if (mode == "real-seesaw") {
            SeesawConfig sc = cfg.seesaw;
            sc.field = Field::Real;
            r = seesaw_bare(w, 4, sc);
            target = 35.42;
            pass = r.best_value >= 35.3 && r.best_value <= 35.6;
        } else {
            r = seesaw_ea_quantum(w, 2, 4, SharedStatePolicy::free_state(), cfg.seesaw);
            target = 36.0;
            pass = r.best_value >= 36.0 - 1e-3;
        }
        out.rows.push_back({mode, detail::fmt(r.best_value), detail::fmt(target), "",
                            std::to_string(r.per_restart_values.size()), pass ? "PASS" : "FAIL"});
        out.detail["report"] = report_to_json(r);
    } else {
        throw ContractViolation("qutrit: mode must be verify, real-seesaw or ea-qubit-D4");
    }
    return out;
}

/// Built-in ensembles for cmd_gram: dense-coding, sic-d4, random-gdc.
inline std::vector<CVector> builtin_states(const std::string& name, std::uint64_t seed) {
    if (name == "dense-coding") {
        return gdc_states({identity(2), pauli_z(), pauli_x(), pauli_z() * pauli_x()});
    }
    if (name == "sic-d4") return sic_d4(seed);
    if (name == "random-gdc") {
        Rng rng(seed);
        std::vector<CMatrix> us;
        for (int i = 0; i < 6; ++i) us.push_back(random_unitary(rng, 2));
        return gdc_states(us);
    }
    throw ContractViolation("gram: unknown built-in ensemble " + name);
}

/// States from a JSON file {"states": [vector, ...]} or, for ensembles
/// prepared on |phi+>, {"unitaries": [matrix, ...]}; "builtin:<name>"
/// selects a built-in ensemble.
inline std::vector<CVector> load_states(const std::string& source, std::uint64_t seed) {
    if (source.rfind("builtin:", 0) == 0) return builtin_states(source.substr(8), seed);
    std::ifstream in(source);
    if (!in) throw ContractViolation("gram: cannot open states file " + source);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("gram: malformed states file: ") + e.what());
    }
    try {
        if (j.contains("states")) {
            std::vector<CVector> out;
            for (const auto& v : j.at("states")) out.push_back(vector_from_json(v));
            return out;
        }
        if (j.contains("unitaries")) {
            std::vector<CMatrix> us;
            for (const auto& m : j.at("unitaries")) us.push_back(matrix_from_json(m));
            return gdc_states(us);
        }
    } catch (const json::exception& e) {
        throw ContractViolation(std::string("gram: malformed states file: ") + e.what());
    }
    throw ContractViolation("gram: states file needs a \"states\" or \"unitaries\" array");
}

inline CommandResult cmd_gram(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.states.empty()) throw ContractViolation("gram: --states is required");
    std::vector<CVector> states = load_states(cfg.states, cfg.seesaw.seed);
    if (states.empty()) throw ContractViolation("gram: no states given");
    for (auto& v : states) {
        if (v.norm() == 0.0) throw ContractViolation("gram: zero state vector");
        v /= v.norm();
    }
    CMatrix g = gram(states);
    Dephasing dp = dephase_to_real(g);
    CommandResult out;
    out.columns = {"quantity", "value"};
    out.rows.push_back({"states", std::to_string(states.size())});
    out.rows.push_back({"dimension", std::to_string(states[0].size())});
    out.rows.push_back({"embeddable", detail::yes_no(dp.embeddable)});
    out.detail["gram"] = matrix_to_json(g);
    if (!dp.embeddable) {
        std::string cycle;
        for (size_t i = 0; i < dp.cycle.size(); ++i) cycle += (i ? "-" : "") + std::to_string(dp.cycle[i]);
        out.rows.push_back({"violating_cycle", cycle});
        out.detail["violating_cycle"] = dp.cycle;
        return out;
    }
    out.detail["phases"] = std::vector<double>(dp.phases.data(), dp.phases.data() + dp.phases.size());
    try {
        GramRoundtrip rt = gram_roundtrip(states);
        out.rows.push_back({"factorizable", "true"});
        out.rows.push_back({"roundtrip_residual", format_number(rt.residual, 17)});
        json vectors = json::array();
        for (const auto& z : rt.vectors) vectors.push_back(std::vector<double>(z.data(), z.data() + z.size()));
        json unitaries = json::array();
        for (const auto& u : rt.unitaries) unitaries.push_back(matrix_to_json(u));
        out.detail["vectors"] = vectors;
        out.detail["unitaries"] = unitaries;
    } catch (const RankExcess& e) {
        out.rows.push_back({"factorizable", "false"});
        out.detail["spectrum"] = std::vector<double>(e.spectrum.data(), e.spectrum.data() + e.spectrum.size());
    }
    return out;
}

}  // namespace eapm

#endif
