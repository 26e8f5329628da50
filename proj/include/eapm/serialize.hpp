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

// JSON schema for matrices, behaviors, witnesses, strategies and reports.
//
//   complex   [re, im]
//   vector    [complex, ...]
//   matrix    {"rows": r, "cols": c, "data": [complex, ...]}  (row-major)
//   povm      [matrix, ...]
//   strategy  {"type": <tag>, ...}  with the fields of the strategy structs

#ifndef EAPM_SERIALIZE_HPP
#define EAPM_SERIALIZE_HPP

#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "eapm/optimize.hpp"
#include "eapm/quantum.hpp"
#include "eapm/witnesses.hpp"

namespace eapm {

using json = nlohmann::json;

inline json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

inline cplx complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw ContractViolation("json: complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

inline json matrix_to_json(const CMatrix& m) {
    json data = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(complex_to_json(m(i, j)));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", data}};
}

inline CMatrix matrix_from_json(const json& j) {
    const auto rows = j.at("rows").get<Eigen::Index>();
    const auto cols = j.at("cols").get<Eigen::Index>();
    const json& data = j.at("data");
    if (static_cast<Eigen::Index>(data.size()) != rows * cols) {
        throw DimensionMismatch("json: matrix data does not match rows * cols");
    }
    CMatrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(data[i * cols + k]);
    }
    return m;
}

inline json vector_to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v[i]));
    return out;
}

inline CVector vector_from_json(const json& j) {
    if (!j.is_array()) throw ContractViolation("json: vectors are arrays of complex numbers");
    CVector v(static_cast<Eigen::Index>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
    return v;
}

inline json povm_to_json(const Povm& p) {
    json out = json::array();
    for (const auto& e : p.effects()) out.push_back(matrix_to_json(e));
    return out;
}

inline Povm povm_from_json(const json& j) {
    std::vector<CMatrix> effects;
    for (const auto& e : j) effects.push_back(matrix_from_json(e));
    return Povm(std::move(effects));
}

inline const char* field_name(Field f) { return f == Field::Real ? "real" : "complex"; }

inline json scenario_to_json(const Scenario& s) {
    return {{"nX", s.nX},
            {"nY", s.nY},
            {"nB", s.nB},
            {"d", s.d},
            {"message", s.message == MessageKind::Classical ? "classical" : "quantum"},
            {"D", s.D},
            {"field", field_name(s.field)}};
}

inline Scenario scenario_from_json(const json& j) {
    Scenario s;
    s.nX = j.at("nX").get<int>();
    s.nY = j.at("nY").get<int>();
    s.nB = j.at("nB").get<int>();
    s.d = j.value("d", 2);
    s.message = j.value("message", std::string("quantum")) == "classical" ? MessageKind::Classical : MessageKind::Quantum;
    s.D = j.value("D", 1);
    s.field = j.value("field", std::string("complex")) == "real" ? Field::Real : Field::Complex;
    return s;
}

/// Table nested as p[x][y][b].
inline json behavior_to_json(const Behavior& p) {
    const Scenario& s = p.scenario();
    json table = json::array();
    for (int x = 0; x < s.nX; ++x) {
        json rows = json::array();
        for (int y = 0; y < s.nY; ++y) {
            json probs = json::array();
            for (int b = 0; b < s.nB; ++b) probs.push_back(p(x, y, b));
            rows.push_back(probs);
        }
        table.push_back(rows);
    }
    return {{"scenario", scenario_to_json(s)}, {"table", table}};
}

inline Behavior behavior_from_json(const json& j) {
    Scenario s = scenario_from_json(j.at("scenario"));
    Behavior p = Behavior::zeros(s);
    const json& t = j.at("table");
    for (int x = 0; x < s.nX; ++x) {
        for (int y = 0; y < s.nY; ++y) {
            for (int b = 0; b < s.nB; ++b) p(x, y, b) = t.at(x).at(y).at(b).get<double>();
        }
    }
    return p;
}

inline json witness_to_json(const Witness& w) {
    json c = json::array();
    for (int x = 0; x < w.n_x(); ++x) {
        json rows = json::array();
        for (int y = 0; y < w.n_y(); ++y) {
            json coef = json::array();
            for (int b = 0; b < w.n_b(); ++b) coef.push_back(w(x, y, b));
            rows.push_back(coef);
        }
        c.push_back(rows);
    }
    return {{"name", w.name()}, {"parameters", w.parameters()}, {"nX", w.n_x()}, {"nY", w.n_y()}, {"nB", w.n_b()},
            {"coefficients", c}};
}

inline Witness witness_from_json(const json& j) {
    Witness w(j.at("name").get<std::string>(), j.at("nX").get<int>(), j.at("nY").get<int>(), j.at("nB").get<int>(),
              j.value("parameters", std::map<std::string, double>{}));
    const json& c = j.at("coefficients");
    for (int x = 0; x < w.n_x(); ++x) {
        for (int y = 0; y < w.n_y(); ++y) {
            for (int b = 0; b < w.n_b(); ++b) w(x, y, b) = c.at(x).at(y).at(b).get<double>();
        }
    }
    return w;
}

inline json strategy_to_json(const Strategy& strategy) {
    json out{{"type", strategy_tag(strategy)}};
    auto povms = [](const std::vector<Povm>& ps) {
        json a = json::array();
        for (const auto& p : ps) a.push_back(povm_to_json(p));
        return a;
    };
    auto matrices = [](const std::vector<CMatrix>& ms) {
        json a = json::array();
        for (const auto& m : ms) a.push_back(matrix_to_json(m));
        return a;
    };
    std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, ClassicalDet>) {
                out["d"] = st.d;
                out["nB"] = st.nB;
                out["enc"] = st.enc;
                out["dec"] = st.dec;
            } else if constexpr (std::is_same_v<T, BareQuantum>) {
                json states = json::array();
                for (const auto& rho : st.states) states.push_back(matrix_to_json(rho.matrix()));
                out["states"] = states;
                out["povms"] = povms(st.povms);
            } else if constexpr (std::is_same_v<T, EAClassical>) {
                out["D"] = st.D;
                out["shared"] = vector_to_json(st.shared);
                out["alice"] = povms(st.alice);
                json bob = json::array();
                for (const auto& row : st.bob) bob.push_back(povms(row));
                out["bob"] = bob;
            } else if constexpr (std::is_same_v<T, EAQuantumUnitary>) {
                out["d"] = st.d;
                out["D"] = st.D;
                out["shared"] = vector_to_json(st.shared);
                out["unitaries"] = matrices(st.unitaries);
                out["bob"] = povms(st.bob);
            } else {
                out["d"] = st.d;
                out["D"] = st.D;
                out["E"] = st.E;
                out["shared"] = vector_to_json(st.shared);
                out["isometries"] = matrices(st.isometries);
                out["bob"] = povms(st.bob);
            }
        },
        strategy);
    return out;
}

inline Strategy strategy_from_json(const json& j) {
    const std::string type = j.at("type").get<std::string>();
    auto povms = [](const json& a) {
        std::vector<Povm> out;
        for (const auto& p : a) out.push_back(povm_from_json(p));
        return out;
    };
    auto matrices = [](const json& a) {
        std::vector<CMatrix> out;
        for (const auto& m : a) out.push_back(matrix_from_json(m));
        return out;
    };
    if (type == "ClassicalDet") {
        ClassicalDet st;
        st.d = j.at("d").get<int>();
        st.nB = j.at("nB").get<int>();
        st.enc = j.at("enc").get<std::vector<int>>();
        st.dec = j.at("dec").get<std::vector<std::vector<int>>>();
        return st;
    }
    if (type == "BareQuantum") {
        BareQuantum st;
        for (const auto& m : j.at("states")) st.states.emplace_back(matrix_from_json(m));
        st.povms = povms(j.at("povms"));
        return st;
    }
    if (type == "EAClassical") {
        EAClassical st;
        st.D = j.at("D").get<int>();
        st.shared = vector_from_json(j.at("shared"));
        st.alice = povms(j.at("alice"));
        for (const auto& row : j.at("bob")) st.bob.push_back(povms(row));
        return st;
    }
    if (type == "EAQuantumUnitary") {
        EAQuantumUnitary st;
        st.d = j.at("d").get<int>();
        st.D = j.at("D").get<int>();
        st.shared = vector_from_json(j.at("shared"));
        st.unitaries = matrices(j.at("unitaries"));
        st.bob = povms(j.at("bob"));
        return st;
    }
    if (type == "EAQuantumIsometry") {
        EAQuantumIsometry st;
        st.d = j.at("d").get<int>();
        st.D = j.at("D").get<int>();
        st.E = j.at("E").get<int>();
        st.shared = vector_from_json(j.at("shared"));
        st.isometries = matrices(j.at("isometries"));
        st.bob = povms(j.at("bob"));
        return st;
    }
    throw ContractViolation("json: unknown strategy type " + type);
}

inline json report_to_json(const SeesawReport& r) {
    return {{"best_value", r.best_value},
            {"best_restart", r.best_restart},
            {"per_restart_values", r.per_restart_values},
            {"sweeps_used", r.sweeps_used},
            {"certificates", {{"ok", r.certificates_ok}, {"total", r.certificates_total}}},
            {"monotone", r.monotone},
            {"best_trace", r.best_trace},
            {"best_strategy", strategy_to_json(r.best_strategy)}};
}

/// Fixed-precision decimal for CSV cells (identical input gives identical
/// bytes).
inline std::string format_number(double v, int digits = 10) {
    std::ostringstream s;
    s << std::setprecision(digits) << std::fixed << v;
    std::string out = s.str();
    // values that round to zero print without a sign
    if (out.front() == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
    return out;
}

/// Rows "x,y,E" of the correlator table.
inline std::string correlators_csv(const Behavior& p) {
    std::ostringstream s;
    s << "x,y,E\n";
    auto e = correlators(p);
    for (size_t x = 0; x < e.size(); ++x) {
        for (size_t y = 0; y < e[x].size(); ++y) s << x << ',' << y << ',' << format_number(e[x][y]) << '\n';
    }
    return s.str();
}

}  // namespace eapm

#endif
