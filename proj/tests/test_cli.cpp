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
#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "eapm/eapm.hpp"
#include "helpers.hpp"

namespace eapm {
namespace {

struct CliRun {
    int code = -1;
    std::string out;
};

// Runs the command-line tool with `args`; stderr is discarded.
CliRun run_cli(const std::string& args, const std::string& env = "") {
    const char* exe = std::getenv("EAPM_CLI");
    if (exe == nullptr) return {};
    const std::string cmd = env + " \"" + std::string(exe) + "\" " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t n = 0;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

#define REQUIRE_CLI()                                          \
    if (std::getenv("EAPM_CLI") == nullptr) GTEST_SKIP() << "EAPM_CLI not set"

// Column `name` of the first data row whose first cell is `key`.
std::string cell(const std::string& csv, const std::string& key, const std::string& name) {
    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> header;
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(item);
        if (!s.empty() && s.back() == ',') out.emplace_back();
        return out;
    };
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto row = split(line);
        if (header.empty()) {
            header = row;
            continue;
        }
        if (row[0] != key) continue;
        for (size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name && i < row.size()) return row[i];
        }
    }
    return "";
}

double num(const std::string& s) { return s.empty() ? std::nan("") : std::stod(s); }

// ---------------------------------------------------------------------------
// Serialization

TEST(Serialize, NumberFormat) {
    EXPECT_EQ(format_number(1.5), "1.5000000000");
    EXPECT_EQ(format_number(-2e-12), "0.0000000000");
    EXPECT_EQ(format_number(-0.25, 2), "-0.25");
}

TEST(Serialize, MatrixRoundtripAndLayout) {
    Rng rng(1);
    CMatrix m = gaussian_matrix(rng, 2, 3);
    json j = matrix_to_json(m);
    EXPECT_EQ(j["rows"], 2);
    EXPECT_EQ(j["cols"], 3);
    EXPECT_EQ(j["data"][1][0].get<double>(), m(0, 1).real());
    EXPECT_EQ(j["data"][1][1].get<double>(), m(0, 1).imag());
    EXPECT_LE((matrix_from_json(j) - m).cwiseAbs().maxCoeff(), 0.0);
    j["data"].erase(0);
    EXPECT_THROW(matrix_from_json(j), DimensionMismatch);
    EXPECT_THROW(complex_from_json(json::array({1, 2, 3})), ContractViolation);
}

TEST(Serialize, StrategyRoundtripPreservesBehavior) {
    const Witness w = gallego_w5();
    std::vector<Strategy> strategies{classical_exact(w, 4).strategy, frac_qubit_strategy(1.0),
                                     teleportation_lift(frac_qubit_strategy(0.5)),
                                     dense_coding_lift(classical_exact(w, 4).strategy), frac_ea4_strategy(1.0)};
    for (const auto& s : strategies) {
        const std::string text = strategy_to_json(s).dump();
        Strategy back = strategy_from_json(json::parse(text));
        EXPECT_EQ(back.index(), s.index());
        EXPECT_LE(behavior_of(back).max_abs_difference(behavior_of(s)), 1e-15) << strategy_tag(s);
    }
    EXPECT_THROW(strategy_from_json({{"type", "Nope"}}), ContractViolation);
}

TEST(Serialize, BehaviorAndWitnessRoundtrip) {
    const Witness w = frac_witness(0.5, 1.5);
    Witness w2 = witness_from_json(json::parse(witness_to_json(w).dump()));
    EXPECT_EQ(w2.coefficients(), w.coefficients());
    EXPECT_EQ(w2.parameters(), w.parameters());
    Behavior p = behavior_of(frac_qubit_strategy(0.5));
    Behavior q = behavior_from_json(json::parse(behavior_to_json(p).dump()));
    EXPECT_LE(q.max_abs_difference(p), 0.0);
}

// ---------------------------------------------------------------------------
// Commands in-process

RunConfig quick_config(int restarts) {
    RunConfig cfg;
    cfg.seesaw.restarts = restarts;
    return cfg;
}

TEST(Commands, Table1Subset) {
    RunConfig cfg = quick_config(10);
    cfg.resources = {"C2", "Q3"};
    cfg.entanglement = {1, 2};
    auto r = cmd_table1(cfg);
    ASSERT_EQ(r.rows.size(), 4u);
    EXPECT_EQ(r.rows[0][2], "exact");
    EXPECT_EQ(num(r.rows[0][3]), 8.0);
    EXPECT_GE(num(r.rows[3][3]), 14.0 - 1e-6);
    // Audit: each value re-derives from the strategy stored beside it.
    for (size_t i = 0; i < r.rows.size(); ++i) {
        Strategy s = strategy_from_json(r.detail["strategies"][i]["strategy"]);
        EXPECT_NEAR(evaluate(gallego_w5(), behavior_of(s)), num(r.rows[i][3]), 1e-9);
    }
}

TEST(Commands, Table1EaBitWithFourDimensionalEntanglement) {
    RunConfig cfg = quick_config(100);
    cfg.resources = {"C2"};
    cfg.entanglement = {4};
    auto r = cmd_table1(cfg);
    EXPECT_GE(num(r.rows[0][3]), 9.0343 - 5e-3);
}

TEST(Commands, Table1RejectsUnknownResource) {
    RunConfig cfg = quick_config(1);
    cfg.resources = {"Q7"};
    EXPECT_THROW(cmd_table1(cfg), ContractViolation);
    cfg.resources = {"Q2"};
    cfg.entanglement = {3};
    EXPECT_THROW(cmd_table1(cfg), ContractViolation);
}

TEST(Commands, FracRows) {
    RunConfig cfg = quick_config(10);
    cfg.betas = {0.0, 1.0, 3.0};
    auto r = cmd_frac(cfg);
    const std::string csv = to_csv(r);
    EXPECT_NEAR(num(cell(csv, "0.0000000000", "qubit_strategy")), 4.0 * std::sqrt(2.0), 1e-9);
    EXPECT_NEAR(num(cell(csv, "1.0000000000", "classical_1bit_exact")), 10.0, 1e-9);
    EXPECT_NEAR(num(cell(csv, "3.0000000000", "gap_ea4_minus_ququart_large")),
                2.0 * (1.0 + std::sqrt(2.0) - std::sqrt(5.0)), 1e-9);
    EXPECT_NEAR(num(cell(csv, "3.0000000000", "gap_ququart_minus_ea2")), 0.0, 2e-3);
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const Witness w = frac_witness(cfg.betas[i]);
        Strategy s = strategy_from_json(r.detail["points"][i]["ea4_strategy"]);
        EXPECT_NEAR(evaluate(w, behavior_of(s)), num(cell(csv, r.rows[i][0], "ea4_strategy")), 1e-9);
    }
}

TEST(Commands, SicComplex) {
    RunConfig cfg = quick_config(5);
    cfg.mode = "complex-d4";
    auto r = cmd_sic(cfg);
    EXPECT_NEAR(num(r.rows[0][3]), 48.0 * std::sqrt(5.0), 1e-3);
    cfg.mode = "nope";
    EXPECT_THROW(cmd_sic(cfg), ContractViolation);
}

TEST(Commands, SicThetaEndpoint) {
    RunConfig cfg = quick_config(10);
    cfg.mode = "theta-sweep";
    cfg.theta_grid = {0.0};
    auto r = cmd_sic(cfg);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_EQ(r.rows[0][0], "bare-qubit");
    EXPECT_NEAR(num(r.rows[1][3]), num(r.rows[0][3]), 1e-3);
}

TEST(Commands, QutritVerify) {
    RunConfig cfg = quick_config(1);
    auto r = cmd_qutrit(cfg);
    EXPECT_EQ(r.rows[0][0], "verify");
    EXPECT_EQ(r.rows[0].back(), "PASS");
    EXPECT_LE(num(r.rows[0][3]), 1e-12);
}

TEST(Commands, GramBuiltins) {
    RunConfig cfg = quick_config(1);
    cfg.states = "builtin:dense-coding";
    auto dense = cmd_gram(cfg);
    EXPECT_EQ(cell(to_csv(dense), "embeddable", "value"), "true");
    auto g = matrix_from_json(dense.detail["gram"]);
    EXPECT_LE((g - identity(4)).cwiseAbs().maxCoeff(), 1e-15);
    auto vectors = dense.detail["vectors"].get<std::vector<std::vector<double>>>();
    // degenerate spectrum: any orthonormal rows will do
    for (size_t i = 0; i < 4; ++i) {
        for (size_t k = 0; k < 4; ++k) {
            double dot = 0.0;
            for (size_t c = 0; c < vectors[i].size(); ++c) dot += vectors[i][c] * vectors[k][c];
            EXPECT_NEAR(dot, i == k ? 1.0 : 0.0, 1e-12);
        }
    }
    cfg.states = "builtin:sic-d4";
    auto sic = cmd_gram(cfg);
    EXPECT_EQ(cell(to_csv(sic), "embeddable", "value"), "false");
    EXPECT_FALSE(cell(to_csv(sic), "violating_cycle", "value").empty());
    cfg.states = "builtin:random-gdc";
    EXPECT_LE(num(cell(to_csv(cmd_gram(cfg)), "roundtrip_residual", "value")), 1e-8);
}

TEST(Commands, GramFiles) {
    const std::string dir = ::testing::TempDir();
    Rng rng(3);
    json unitaries = json::array();
    for (int i = 0; i < 5; ++i) unitaries.push_back(matrix_to_json(random_unitary(rng, 2)));
    std::ofstream(dir + "/gdc.json") << json{{"unitaries", unitaries}}.dump();
    json states = json::array();
    for (const auto& v : sic_d4()) states.push_back(vector_to_json(v));
    std::ofstream(dir + "/sic.json") << json{{"states", states}}.dump();
    std::ofstream(dir + "/bad.json") << "{\"states\": [[1, 2";

    RunConfig cfg = quick_config(1);
    cfg.states = dir + "/gdc.json";
    EXPECT_LE(num(cell(to_csv(cmd_gram(cfg)), "roundtrip_residual", "value")), 1e-8);
    cfg.states = dir + "/sic.json";
    EXPECT_EQ(cell(to_csv(cmd_gram(cfg)), "embeddable", "value"), "false");
    cfg.states = dir + "/bad.json";
    EXPECT_THROW(cmd_gram(cfg), ContractViolation);
    cfg.states = dir + "/missing.json";
    EXPECT_THROW(cmd_gram(cfg), ContractViolation);
}

TEST(Commands, ConfigValidation) {
    RunConfig cfg = quick_config(1);
    cfg.betas.clear();
    EXPECT_THROW(cmd_frac(cfg), ContractViolation);
    cfg = quick_config(1);
    cfg.theta_grid = {2.0};
    cfg.mode = "theta-sweep";
    EXPECT_THROW(cmd_sic(cfg), ContractViolation);
}

// ---------------------------------------------------------------------------
// The executable

TEST(Executable, CsvIsByteIdenticalAcrossRuns) {
    REQUIRE_CLI();
    const std::string args = "table1 --resource C2 --resource Q2 --D 1 --D 2 --restarts 8 --seed 5";
    CliRun a = run_cli(args);
    CliRun b = run_cli(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("# eapm csv schema 1\n", 0), 0u);
    EXPECT_EQ(num(cell(a.out, "C2", "value")), 8.0);
}

TEST(Executable, JsonOutputAndFile) {
    REQUIRE_CLI();
    const std::string path = ::testing::TempDir() + "/frac.json";
    CliRun r = run_cli("frac --beta 1 --restarts 3 --format json --out " + path);
    ASSERT_EQ(r.code, 0);
    std::ifstream in(path);
    json j = json::parse(in);
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_NEAR(std::stod(j["rows"][0]["classical_1bit_exact"].get<std::string>()), 10.0, 1e-9);
}

TEST(Executable, ExitCodes) {
    REQUIRE_CLI();
    EXPECT_EQ(run_cli("qutrit --mode verify").code, 0);
    EXPECT_EQ(run_cli("table1 --resource Z9").code, 2);
    EXPECT_EQ(run_cli("frac --beta -1").code, 2);
    EXPECT_EQ(run_cli("sic --mode sideways").code, 2);
    EXPECT_EQ(run_cli("gram --states /nonexistent.json").code, 2);
    EXPECT_EQ(run_cli("frobnicate").code, 2);
    EXPECT_EQ(run_cli("table1 --resource C4 --D 1", "EAPM_ENUM_CAP=100").code, 3);
}

TEST(Executable, GammaOverride) {
    REQUIRE_CLI();
    CliRun r = run_cli("frac --beta 1 --gamma 0 --restarts 2");
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(num(cell(r.out, "1.0000000000", "gamma")), 0.0);
    EXPECT_NEAR(num(cell(r.out, "1.0000000000", "classical_1bit_exact")), classical_exact(frac_witness(1.0, 0.0), 2).value,
                1e-9);
}

}  // namespace
}  // namespace eapm
