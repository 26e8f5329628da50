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


// eapm command-line tool: table1, frac, sic, qutrit, gram.
//
// Exit codes: 0 success, 2 validation error, 3 enumeration capacity exceeded.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "eapm/commands.hpp"

namespace {

using eapm::RunConfig;

void add_common(CLI::App* sub, RunConfig& cfg, std::string& field, std::string& out_path) {
    sub->add_option("--out", out_path, "write output here instead of stdout");
    sub->add_option("--restarts", cfg.seesaw.restarts, "see-saw restarts")->capture_default_str();
    sub->add_option("--seed", cfg.seesaw.seed, "base seed")->capture_default_str();
    sub->add_option("--field", field, "real or complex")->check(CLI::IsMember({"real", "complex"}))->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Prepare-and-measure correlations with bounded entanglement"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string field = "complex";
    std::string out_path;

    auto* table1 = app.add_subcommand("table1", "five-preparation witness over resources and D");
    table1->add_option("--witness", cfg.witness, "gallego_w5 or a witness JSON file")->capture_default_str();
    table1->add_option("--resource", cfg.resources, "C2 C3 C4 Q2 Q3 Q4, or C/Q with --d");
    table1->add_option("--d", cfg.d, "message dimension for a bare C/Q resource");
    table1->add_option("--D", cfg.entanglement, "entanglement dimensions (1, 2, 4)");
    add_common(table1, cfg, field, out_path);

    auto* frac = app.add_subcommand("frac", "flagged random access code over a beta grid");
    frac->add_option("--beta", cfg.betas, "beta grid")->delimiter(',');
    frac->add_option("--gamma", cfg.gamma, "gamma (default 4 beta)");
    add_common(frac, cfg, field, out_path);

    auto* sic = app.add_subcommand("sic", "pairwise witness over sixteen preparations");
    sic->add_option("--mode", cfg.mode, "complex-d4, real-d4 or theta-sweep")
        ->check(CLI::IsMember({"complex-d4", "real-d4", "theta-sweep"}));
    sic->add_option("--theta-grid", cfg.theta_grid, "theta values in [0, pi/2]")->delimiter(',');
    add_common(sic, cfg, field, out_path);

    auto* qutrit = app.add_subcommand("qutrit", "nine-preparation qutrit witness");
    qutrit->add_option("--mode", cfg.mode, "verify, real-seesaw or ea-qubit-D4")
        ->check(CLI::IsMember({"verify", "real-seesaw", "ea-qubit-D4"}));
    add_common(qutrit, cfg, field, out_path);

    auto* gram = app.add_subcommand("gram", "Gram matrix, real embedding and unitary reconstruction");
    gram->add_option("--states", cfg.states, "states JSON file or builtin:{dense-coding,sic-d4,random-gdc}")
        ->required();
    add_common(gram, cfg, field, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.seesaw.field = field == "real" ? eapm::Field::Real : eapm::Field::Complex;
        for (auto& r : cfg.resources) {
            if (r == "C" || r == "Q") r += std::to_string(cfg.d);
        }
        eapm::CommandResult result;
        if (table1->parsed()) {
            result = eapm::cmd_table1(cfg);
        } else if (frac->parsed()) {
            result = eapm::cmd_frac(cfg);
        } else if (sic->parsed()) {
            result = eapm::cmd_sic(cfg);
        } else if (qutrit->parsed()) {
            result = eapm::cmd_qutrit(cfg);
        } else {
            result = eapm::cmd_gram(cfg);
        }
        const std::string text = cfg.format == "json" ? eapm::to_json(result).dump(2) + "\n" : eapm::to_csv(result);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << '\n';
                return 2;
            }
            out << text;
        }
    } catch (const eapm::CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    } catch (const eapm::RankExcess& e) {
        std::cerr << "validation error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
