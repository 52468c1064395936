// Copyright 2026 The Bellscope Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <bellscope/cli.hpp>

int main(int argc, char **argv) {
    using namespace bellscope;
    CLI::App app{"Multi-party CHSH correlators: local polytope membership, quantum simulation and post-selection"};
    app.require_subcommand(1);

    cli::RunConfig cfg;
    std::uint64_t seed = 0;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("-o,--output", cfg.output, "Write the JSON result here instead of stdout");
        sub->add_flag("--exact", cfg.exact, "Exact rational arithmetic");
    };

    std::string vector_file;
    auto *membership = app.add_subcommand("membership", "Decide whether a correlator vector is local");
    membership->add_option("vector", vector_file, "CorrelatorVector JSON file")->required();
    add_common(membership);

    std::string lhv_file, quantum_file, rule_file, csv_file;
    bool allow_nonlinear = false;
    auto *apply = app.add_subcommand("apply", "Post-select an LHV model or quantum strategy with a rule");
    auto *lhv_opt = apply->add_option("--lhv", lhv_file, "LhvModel JSON file");
    auto *q_opt = apply->add_option("--quantum", quantum_file, "QuantumStrategy JSON file");
    lhv_opt->excludes(q_opt);
    apply->add_option("--rule", rule_file, "SelectionRule JSON file")->required();
    apply->add_flag("--allow-nonlinear", allow_nonlinear, "Apply rules that are not linear");
    apply->add_option("--csv", csv_file, "Also dump the correlator as CSV");
    add_common(apply);

    std::string scenario_name;
    unsigned scenario_n = 3;
    auto *scenario = app.add_subcommand("scenario", "Run a named reproduction and report its checks");
    scenario->add_option("name", scenario_name, "Scenario name")->required();
    scenario->add_option("--n", scenario_n, "Party count (theorem1)");
    auto *seed_opt = scenario->add_option("--seed", seed, "64-bit seed (default: $BELLSCOPE_SEED, else built-in)");
    scenario->add_option("--restarts", cfg.search.restarts, "Search restarts per rule template");
    scenario->add_option("--sweeps", cfg.search.max_sweeps, "Coordinate sweeps per restart");
    scenario->add_option("--search-tolerance", cfg.search.tolerance, "Per-sweep convergence threshold")
        ->check(CLI::PositiveNumber);
    scenario->add_option("--threads", cfg.search.threads, "Worker threads for restarts (0: all cores)");
    scenario->add_flag("!--no-timing", cfg.timing, "Omit the wall-clock duration from the report");
    scenario->add_option("-o,--output", cfg.output, "Write the report here instead of stdout");

    unsigned k = 2;
    auto *enumerate = app.add_subcommand("enumerate-linear", "List the 2^(k+1) linear functions of arity k");
    enumerate->add_option("--k", k, "Arity")->required();
    enumerate->add_option("-o,--output", cfg.output, "Write the JSON result here instead of stdout");

    std::string function_text;
    auto *bound = app.add_subcommand("success-bound", "Classical ceiling of agreement with a target function");
    bound->add_option("function", function_text, "Target as <arity>:<hex truth table>, e.g. 2:8 for AND")->required();
    bound->add_option("-o,--output", cfg.output, "Write the JSON result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::exit_code::input_error;
    }

    if (*seed_opt) {
        cfg.seed = seed;
    }
    if (*membership) {
        return cli::cmd_membership(vector_file, cfg, std::cout, std::cerr);
    }
    if (*apply) {
        if (lhv_file.empty() == quantum_file.empty()) {
            std::cerr << "apply: give exactly one of --lhv or --quantum\n";
            return cli::exit_code::input_error;
        }
        const auto source = lhv_file.empty() ? cli::TableSource::quantum_strategy : cli::TableSource::lhv_model;
        return cli::cmd_apply(source, lhv_file.empty() ? quantum_file : lhv_file, rule_file, allow_nonlinear,
                              csv_file, cfg, std::cout, std::cerr);
    }
    if (*scenario) {
        return cli::cmd_scenario(scenario_name, scenario_n, cfg, std::cout, std::cerr);
    }
    if (*enumerate) {
        return cli::cmd_enumerate_linear(k, cfg, std::cout, std::cerr);
    }
    return cli::cmd_success_bound(function_text, cfg, std::cout, std::cerr);
}
