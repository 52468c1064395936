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


/**
 * @file
 * Command implementations behind the `bellscope` executable. Each command
 * writes its JSON document to `out` (or atomically to a file) and returns
 * the process exit status.
 */

#pragma once

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "geometry.hpp"
#include "io.hpp"
#include "lhv.hpp"
#include "postselect.hpp"
#include "quantum.hpp"
#include "scenarios.hpp"
#include "search.hpp"

namespace bellscope::cli {

using nlohmann::json;

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int inside = 0;
inline constexpr int outside = 1;
inline constexpr int scenario_failed = 1;
inline constexpr int input_error = 2;
inline constexpr int nonlinear_refused = 3;
inline constexpr int zero_selection = 4;
} // namespace exit_code

inline constexpr const char *kSeedVariable = "BELLSCOPE_SEED";

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    std::string output; // empty: standard output
    std::optional<std::uint64_t> seed;
    bool exact = false;
    bool timing = true;
    SearchConfig search;
};

/// --seed, else $BELLSCOPE_SEED, else kDefaultSeed.
inline std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv(kSeedVariable); env && *env) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used, 0);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw std::invalid_argument(std::string(kSeedVariable) + " is not an unsigned integer: " + env);
    }
    return kDefaultSeed;
}

/// Writes `text` to `path` through a temporary file and a rename, or to `out` when path is empty.
inline void emit(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    const std::filesystem::path target{path};
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
        f << text;
        if (!f.flush()) {
            throw std::runtime_error("failed writing " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

inline json read_json_file(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw io::FormatError("cannot open " + path);
    }
    try {
        return json::parse(f);
    } catch (const json::parse_error &e) {
        throw io::FormatError(path + ": " + e.what());
    }
}

namespace detail {

template <Scalar T> int membership_document(const json &doc, const RunConfig &cfg, std::ostream &out) {
    const auto p = io::correlator_from_json<T>(doc);
    const auto r = membership(p);
    emit(io::to_json(r).dump(2) + "\n", cfg.output, out);
    return r.status == Membership::inside ? exit_code::inside : exit_code::outside;
}

template <Scalar T>
void write_apply(const ConditionalTable<T> &table, const SelectionRule &rule, const Classification &cls,
                 const RunConfig &cfg, const std::string &csv, std::ostream &out) {
    const auto report = apply(table, rule);
    json doc = io::to_json(report);
    doc["classification"] = io::to_json(cls);
    const unsigned cap = scalar_traits<T>::exact ? kMaxExactMembershipArity : kMaxMembershipArity;
    if (report.correlator.k <= cap) {
        doc["membership"] = io::to_json(membership(report.correlator));
    }
    if (!csv.empty()) {
        std::ostringstream rows;
        io::write_csv(rows, report);
        emit(rows.str(), csv, out);
    }
    emit(doc.dump(2) + "\n", cfg.output, out);
}

} // namespace detail

/// Exit 0 inside, 1 outside, 2 on input errors.
inline int cmd_membership(const std::string &vector_file, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        const auto doc = read_json_file(vector_file);
        return cfg.exact ? detail::membership_document<Rational>(doc, cfg, out)
                         : detail::membership_document<double>(doc, cfg, out);
    } catch (const std::exception &e) {
        err << "membership: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

enum class TableSource { lhv_model, quantum_strategy };

/**
 * Applies a selection rule to an LHV model or quantum strategy. Nonlinear rules
 * are refused (exit 3) unless allowed; the classification is printed either way.
 */
inline int cmd_apply(TableSource source, const std::string &source_file, const std::string &rule_file,
                     bool allow_nonlinear, const std::string &csv, const RunConfig &cfg, std::ostream &out,
                     std::ostream &err) {
    try {
        const auto rule = io::selection_rule_from_json(read_json_file(rule_file));
        const auto cls = classify(rule);
        if (!cls.linear && !allow_nonlinear) {
            json doc{{"format", io::kFormat},
                     {"classification", io::to_json(cls)},
                     {"error", "nonlinear rule refused; pass --allow-nonlinear to apply it"}};
            out << doc.dump(2) << "\n";
            err << "apply: rule is " << to_string(cls.kind) << "/nonlinear; refusing without --allow-nonlinear\n";
            return exit_code::nonlinear_refused;
        }
        const auto doc = read_json_file(source_file);
        if (source == TableSource::lhv_model) {
            if (cfg.exact) {
                detail::write_apply(joint_table(io::lhv_model_from_json<Rational>(doc)), rule, cls, cfg, csv, out);
            } else {
                detail::write_apply(joint_table(io::lhv_model_from_json<double>(doc)), rule, cls, cfg, csv, out);
            }
        } else {
            const auto table = joint_table(io::quantum_strategy_from_json(doc));
            if (cfg.exact) {
                detail::write_apply(convert<Rational>(table), rule, cls, cfg, csv, out);
            } else {
                detail::write_apply(table, rule, cls, cfg, csv, out);
            }
        }
        return exit_code::ok;
    } catch (const ZeroSelectionError &e) {
        err << "apply: " << e.what() << "\n";
        return exit_code::zero_selection;
    } catch (const std::exception &e) {
        err << "apply: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

/// Exit 0 when every check passes, 1 when one fails, 2 for unknown names or bad options.
inline int cmd_scenario(const std::string &name, unsigned n, const RunConfig &cfg, std::ostream &out,
                        std::ostream &err) {
    const auto &names = scenarios::scenario_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        err << "scenario: unknown scenario \"" << name << "\"; available:";
        for (const auto &s : names) {
            err << " " << s;
        }
        err << "\n";
        return exit_code::input_error;
    }
    try {
        scenarios::ScenarioOptions opt;
        opt.n = n;
        opt.search = cfg.search;
        opt.search.seed = resolve_seed(cfg.seed);
        const auto report = scenarios::run_named(name, opt);
        emit(scenarios::to_json(report, cfg.timing).dump(2) + "\n", cfg.output, out);
        return report.passed() ? exit_code::ok : exit_code::scenario_failed;
    } catch (const std::exception &e) {
        err << "scenario: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

inline int cmd_enumerate_linear(unsigned k, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    try {
        if (k > 16) {
            throw std::invalid_argument("enumerate-linear supports k <= 16");
        }
        json fns = json::array();
        for (const auto &f : enumerate_linear(k)) {
            fns.push_back(to_text(f));
        }
        json doc{{"format", io::kFormat}, {"k", k}, {"count", fns.size()}, {"functions", std::move(fns)}};
        emit(doc.dump(2) + "\n", cfg.output, out);
        return exit_code::ok;
    } catch (const std::exception &e) {
        err << "enumerate-linear: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

/// Classical ceiling of a target function given in "<arity>:<hex>" form.
inline int cmd_success_bound(const std::string &function_text, const RunConfig &cfg, std::ostream &out,
                             std::ostream &err) {
    try {
        const auto f = from_text(function_text);
        const auto bound = success_bound(f);
        json doc{{"format", io::kFormat},
                 {"function", to_text(f)},
                 {"linear", is_linear(f)},
                 {"bound", bound.str()},
                 {"bound_value", bound.convert_to<double>()}};
        if (f.arity() >= 1 && f.arity() <= kMaxExactMembershipArity) {
            doc["bound_lp"] = success_bound_lp(f).str();
        }
        emit(doc.dump(2) + "\n", cfg.output, out);
        return exit_code::ok;
    } catch (const std::exception &e) {
        err << "success-bound: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

} // namespace bellscope::cli
