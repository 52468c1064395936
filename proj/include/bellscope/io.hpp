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
 * JSON (and CSV) forms of the library's values. Every object written carries
 * "format": 1; readers reject any other format value and tolerate its absence
 * in hand-written inputs. Exact rationals travel as strings ("3/4"), floats as
 * numbers.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "boolfn.hpp"
#include "geometry.hpp"
#include "lhv.hpp"
#include "postselect.hpp"
#include "quantum.hpp"
#include "scalar.hpp"

namespace bellscope::io {

using nlohmann::json;

inline constexpr int kFormat = 1;

/// Malformed or inconsistent input document.
class FormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline void check_format(const json &j, const char *what) {
    if (!j.is_object()) {
        throw FormatError(std::string(what) + " must be a JSON object");
    }
    if (j.contains("format") && j.at("format") != kFormat) {
        throw FormatError(std::string(what) + ": unsupported format " + j.at("format").dump());
    }
}

inline const json &field(const json &j, const char *key, const char *what) {
    if (!j.contains(key)) {
        throw FormatError(std::string(what) + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

/// Integers built in code are signed while parsed ones are unsigned; accept both.
inline bool is_nonnegative_integer(const json &v) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
}

inline bool is_bit(const json &v) { return is_nonnegative_integer(v) && v.get<std::uint64_t>() <= 1; }

inline unsigned read_count(const json &j, const char *key, const char *what) {
    const auto &v = field(j, key, what);
    if (!is_nonnegative_integer(v)) {
        throw FormatError(std::string(what) + ": \"" + key + "\" must be a nonnegative integer");
    }
    return v.get<unsigned>();
}

// Scalars

template <Scalar T> json scalar_to_json(const T &v) {
    if constexpr (scalar_traits<T>::exact) {
        return v.str();
    } else {
        return v;
    }
}

template <Scalar T> T scalar_from_json(const json &j) {
    if (j.is_string()) {
        const Rational r = [&] {
            try {
                return parse_rational(j.get<std::string>());
            } catch (const std::invalid_argument &e) {
                throw FormatError(e.what());
            }
        }();
        return scalar_cast<T>(r);
    }
    if (j.is_number_integer()) {
        return scalar_cast<T>(Rational{j.get<long long>()});
    }
    if (j.is_number()) {
        return scalar_cast<T>(j.get<double>());
    }
    throw FormatError("expected a number or a rational string, got " + j.dump());
}

// Bit masks: written as bit arrays in party order, read from arrays or integers.

inline json mask_to_json(std::uint64_t mask, unsigned length) {
    json bits = json::array();
    for (unsigned j = 1; j <= length; ++j) {
        bits.push_back(bit_at(mask, j));
    }
    return bits;
}

inline std::uint64_t mask_from_json(const json &j, unsigned length, const char *what) {
    if (is_nonnegative_integer(j)) {
        const auto v = j.get<std::uint64_t>();
        if (length < 64 && (v >> length) != 0) {
            throw FormatError(std::string(what) + ": mask has bits beyond length " + std::to_string(length));
        }
        return v;
    }
    if (!j.is_array() || j.size() != length) {
        throw FormatError(std::string(what) + ": expected " + std::to_string(length) + " bits");
    }
    std::uint64_t v = 0;
    for (unsigned i = 0; i < length; ++i) {
        const auto &b = j.at(i);
        if (!is_bit(b)) {
            throw FormatError(std::string(what) + ": bits must be 0 or 1");
        }
        v |= static_cast<std::uint64_t>(b.get<unsigned>()) << i;
    }
    return v;
}

// BooleanFunction

inline json to_json(const BooleanFunction &f) { return to_text(f); }

inline BooleanFunction function_from_json(const json &j) {
    if (!j.is_string()) {
        throw FormatError("boolean function must be a \"<arity>:<hex>\" string");
    }
    try {
        return from_text(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

// CorrelatorVector

template <Scalar T> json to_json(const CorrelatorVector<T> &p) {
    json entries = json::array();
    for (const auto &v : p.entries) {
        entries.push_back(scalar_to_json(v));
    }
    return {{"format", kFormat}, {"k", p.k}, {"entries", std::move(entries)}};
}

/// Accepts the object form or a bare array ordered by the encoding of x.
template <Scalar T> CorrelatorVector<T> correlator_from_json(const json &j) {
    const json *arr = &j;
    if (j.is_object()) {
        check_format(j, "correlator vector");
        arr = &field(j, "entries", "correlator vector");
    }
    if (!arr->is_array()) {
        throw FormatError("correlator vector entries must be an array");
    }
    const std::size_t size = arr->size();
    unsigned k = 0;
    while ((std::size_t{1} << k) < size) {
        ++k;
    }
    if (size < 2 || (std::size_t{1} << k) != size) {
        throw FormatError("correlator vector length must be a power of two >= 2, got " + std::to_string(size));
    }
    if (j.is_object() && j.contains("k") && j.at("k") != k) {
        throw FormatError("correlator vector: k does not match the entry count");
    }
    std::vector<T> e;
    for (const auto &v : *arr) {
        e.push_back(scalar_from_json<T>(v));
    }
    return CorrelatorVector<T>{k, std::move(e)};
}

// MembershipResult

template <Scalar T> json to_json(const MembershipResult<T> &r) {
    json out{{"format", kFormat}, {"status", to_string(r.status)}, {"k", r.k}};
    json weights = json::array();
    for (const auto &w : r.weights) {
        weights.push_back({{"function", to_json(w.function)}, {"weight", scalar_to_json(w.weight)}});
    }
    out["weights"] = std::move(weights);
    if (r.certificate) {
        json coeffs = json::array();
        for (const auto &c : r.certificate->coefficients) {
            coeffs.push_back(scalar_to_json(c));
        }
        out["certificate"] = {{"coefficients", std::move(coeffs)},
                              {"bound", scalar_to_json(r.certificate->bound)},
                              {"violation", scalar_to_json(r.certificate->violation)}};
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

template <Scalar T> MembershipResult<T> membership_from_json(const json &j) {
    check_format(j, "membership result");
    MembershipResult<T> r;
    const auto status = field(j, "status", "membership result").get<std::string>();
    if (status == "inside") {
        r.status = Membership::inside;
    } else if (status == "outside") {
        r.status = Membership::outside;
    } else {
        throw FormatError("membership status must be inside or outside");
    }
    r.k = read_count(j, "k", "membership result");
    for (const auto &w : field(j, "weights", "membership result")) {
        r.weights.push_back({function_from_json(field(w, "function", "weight")),
                             scalar_from_json<T>(field(w, "weight", "weight"))});
    }
    if (j.contains("certificate") && !j.at("certificate").is_null()) {
        const auto &c = j.at("certificate");
        Certificate<T> cert;
        for (const auto &v : field(c, "coefficients", "certificate")) {
            cert.coefficients.push_back(scalar_from_json<T>(v));
        }
        cert.bound = scalar_from_json<T>(field(c, "bound", "certificate"));
        cert.violation = scalar_from_json<T>(field(c, "violation", "certificate"));
        r.certificate = std::move(cert);
    }
    return r;
}

// LhvModel: {n, support: [{weight, a, b}]}

template <Scalar T> json to_json(const LhvModel<T> &m) {
    json support = json::array();
    for (const auto &ws : m.support()) {
        support.push_back({{"weight", scalar_to_json(ws.weight)},
                           {"a", mask_to_json(ws.strategy.a, m.parties())},
                           {"b", mask_to_json(ws.strategy.b, m.parties())}});
    }
    return {{"format", kFormat}, {"n", m.parties()}, {"support", std::move(support)}};
}

template <Scalar T> LhvModel<T> lhv_model_from_json(const json &j) {
    check_format(j, "LHV model");
    const unsigned n = read_count(j, "n", "LHV model");
    if (n < 1 || n > kMaxTableParties) {
        throw FormatError("LHV model: n out of range");
    }
    std::vector<WeightedStrategy<T>> support;
    const auto &sup = field(j, "support", "LHV model");
    if (!sup.is_array()) {
        throw FormatError("LHV model: support must be an array");
    }
    for (const auto &e : sup) {
        const auto a = mask_from_json(field(e, "a", "LHV support entry"), n, "a");
        const auto b = mask_from_json(field(e, "b", "LHV support entry"), n, "b");
        support.push_back({scalar_from_json<T>(field(e, "weight", "LHV support entry")), DeterministicStrategy{n, a, b}});
    }
    try {
        return LhvModel<T>{n, std::move(support)};
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

// QuantumStrategy: {n, state: "ghz" | [[re, im], ...], observables: [{theta0, phi0, theta1, phi1}],
// relabel?: {setting: bits, constant: bits}}

inline json to_json(const QuantumStrategy &q, const OutputRelabelling *relabel = nullptr) {
    json state = json::array();
    for (const auto &a : q.state.amplitudes()) {
        state.push_back({a.real(), a.imag()});
    }
    json obs = json::array();
    for (const auto &o : q.observables) {
        obs.push_back({{"theta0", o.setting0.theta},
                       {"phi0", o.setting0.phi},
                       {"theta1", o.setting1.theta},
                       {"phi1", o.setting1.phi}});
    }
    json out{{"format", kFormat}, {"n", q.parties()}, {"state", std::move(state)}, {"observables", std::move(obs)}};
    if (relabel) {
        out["relabel"] = {{"setting", mask_to_json(relabel->setting_flip, q.parties())},
                          {"constant", mask_to_json(relabel->constant_flip, q.parties())}};
    }
    return out;
}

inline json to_json(const RelabelledStrategy &r) { return to_json(r.base, &r.relabel); }

inline RelabelledStrategy quantum_strategy_from_json(const json &j) {
    check_format(j, "quantum strategy");
    const unsigned n = read_count(j, "n", "quantum strategy");
    if (n < 1 || n > kMaxTableParties) {
        throw FormatError("quantum strategy: n out of range");
    }
    const auto &st = field(j, "state", "quantum strategy");
    try {
        std::optional<PureState> state;
        if (st.is_string()) {
            if (st.get<std::string>() != "ghz") {
                throw FormatError("quantum strategy: the only named state is \"ghz\"");
            }
            state = ghz_state(n);
        } else if (st.is_array()) {
            std::vector<Complex> amp;
            for (const auto &a : st) {
                if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
                    throw FormatError("quantum strategy: amplitudes are [re, im] pairs");
                }
                amp.emplace_back(a[0].get<double>(), a[1].get<double>());
            }
            state = PureState{n, std::move(amp)};
        } else {
            throw FormatError("quantum strategy: state must be \"ghz\" or an amplitude list");
        }
        std::vector<ObservablePair> obs;
        for (const auto &o : field(j, "observables", "quantum strategy")) {
            auto num = [&](const char *key) {
                const auto &v = field(o, key, "observable");
                if (!v.is_number()) {
                    throw FormatError(std::string("observable: ") + key + " must be a number");
                }
                return v.get<double>();
            };
            obs.push_back({{num("theta0"), num("phi0")}, {num("theta1"), num("phi1")}});
        }
        RelabelledStrategy out{QuantumStrategy{std::move(*state), std::move(obs)}, {}};
        if (j.contains("relabel")) {
            const auto &r = j.at("relabel");
            out.relabel.setting_flip = mask_from_json(field(r, "setting", "relabel"), n, "relabel.setting");
            out.relabel.constant_flip = mask_from_json(field(r, "constant", "relabel"), n, "relabel.constant");
        }
        return out;
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

// SelectionRule: {n, k, parties: [{kind: "linear", x_mask, m_mask, const} | {kind: "table", truth_table}]}

inline json to_json(const SelectionRule &rule) {
    json parties = json::array();
    for (const auto &pr : rule.rules()) {
        if (const auto *lin = std::get_if<LinearRule>(&pr)) {
            parties.push_back({{"kind", "linear"},
                               {"x_mask", mask_to_json(lin->x_mask, rule.conditioning())},
                               {"m_mask", mask_to_json(lin->m_mask, rule.parties())},
                               {"const", lin->constant}});
        } else {
            parties.push_back({{"kind", "table"}, {"truth_table", to_json(std::get<TableRule>(pr).table)}});
        }
    }
    return {{"format", kFormat}, {"n", rule.parties()}, {"k", rule.conditioning()}, {"parties", std::move(parties)}};
}

inline SelectionRule selection_rule_from_json(const json &j) {
    check_format(j, "selection rule");
    const unsigned n = read_count(j, "n", "selection rule");
    const unsigned k = read_count(j, "k", "selection rule");
    if (n < 1 || n > kMaxTableParties || k < 1 || k > n) {
        throw FormatError("selection rule: need 1 <= k <= n <= 12");
    }
    std::vector<PartyRule> parties;
    for (const auto &p : field(j, "parties", "selection rule")) {
        const auto kind = field(p, "kind", "rule party").get<std::string>();
        if (kind == "linear") {
            LinearRule lin;
            lin.x_mask = mask_from_json(field(p, "x_mask", "linear rule"), k, "x_mask");
            lin.m_mask = mask_from_json(field(p, "m_mask", "linear rule"), n, "m_mask");
            const auto &c = field(p, "const", "linear rule");
            if (!is_bit(c)) {
                throw FormatError("linear rule: const must be 0 or 1");
            }
            lin.constant = c.get<unsigned>();
            parties.emplace_back(lin);
        } else if (kind == "table") {
            parties.emplace_back(TableRule{function_from_json(field(p, "truth_table", "table rule"))});
        } else {
            throw FormatError("rule party kind must be \"linear\" or \"table\"");
        }
    }
    try {
        return SelectionRule{n, k, std::move(parties)};
    } catch (const std::invalid_argument &e) {
        throw FormatError(e.what());
    }
}

inline json to_json(const Classification &c) {
    return {{"kind", to_string(c.kind)}, {"linear", c.linear}, {"acyclic", c.acyclic}};
}

// PostSelectionReport

template <Scalar T> json to_json(const PostSelectionReport<T> &r) {
    json sel = json::array();
    for (const auto &v : r.selection_probability) {
        sel.push_back(scalar_to_json(v));
    }
    return {{"format", kFormat},
            {"correlator", to_json(r.correlator)},
            {"selection_probability", std::move(sel)},
            {"kept_fraction", scalar_to_json(r.kept_fraction)}};
}

template <Scalar T> PostSelectionReport<T> post_selection_from_json(const json &j) {
    check_format(j, "post-selection report");
    PostSelectionReport<T> r;
    r.correlator = correlator_from_json<T>(field(j, "correlator", "post-selection report"));
    for (const auto &v : field(j, "selection_probability", "post-selection report")) {
        r.selection_probability.push_back(scalar_from_json<T>(v));
    }
    if (r.selection_probability.size() != r.correlator.size()) {
        throw FormatError("post-selection report: one selection probability per x required");
    }
    r.kept_fraction = scalar_from_json<T>(field(j, "kept_fraction", "post-selection report"));
    return r;
}

/// One row per x: bits (x1 first), conditional parity probability, selection probability.
template <Scalar T> void write_csv(std::ostream &os, const PostSelectionReport<T> &r) {
    os << "x,probability,selection_probability\n";
    for (std::uint64_t x = 0; x < r.correlator.size(); ++x) {
        os << BitString{r.correlator.k, x}.to_string() << ',' << scalar_traits<T>::to_string(r.correlator[x]) << ','
           << scalar_traits<T>::to_string(r.selection_probability[x]) << '\n';
    }
}

} // namespace bellscope::io
