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


#include <sstream>

#include <gtest/gtest.h>

#include <bellscope/bellscope.hpp>

using namespace bellscope;
using nlohmann::json;

TEST(Io, ScalarsAndMasks) {
    EXPECT_EQ(io::scalar_from_json<Rational>(json("3/8")), Rational{3} / 8);
    EXPECT_EQ(io::scalar_from_json<Rational>(json("0.25")), Rational{1} / 4);
    EXPECT_EQ(io::scalar_from_json<Rational>(json("007/3")), Rational{7} / 3);
    EXPECT_EQ(io::scalar_from_json<Rational>(json("-0.5")), Rational{-1} / 2);
    EXPECT_EQ(io::scalar_from_json<Rational>(json("25e-2")), Rational{1} / 4);
    EXPECT_THROW(io::scalar_from_json<Rational>(json("1/0")), std::exception);
    EXPECT_THROW(io::scalar_from_json<Rational>(json("0x10")), std::exception);
    EXPECT_EQ(io::scalar_from_json<Rational>(json(2)), Rational{2});
    EXPECT_EQ(io::scalar_from_json<Rational>(json(0.5)), Rational{1} / 2);
    EXPECT_DOUBLE_EQ(io::scalar_from_json<double>(json("1/3")), 1.0 / 3);
    EXPECT_THROW(io::scalar_from_json<Rational>(json("x")), std::exception);
    EXPECT_EQ(io::mask_from_json(json::array({1, 0, 1}), 3, "m"), 0b101U);
    EXPECT_EQ(io::mask_from_json(json(5), 3, "m"), 5U);
    EXPECT_EQ(io::mask_to_json(0b110, 3), json::array({0, 1, 1}));
    EXPECT_THROW(io::mask_from_json(json(8), 3, "m"), io::FormatError);
    EXPECT_THROW(io::mask_from_json(json::array({1, 2}), 2, "m"), io::FormatError);
}

TEST(Io, CorrelatorRoundTrip) {
    const CorrelatorVector<Rational> p{2, {Rational{1} / 3, 0, 1, Rational{1} / 2}};
    const auto j = io::to_json(p);
    EXPECT_EQ(j.at("format"), 1);
    EXPECT_EQ(io::correlator_from_json<Rational>(j), p);
    const CorrelatorVector<double> q{1, {0.1, 0.9}};
    EXPECT_EQ(io::correlator_from_json<double>(json::parse(io::to_json(q).dump())), q);
    EXPECT_EQ(io::correlator_from_json<double>(json::array({0, 1})), (CorrelatorVector<double>{1, {0, 1}}));
    EXPECT_THROW(io::correlator_from_json<double>(json::array({0, 1, 0})), io::FormatError);
    EXPECT_THROW(io::correlator_from_json<double>(json{{"format", 2}, {"entries", {0, 1}}}), io::FormatError);
    EXPECT_THROW(io::correlator_from_json<double>(json{{"format", 1}, {"k", 2}, {"entries", {0, 1}}}),
                 io::FormatError);
}

TEST(Io, MembershipRoundTrip) {
    for (const auto &p : {CorrelatorVector<Rational>{2, {0, 0, 0, 1}}, CorrelatorVector<Rational>{2, {0, 1, 1, 0}},
                          CorrelatorVector<Rational>{2, {Rational{1} / 2, Rational{1} / 2, 0, 1}}}) {
        const auto r = membership(p);
        const auto j = io::to_json(r);
        EXPECT_EQ(io::to_json(io::membership_from_json<Rational>(json::parse(j.dump()))), j);
    }
    const auto rf = membership(CorrelatorVector<double>{2, {0, 0, 0, 1}});
    const auto jf = io::to_json(rf);
    EXPECT_EQ(io::to_json(io::membership_from_json<double>(json::parse(jf.dump()))), jf);
}

TEST(Io, LhvModelRoundTrip) {
    const auto m = scenarios::detection_loophole_model<Rational>();
    const auto j = io::to_json(m);
    const auto back = io::lhv_model_from_json<Rational>(json::parse(j.dump()));
    EXPECT_EQ(io::to_json(back), j);
    EXPECT_EQ(joint_table(back), joint_table(m));
    auto bad = j;
    bad["support"][0]["weight"] = "1/3";
    EXPECT_THROW(io::lhv_model_from_json<Rational>(bad), std::exception);
}

TEST(Io, QuantumStrategyRoundTrip) {
    const auto s = scenarios::six_party_strategy();
    const auto j = io::to_json(s);
    const auto back = io::quantum_strategy_from_json(json::parse(j.dump()));
    EXPECT_EQ(back.relabel, s.relabel);
    EXPECT_EQ(io::to_json(back), j);
    EXPECT_EQ(joint_table(back), joint_table(s));
    const json named{{"format", 1}, {"n", 3}, {"state", "ghz"}, {"observables", io::to_json(s).at("observables")}};
    EXPECT_THROW(io::quantum_strategy_from_json(named), io::FormatError); // six observables for three qubits
    json ok = named;
    ok["observables"].erase(3);
    ok["observables"].erase(3);
    ok["observables"].erase(3);
    EXPECT_EQ(joint_table(io::quantum_strategy_from_json(ok)), joint_table(scenarios::ghz_xy_strategy(3, 0)));
}

TEST(Io, SelectionRuleRoundTrip) {
    const SelectionRule mixed{2, 2, {LinearRule{0b01, 0b10, 1}, TableRule{BooleanFunction::monomial(3, 0b110)}}};
    for (const auto &rule : {scenarios::ghz_mermin_rule(), scenarios::six_party_rule(), mixed}) {
        const auto j = io::to_json(rule);
        EXPECT_EQ(io::selection_rule_from_json(json::parse(j.dump())), rule);
    }
    auto bad = io::to_json(scenarios::ghz_mermin_rule());
    bad["parties"][0]["m_mask"] = json::array({1, 0, 0});
    EXPECT_THROW(io::selection_rule_from_json(bad), io::FormatError);
}

TEST(Io, PostSelectionReportRoundTripAndCsv) {
    const auto r = apply(joint_table(scenarios::detection_loophole_model<Rational>()), SelectionRule::identity(2));
    const auto j = io::to_json(r);
    EXPECT_EQ(io::to_json(io::post_selection_from_json<Rational>(json::parse(j.dump()))), j);
    std::ostringstream csv;
    io::write_csv(csv, r);
    EXPECT_EQ(csv.str(), "x,probability,selection_probability\n00,1/2,1/4\n10,1/2,1/4\n01,0,1/4\n11,1,1/4\n");
}

TEST(Io, ScenarioReportRoundTrip) {
    const auto r = scenarios::run_detection_loophole();
    const auto j = scenarios::to_json(r);
    EXPECT_EQ(j.at("format"), 1);
    EXPECT_EQ(scenarios::to_json(scenarios::scenario_report_from_json(json::parse(j.dump()))), j);
}
