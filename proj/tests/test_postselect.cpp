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


#include <random>

#include <gtest/gtest.h>

#include <bellscope/bellscope.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace bellscope;

namespace {

const BooleanFunction kAnd2 = BooleanFunction::monomial(2, 0b11);

std::vector<BooleanFunction> nonlinear_arity_two() {
    std::vector<BooleanFunction> out;
    for (std::uint64_t code = 0; code < 16; ++code) {
        auto f = BooleanFunction::tabulate(2, [code](std::uint64_t x) { return (code >> x) & 1U; });
        if (!is_linear(f)) {
            out.push_back(std::move(f));
        }
    }
    return out;
}

// Rule where g_3 is f(x1, x2) written as a table over (m1, m2, x1, x2).
SelectionRule sp_rule_with(const BooleanFunction &f) {
    const auto g3 = BooleanFunction::tabulate(4, [&](std::uint64_t in) { return f(in >> 2); });
    return SelectionRule{3, 2, {LinearRule{0b01, 0, 0}, LinearRule{0b10, 0, 0}, TableRule{g3}}};
}

// Rule s1 = x1, s2 = f(m1, x2): table input bit 0 is m1, bits 1-2 are x.
SelectionRule sop_rule_with(const BooleanFunction &f) {
    const auto g2 = BooleanFunction::tabulate(3, [&](std::uint64_t in) { return f((in & 1U) | (((in >> 2) & 1U) << 1)); });
    return SelectionRule{2, 2, {LinearRule{0b01, 0, 0}, TableRule{g2}}};
}

} // namespace

TEST(SelectionRule, Validation) {
    EXPECT_THROW(SelectionRule(2, 3, {LinearRule{}, LinearRule{}}), std::invalid_argument);
    EXPECT_THROW(SelectionRule(2, 2, {LinearRule{}}), std::invalid_argument);
    EXPECT_THROW(SelectionRule(2, 1, {LinearRule{0b10, 0, 0}, LinearRule{}}), std::invalid_argument);
    EXPECT_THROW(SelectionRule(2, 2, {LinearRule{0, 0b01, 0}, LinearRule{}}), std::invalid_argument);
    EXPECT_THROW(SelectionRule(2, 2, {LinearRule{0, 0, 2}, LinearRule{}}), std::invalid_argument);
    EXPECT_THROW(SelectionRule(2, 2, {TableRule{BooleanFunction::constant(2, 0)}, LinearRule{}}),
                 std::invalid_argument);
}

TEST(SelectionRule, LinearAndTableFormsAgree) {
    const SelectionRule lin{3, 2, {LinearRule{0b01, 0b110, 1}, LinearRule{0b11, 0b001, 0}, LinearRule{0, 0b011, 0}}};
    std::vector<PartyRule> tables;
    for (unsigned j = 1; j <= 3; ++j) {
        tables.emplace_back(TableRule{lin.as_function(j)});
    }
    const SelectionRule tab{3, 2, std::move(tables)};
    for (std::uint64_t m = 0; m < 8; ++m) {
        for (std::uint64_t x = 0; x < 4; ++x) {
            const unsigned want1 = bit_at(x, 1) ^ bit_at(m, 2) ^ bit_at(m, 3) ^ 1U;
            EXPECT_EQ(lin.setting(1, m, x), want1);
            EXPECT_EQ(lin.settings(m, x), tab.settings(m, x));
        }
    }
    for (unsigned j = 1; j <= 3; ++j) {
        EXPECT_EQ(lin.outcome_dependencies(j), tab.outcome_dependencies(j));
    }
}

TEST(Classify, Examples) {
    const auto gm = classify(scenarios::ghz_mermin_rule());
    EXPECT_EQ(gm.kind, RuleKind::sp);
    EXPECT_TRUE(gm.linear);
    const auto six = classify(scenarios::six_party_rule());
    EXPECT_EQ(six.kind, RuleKind::sop);
    EXPECT_TRUE(six.linear);
    EXPECT_TRUE(six.acyclic);
    // g_3 = m1 m2: product of outcome bits.
    const auto g3 = BooleanFunction::tabulate(3, [](std::uint64_t in) { return (in & 0b11) == 0b11; });
    const SelectionRule prod{3, 1, {LinearRule{1, 0, 0}, LinearRule{1, 0, 0}, TableRule{g3}}};
    const auto c = classify(prod);
    EXPECT_EQ(c.kind, RuleKind::sop);
    EXPECT_FALSE(c.linear);
    // A table that only encodes a linear function is still linear.
    const SelectionRule table_linear{2, 1, {TableRule{BooleanFunction::linear(2, 0b11, 0)}, LinearRule{1, 0, 0}}};
    EXPECT_TRUE(classify(table_linear).linear);
    EXPECT_EQ(classify(table_linear).kind, RuleKind::sop);
}

TEST(Classify, CyclicRule) {
    const SelectionRule cyc{2, 2, {LinearRule{0b01, 0b10, 0}, LinearRule{0b10, 0b01, 0}}};
    EXPECT_TRUE(adaptive_order(cyc).empty());
    EXPECT_FALSE(classify(cyc).acyclic);
    EXPECT_EQ(adaptive_order(scenarios::six_party_rule()), (std::vector<unsigned>{1, 2, 3, 4, 5, 6}));
}

TEST(Apply, IdentityRecoversCorrelator) {
    std::mt19937_64 rng(1);
    for (unsigned n = 1; n <= 4; ++n) {
        const auto table = joint_table(gen::random_model(n, rng));
        const auto r = apply(table, SelectionRule::identity(n));
        EXPECT_EQ(r.correlator, correlator_vector(table));
        for (const auto &p : r.selection_probability) {
            EXPECT_EQ(p, Rational{1} / Rational{1 << n});
        }
        EXPECT_EQ(r.kept_fraction, Rational{1} / Rational{1 << n});
    }
    const auto qt = joint_table(scenarios::ghz_xy_strategy(3, 0));
    EXPECT_LE(max_abs_difference(apply(qt, SelectionRule::identity(3)).correlator, correlator_vector(qt)), 1e-15);
    EXPECT_THROW(apply(qt, SelectionRule::identity(2)), std::invalid_argument);
}

TEST(Apply, GhzMerminComputesAnd) {
    const auto r = apply(joint_table(scenarios::ghz_xy_strategy(3, 0b011)), scenarios::ghz_mermin_rule());
    EXPECT_LE(max_abs_difference(r.correlator, vertex<Rational>(kAnd2)), 1e-9);
    for (const auto &p : r.selection_probability) {
        EXPECT_NEAR(p, 0.125, 1e-12);
    }
}

TEST(Apply, SixPartyComputesTripleAnd) {
    const auto r = apply(joint_table(scenarios::six_party_strategy()), scenarios::six_party_rule());
    EXPECT_LE(max_abs_difference(r.correlator, vertex<Rational>(BooleanFunction::monomial(3, 0b111))), 1e-9);
    for (const auto &p : r.selection_probability) {
        EXPECT_NEAR(p, 1.0 / 64, 1e-12);
    }
}

TEST(Apply, CalibrationFindsOneGaugeClass) {
    const auto found = scenarios::calibrate_six_party();
    std::vector<std::uint64_t> masks;
    for (const auto &c : found) {
        EXPECT_EQ(c.party4_constant, 1U);
        masks.push_back(c.relabelled);
    }
    EXPECT_EQ(masks, (std::vector<std::uint64_t>{27, 28, 35, 36}));
    EXPECT_NE(std::find(found.begin(), found.end(), scenarios::kSixPartyConventions), found.end());
}

TEST(Apply, CyclicRuleCanSelectNothing) {
    // s1 = m2 xor x1, s2 = m1 xor x2 with m_j = s_j: consistent only when x1 = x2.
    const SelectionRule cyc{2, 2, {LinearRule{0b01, 0b10, 0}, LinearRule{0b10, 0b01, 0}}};
    const auto table = joint_table(LhvModel<Rational>::deterministic(DeterministicStrategy{2, 0b11, 0}));
    try {
        apply(table, cyc);
        FAIL() << "expected a zero-selection error";
    } catch (const ZeroSelectionError &e) {
        EXPECT_EQ(e.x(), 1U);
        EXPECT_NE(std::string(e.what()).find("x = 10"), std::string::npos);
    }
}

TEST(ApplyPredicate, DetectionLoophole) {
    const auto table = joint_table(scenarios::detection_loophole_model<Rational>());
    const auto keep0 = apply_predicate(table, [](std::uint64_t, std::uint64_t m) { return bit_at(m, 1) == 0; });
    EXPECT_EQ(keep0.correlator, vertex<Rational>(kAnd2));
    EXPECT_EQ(keep0.kept_weight, (std::vector<Rational>(4, Rational{1} / 2)));
    EXPECT_EQ(membership(keep0.correlator).status, Membership::outside);

    const auto all = apply_predicate(table, [](std::uint64_t, std::uint64_t) { return true; });
    EXPECT_EQ(all.correlator, correlator_vector(table));
    EXPECT_EQ(all.correlator.entries, (std::vector<Rational>{Rational{1} / 2, Rational{1} / 2, 0, 1}));
    EXPECT_EQ(membership(all.correlator).status, Membership::inside);

    // Keeping m1 = 1 leaves t = s1 xor 1, so m2 = s1 s2 xor s2 and the parity adds m1 = 1.
    const auto keep1 = apply_predicate(table, [](std::uint64_t, std::uint64_t m) { return bit_at(m, 1) == 1; });
    EXPECT_EQ(keep1.correlator.entries, (std::vector<Rational>{1, 1, 0, 1}));
    std::vector<Rational> m2(4, Rational{0});
    for (std::uint64_t s = 0; s < 4; ++s) {
        for (std::uint64_t m = 0; m < 4; ++m) {
            if (bit_at(m, 1) == 1 && bit_at(m, 2) == 1) {
                m2[s] += table.at(s, m) / keep1.kept_weight[s];
            }
        }
    }
    EXPECT_EQ(m2, (std::vector<Rational>{0, 0, 1, 0}));

    EXPECT_THROW(apply_predicate(table, [](std::uint64_t, std::uint64_t) { return false; }), ZeroSelectionError);
}

TEST(Invariance, DeterministicStrategiesUnderLinearSpRules) {
    std::mt19937_64 rng(21);
    for (const auto &s : enumerate_strategies(3)) {
        const auto rule = gen::random_linear_rule(3, rng, false);
        EXPECT_EQ(lhv_invariance_witness(LhvModel<Rational>::deterministic(s), rule).status, Membership::inside);
    }
}

TEST(Invariance, RandomModelsAndLinearRules) {
    std::mt19937_64 rng(4242);
    for (unsigned n = 2; n <= 3; ++n) {
        for (bool sop : {false, true}) {
            for (int trial = 0; trial < 100; ++trial) {
                const auto model = gen::random_model(n, rng);
                const auto rule = gen::random_linear_rule(n, rng, sop);
                const auto report = apply(joint_table(model), rule);
                ASSERT_EQ(membership(report.correlator).status, Membership::inside);
                ASSERT_TRUE(oracle::inside_exact(report.correlator.entries));
                for (const auto &p : report.selection_probability) {
                    ASSERT_EQ(p, Rational{1} / Rational{1 << n});
                }
            }
        }
    }
}

TEST(Invariance, DegenerateSopRules) {
    // Outcome-only rules (no x dependence) and x-only rules written through the SOP form.
    std::mt19937_64 rng(8);
    const SelectionRule outcome_only{3, 2, {LinearRule{0b01, 0, 0}, LinearRule{0b10, 0, 0}, LinearRule{0, 0b011, 0}}};
    const SelectionRule x_only{3, 2, {LinearRule{0b01, 0, 0}, LinearRule{0b10, 0, 0}, LinearRule{0b11, 0, 1}}};
    for (int trial = 0; trial < 50; ++trial) {
        const auto model = gen::random_model(3, rng);
        EXPECT_EQ(lhv_invariance_witness(model, outcome_only).status, Membership::inside);
        EXPECT_EQ(lhv_invariance_witness(model, x_only).status, Membership::inside);
    }
    const auto loophole = scenarios::detection_loophole_model<Rational>();
    const SelectionRule pad{2, 2, {LinearRule{0b01, 0, 0}, LinearRule{0b10, 0b01, 0}}};
    EXPECT_EQ(lhv_invariance_witness(loophole, pad).status, Membership::inside);
}

TEST(Invariance, QuantumTablesKeepSelectionProbability) {
    const auto table = joint_table(scenarios::six_party_strategy());
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto r = apply(table, gen::random_linear_rule(6, rng, true));
        for (const auto &p : r.selection_probability) {
            EXPECT_NEAR(p, 1.0 / 64, 1e-12);
        }
    }
}

TEST(Invariance, NonlinearSpRulesHaveCounterexamples) {
    const auto strat = LhvModel<Rational>::deterministic(DeterministicStrategy{3, 0b111, 0});
    for (const auto &f : nonlinear_arity_two()) {
        const auto rule = sp_rule_with(f);
        ASSERT_FALSE(classify(rule).linear);
        const auto r = apply(joint_table(strat), rule);
        EXPECT_EQ(membership(r.correlator).status, Membership::outside) << to_text(f);
        EXPECT_FALSE(oracle::inside_exact(r.correlator.entries));
    }
}

TEST(Invariance, NonlinearSopRulesHaveCounterexamples) {
    for (const auto &f : nonlinear_arity_two()) {
        const auto rule = sop_rule_with(f);
        ASSERT_FALSE(classify(rule).linear);
        ASSERT_EQ(classify(rule).kind, RuleKind::sop);
        bool found = false;
        for (const auto &s : enumerate_strategies(2)) {
            const auto r = apply(joint_table(LhvModel<Rational>::deterministic(s)), rule);
            found = found || membership(r.correlator).status == Membership::outside;
        }
        EXPECT_TRUE(found) << to_text(f);
    }
    EXPECT_THROW(lhv_invariance_witness(scenarios::detection_loophole_model<Rational>(), sop_rule_with(kAnd2)),
                 std::invalid_argument);
}
