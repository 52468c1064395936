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


#include <gtest/gtest.h>

#include <bellscope/bellscope.hpp>

using namespace bellscope;

TEST(Scenarios, DeterministicImagePasses) {
    for (unsigned n = 1; n <= 4; ++n) {
        const auto r = scenarios::run_theorem1(n);
        EXPECT_TRUE(r.passed()) << scenarios::to_json(r).dump(2);
        EXPECT_EQ(r.quantities.at("image_size"), 2U << n);
    }
    EXPECT_THROW(scenarios::run_theorem1(5), std::invalid_argument);
}

TEST(Scenarios, ExactConstructionsPass) {
    for (const auto &r : {scenarios::run_detection_loophole(), scenarios::run_ghz_mermin_sp(),
                          scenarios::run_sixparty_triple_and()}) {
        EXPECT_TRUE(r.passed()) << scenarios::to_json(r).dump(2);
        for (const auto &c : r.checks) {
            EXPECT_TRUE(c.pass) << r.scenario << ": " << c.name;
        }
    }
}

TEST(Scenarios, ReportsAreReproducible) {
    scenarios::ScenarioOptions opt;
    opt.search.restarts = 4;
    for (const auto &name : {"theorem1", "detection-loophole", "ghz-mermin-sp", "sixparty-triple-and"}) {
        const auto a = scenarios::to_json(scenarios::run_named(name, opt), false).dump();
        const auto b = scenarios::to_json(scenarios::run_named(name, opt), false).dump();
        EXPECT_EQ(a, b) << name;
        EXPECT_EQ(a.find("duration"), std::string::npos);
    }
}

TEST(Scenarios, SmallTsirelsonSearch) {
    SearchConfig cfg;
    cfg.restarts = 16;
    const auto r = scenarios::run_tsirelson(cfg, 200);
    EXPECT_TRUE(r.passed()) << scenarios::to_json(r).dump(2);
    EXPECT_EQ(r.seed, cfg.seed);
    cfg.threads = 1;
    EXPECT_EQ(scenarios::to_json(scenarios::run_tsirelson(cfg, 200), false), scenarios::to_json(r, false));
}

TEST(Scenarios, TemplatesAreAcyclicAndLinear) {
    const auto templates = scenarios::two_party_linear_templates();
    EXPECT_EQ(templates.size(), 192U);
    unsigned sp = 0;
    for (const auto &t : templates) {
        const auto c = classify(t);
        EXPECT_TRUE(c.linear);
        EXPECT_TRUE(c.acyclic);
        sp += c.kind == RuleKind::sp;
    }
    EXPECT_EQ(sp, 64U);
    EXPECT_DOUBLE_EQ(scenarios::classical_embedding_value(SelectionRule::identity(2)), 0.75);
}

TEST(Scenarios, UnknownNameThrows) {
    EXPECT_THROW(scenarios::run_named("bogus", {}), std::out_of_range);
    EXPECT_EQ(scenarios::scenario_names().size(), 6U);
}
