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


#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include <bellscope/search.hpp>

using namespace bellscope;

namespace {

double bumps(const std::vector<double> &p) { return std::cos(p[0] - 1) + std::cos(p[1] + 2) + 0.5 * std::cos(2 * p[2]); }

} // namespace

TEST(Search, FindsPeriodicMaximum) {
    SearchConfig cfg;
    cfg.restarts = 8;
    const auto r = maximize_periodic(bumps, 3, cfg);
    EXPECT_NEAR(r.best_value, 2.5, 1e-10);
    EXPECT_NEAR(std::cos(r.best_point[0] - 1), 1, 1e-8);
    EXPECT_EQ(r.restarts, 8U);
    EXPECT_GT(r.evaluations, 0U);
    for (double t : r.best_point) {
        EXPECT_GE(t, 0);
        EXPECT_LT(t, 2 * std::numbers::pi);
    }
}

TEST(Search, DeterministicAcrossThreadCounts) {
    SearchConfig cfg;
    cfg.restarts = 12;
    cfg.seed = 99;
    cfg.threads = 1;
    const auto a = maximize_periodic(bumps, 3, cfg);
    cfg.threads = 4;
    const auto b = maximize_periodic(bumps, 3, cfg);
    EXPECT_EQ(a.best_value, b.best_value);
    EXPECT_EQ(a.best_point, b.best_point);
    EXPECT_EQ(a.best_restart, b.best_restart);
    EXPECT_EQ(a.evaluations, b.evaluations);
    cfg.seed = 100;
    EXPECT_NE(maximize_periodic(bumps, 3, cfg).best_point, a.best_point);
}

TEST(Search, ReportsExhaustedBudget) {
    SearchConfig cfg;
    cfg.restarts = 3;
    cfg.max_sweeps = 1;
    cfg.tolerance = 1e-300;
    const auto r = maximize_periodic(bumps, 3, cfg);
    EXPECT_EQ(r.exhausted_restarts, 3U);
}

TEST(Search, ValidatesConfig) {
    SearchConfig cfg;
    cfg.restarts = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = {};
    cfg.tolerance = 0;
    EXPECT_THROW(maximize_periodic(bumps, 3, cfg), std::invalid_argument);
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_EQ(derive_seed(5, 7), derive_seed(5, 7));
    EXPECT_NEAR(wrap_angle(-0.5), 2 * std::numbers::pi - 0.5, 1e-15);
}
