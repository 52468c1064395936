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


// Seeded random inputs shared by the property tests and the acceptance run.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include <bellscope/bellscope.hpp>

namespace gen {

using namespace bellscope;

/// Up to `max_support` strategies with positive rational weights summing to 1.
inline LhvModel<Rational> random_model(unsigned n, std::mt19937_64 &rng, unsigned max_support = 6) {
    const std::uint64_t masks = std::uint64_t{1} << n;
    std::uniform_int_distribution<std::uint64_t> mask(0, masks - 1);
    std::uniform_int_distribution<unsigned> size(1, max_support), raw(1, 17);
    const unsigned count = size(rng);
    std::vector<long> w(count);
    for (auto &v : w) {
        v = raw(rng);
    }
    const long total = std::accumulate(w.begin(), w.end(), 0L);
    std::vector<WeightedStrategy<Rational>> support;
    for (unsigned i = 0; i < count; ++i) {
        support.push_back({Rational{w[i]} / Rational{total}, DeterministicStrategy{n, mask(rng), mask(rng)}});
    }
    return LhvModel<Rational>{n, std::move(support)};
}

/// A random acyclic linear rule. With `allow_outcomes` false the rule is SP.
inline SelectionRule random_linear_rule(unsigned n, std::mt19937_64 &rng, bool allow_outcomes) {
    std::uniform_int_distribution<unsigned> kdist(1, n);
    const unsigned k = kdist(rng);
    std::uniform_int_distribution<std::uint64_t> xmask(0, (std::uint64_t{1} << k) - 1);
    std::bernoulli_distribution coin(0.5);
    std::vector<unsigned> order(n);
    std::iota(order.begin(), order.end(), 0U);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<PartyRule> parties(n);
    std::uint64_t earlier = 0;
    for (unsigned pos = 0; pos < n; ++pos) {
        const unsigned j = order[pos];
        std::uint64_t m_mask = 0;
        if (allow_outcomes) {
            for (unsigned i = 0; i < n; ++i) {
                if (((earlier >> i) & 1U) && coin(rng)) {
                    m_mask |= std::uint64_t{1} << i;
                }
            }
        }
        parties[j] = LinearRule{xmask(rng), m_mask, coin(rng) ? 1U : 0U};
        earlier |= std::uint64_t{1} << j;
    }
    return SelectionRule{n, k, std::move(parties)};
}

} // namespace gen
