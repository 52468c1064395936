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
 * Local hidden-variable models. Each party's outcome is a one-bit function of
 * its own setting, m_j = a_j s_j xor b_j, with (a, b) fixed by the hidden
 * variable; a model is a finite weighted mixture of such strategies.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "boolfn.hpp"
#include "conditional_table.hpp"
#include "scalar.hpp"

namespace bellscope {

inline constexpr unsigned kMaxEnumeratedParties = 8;

/// One value of the hidden variable: per-party masks, party j at bit j-1.
struct DeterministicStrategy {
    unsigned n = 0;
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    DeterministicStrategy() = default;
    DeterministicStrategy(unsigned parties, std::uint64_t a_mask, std::uint64_t b_mask)
        : n(parties), a(a_mask), b(b_mask) {
        if (n < 1 || n > 63) {
            throw std::invalid_argument("strategy party count must be in 1..63");
        }
        if ((a | b) >> n) {
            throw std::invalid_argument("strategy masks reference parties beyond n");
        }
    }

    static DeterministicStrategy from_bits(const std::vector<unsigned> &a_bits, const std::vector<unsigned> &b_bits) {
        if (a_bits.size() != b_bits.size()) {
            throw std::invalid_argument("a and b must list one bit per party");
        }
        const auto a = BitString::from_bits(a_bits);
        const auto b = BitString::from_bits(b_bits);
        return DeterministicStrategy{a.length, a.value, b.value};
    }

    /// Outcome string for settings s.
    std::uint64_t outcomes(std::uint64_t s) const { return (a & s) ^ b; }

    friend bool operator==(const DeterministicStrategy &, const DeterministicStrategy &) = default;
};

/// s -> (a.s) xor (xor_j b_j). Always linear.
inline BooleanFunction global_function(const DeterministicStrategy &strat) {
    return BooleanFunction::linear(strat.n, strat.a, parity(strat.b));
}

/// All 4^n strategies, ordered by (b, a).
inline std::vector<DeterministicStrategy> enumerate_strategies(unsigned n) {
    if (n < 1 || n > kMaxEnumeratedParties) {
        throw std::invalid_argument("enumerate_strategies supports 1.." + std::to_string(kMaxEnumeratedParties) +
                                    " parties, got " + std::to_string(n));
    }
    const std::uint64_t masks = std::uint64_t{1} << n;
    std::vector<DeterministicStrategy> out;
    out.reserve(masks * masks);
    for (std::uint64_t b = 0; b < masks; ++b) {
        for (std::uint64_t a = 0; a < masks; ++a) {
            out.emplace_back(n, a, b);
        }
    }
    return out;
}

template <Scalar T> struct WeightedStrategy {
    T weight;
    DeterministicStrategy strategy;
};

/// A finite distribution over the hidden variable; the support index plays its role.
template <Scalar T> class LhvModel {
  public:
    LhvModel(unsigned n, std::vector<WeightedStrategy<T>> support) : n_(n), support_(std::move(support)) {
        if (support_.empty()) {
            throw std::invalid_argument("LHV model needs a nonempty support");
        }
        T total{0};
        for (const auto &ws : support_) {
            if (ws.strategy.n != n_) {
                throw std::invalid_argument("strategy party count does not match the model");
            }
            if (ws.weight < T{0}) {
                throw std::invalid_argument("LHV weights must be nonnegative");
            }
            total += ws.weight;
        }
        const T tol = scalar_traits<T>::exact ? T{0} : scalar_traits<T>::from_ratio(1, 1000000000000);
        if (abs_value(T{total - T{1}}) > tol) {
            throw std::invalid_argument("LHV weights must sum to 1, got " + scalar_traits<T>::to_string(total));
        }
    }

    /// A single deterministic strategy with weight one.
    static LhvModel deterministic(const DeterministicStrategy &s) { return LhvModel{s.n, {{T{1}, s}}}; }

    /// Equal mixture of the given strategies.
    static LhvModel uniform(unsigned n, const std::vector<DeterministicStrategy> &strategies) {
        std::vector<WeightedStrategy<T>> support;
        const auto w = scalar_traits<T>::from_ratio(1, static_cast<std::int64_t>(strategies.size()));
        for (const auto &s : strategies) {
            support.push_back({w, s});
        }
        return LhvModel{n, std::move(support)};
    }

    unsigned parties() const { return n_; }
    const std::vector<WeightedStrategy<T>> &support() const { return support_; }

  private:
    unsigned n_;
    std::vector<WeightedStrategy<T>> support_;
};

/// p(m|s) = sum over the support of w * [m = (a & s) xor b].
template <Scalar T> ConditionalTable<T> joint_table(const LhvModel<T> &model) {
    ConditionalTable<T> table(model.parties());
    for (const auto &ws : model.support()) {
        for (std::uint64_t s = 0; s < table.outcomes(); ++s) {
            table.at(s, ws.strategy.outcomes(s)) += ws.weight;
        }
    }
    return table;
}

} // namespace bellscope
