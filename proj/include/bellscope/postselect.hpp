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
 * Setting post-selection (SP) and setting-output post-selection (SOP).
 *
 * A rule fixes every party's setting as s_j = g_j(m^{\j}, x), where x is the
 * conditioning string and m^{\j} the other parties' outcomes. Applying a rule
 * to p(m|s) keeps, for each x, the runs whose uniformly drawn settings satisfy
 * every constraint, and reports the parity correlator among the kept runs.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "boolfn.hpp"
#include "conditional_table.hpp"
#include "geometry.hpp"
#include "lhv.hpp"
#include "scalar.hpp"

namespace bellscope {

/// g_j = (x_mask . x) xor (m_mask . m) xor constant; m_mask must not include party j itself.
struct LinearRule {
    std::uint64_t x_mask = 0;
    std::uint64_t m_mask = 0;
    unsigned constant = 0;

    friend bool operator==(const LinearRule &, const LinearRule &) = default;
};

/**
 * g_j as a full truth table of arity (n-1)+k. Input layout: the n-1 bits of
 * m^{\j} (parties in order, j skipped) occupy the low bits, x sits above them.
 */
struct TableRule {
    BooleanFunction table;

    friend bool operator==(const TableRule &, const TableRule &) = default;
};

using PartyRule = std::variant<LinearRule, TableRule>;

/// m with bit j (1-based) removed.
inline std::uint64_t drop_bit(std::uint64_t m, unsigned j) {
    const std::uint64_t low = m & ((std::uint64_t{1} << (j - 1)) - 1);
    return low | ((m >> j) << (j - 1));
}

class SelectionRule {
  public:
    SelectionRule(unsigned n, unsigned k, std::vector<PartyRule> parties)
        : n_(n), k_(k), parties_(std::move(parties)) {
        if (n_ < 1 || n_ > kMaxTableParties) {
            throw std::invalid_argument("selection rules support 1.." + std::to_string(kMaxTableParties) + " parties");
        }
        if (k_ < 1 || k_ > n_) {
            throw std::invalid_argument("conditioning length k must satisfy 1 <= k <= n");
        }
        if (parties_.size() != n_) {
            throw std::invalid_argument("selection rule needs one g_j per party");
        }
        for (unsigned j = 1; j <= n_; ++j) {
            const auto &pr = parties_[j - 1];
            if (const auto *lin = std::get_if<LinearRule>(&pr)) {
                if (lin->x_mask >> k_) {
                    throw std::invalid_argument("party " + std::to_string(j) + ": x_mask references bits beyond k");
                }
                if (lin->m_mask >> n_) {
                    throw std::invalid_argument("party " + std::to_string(j) + ": m_mask references parties beyond n");
                }
                if ((lin->m_mask >> (j - 1)) & 1U) {
                    throw std::invalid_argument("party " + std::to_string(j) + ": m_mask may not read its own outcome");
                }
                if (lin->constant > 1) {
                    throw std::invalid_argument("party " + std::to_string(j) + ": constant must be a bit");
                }
            } else {
                const auto &tab = std::get<TableRule>(pr).table;
                if (tab.arity() != n_ - 1 + k_) {
                    throw std::invalid_argument("party " + std::to_string(j) + ": table rule must have arity n-1+k = " +
                                                std::to_string(n_ - 1 + k_));
                }
            }
        }
    }

    /// s_j = x_j for every party: the unpost-selected experiment.
    static SelectionRule identity(unsigned n) {
        std::vector<PartyRule> parties;
        for (unsigned j = 0; j < n; ++j) {
            parties.emplace_back(LinearRule{std::uint64_t{1} << j, 0, 0});
        }
        return SelectionRule{n, n, std::move(parties)};
    }

    unsigned parties() const { return n_; }
    unsigned conditioning() const { return k_; }
    const std::vector<PartyRule> &rules() const { return parties_; }

    /// g_j(m^{\j}, x) for party j (1-based); m is the full outcome string.
    unsigned setting(unsigned j, std::uint64_t m, std::uint64_t x) const {
        const auto &pr = parties_[j - 1];
        if (const auto *lin = std::get_if<LinearRule>(&pr)) {
            return parity(lin->x_mask & x) ^ parity(lin->m_mask & m) ^ lin->constant;
        }
        return std::get<TableRule>(pr).table((x << (n_ - 1)) | drop_bit(m, j));
    }

    /// The full settings string demanded by the rule for outcomes m at x.
    std::uint64_t settings(std::uint64_t m, std::uint64_t x) const {
        std::uint64_t s = 0;
        for (unsigned j = 1; j <= n_; ++j) {
            s |= static_cast<std::uint64_t>(setting(j, m, x)) << (j - 1);
        }
        return s;
    }

    /// g_j as a truth table over (m^{\j}, x), whatever its representation.
    BooleanFunction as_function(unsigned j) const {
        const auto &pr = parties_[j - 1];
        if (const auto *tab = std::get_if<TableRule>(&pr)) {
            return tab->table;
        }
        const auto &lin = std::get<LinearRule>(pr);
        // Move the m_mask into the m^{\j} coordinates.
        const std::uint64_t packed = ((lin.x_mask) << (n_ - 1)) | drop_bit(lin.m_mask, j);
        return BooleanFunction::linear(n_ - 1 + k_, packed, lin.constant);
    }

    /// Mask of parties whose outcomes g_j actually reads.
    std::uint64_t outcome_dependencies(unsigned j) const {
        const auto &pr = parties_[j - 1];
        if (const auto *lin = std::get_if<LinearRule>(&pr)) {
            return lin->m_mask;
        }
        const auto &tab = std::get<TableRule>(pr).table;
        std::uint64_t deps = 0;
        for (unsigned i = 1; i <= n_; ++i) {
            if (i == j) {
                continue;
            }
            const unsigned input = i < j ? i : i - 1;
            if (depends_on(tab, input)) {
                deps |= std::uint64_t{1} << (i - 1);
            }
        }
        return deps;
    }

    friend bool operator==(const SelectionRule &, const SelectionRule &) = default;

  private:
    unsigned n_;
    unsigned k_;
    std::vector<PartyRule> parties_;
};

enum class RuleKind { sp, sop };

inline const char *to_string(RuleKind k) { return k == RuleKind::sp ? "sp" : "sop"; }

struct Classification {
    RuleKind kind = RuleKind::sp;
    bool linear = true;
    /// No cycle in "g_j reads m_i". Only acyclic (adaptive) rules keep every
    /// selection probability at 2^-n and the local polytope intact.
    bool acyclic = true;
};

/// Parties in an order where every g_j only reads outcomes of earlier parties; empty when cyclic.
inline std::vector<unsigned> adaptive_order(const SelectionRule &rule) {
    const unsigned n = rule.parties();
    std::vector<std::uint64_t> deps(n);
    for (unsigned j = 1; j <= n; ++j) {
        deps[j - 1] = rule.outcome_dependencies(j);
    }
    std::vector<unsigned> order;
    std::uint64_t placed = 0;
    while (order.size() < n) {
        bool progressed = false;
        for (unsigned j = 1; j <= n; ++j) {
            const std::uint64_t bit = std::uint64_t{1} << (j - 1);
            if (!(placed & bit) && (deps[j - 1] & ~placed) == 0) {
                order.push_back(j);
                placed |= bit;
                progressed = true;
            }
        }
        if (!progressed) {
            return {};
        }
    }
    return order;
}

inline Classification classify(const SelectionRule &rule) {
    Classification c;
    for (unsigned j = 1; j <= rule.parties(); ++j) {
        if (rule.outcome_dependencies(j) != 0) {
            c.kind = RuleKind::sop;
        }
        if (!std::holds_alternative<LinearRule>(rule.rules()[j - 1]) && !is_linear(rule.as_function(j))) {
            c.linear = false;
        }
    }
    c.acyclic = !adaptive_order(rule).empty();
    return c;
}

/// Raised when no run survives post-selection at some x.
class ZeroSelectionError : public std::domain_error {
  public:
    explicit ZeroSelectionError(std::uint64_t x, unsigned k)
        : std::domain_error("selection probability is zero at x = " + BitString{k, x}.to_string()), x_(x) {}
    std::uint64_t x() const { return x_; }

  private:
    std::uint64_t x_;
};

template <Scalar T> struct PostSelectionReport {
    CorrelatorVector<T> correlator;       // over x
    std::vector<T> selection_probability; // per x, over uniform s and table-distributed m
    T kept_fraction{};                    // mean selection probability over uniform x
};

/**
 * For each x: sum over m of 2^-n p(m | s = G(m, x)), since the rule pins down
 * the whole settings string once m and x are known.
 */
template <Scalar T> PostSelectionReport<T> apply(const ConditionalTable<T> &table, const SelectionRule &rule) {
    if (table.parties() != rule.parties()) {
        throw std::invalid_argument("table has " + std::to_string(table.parties()) + " parties but the rule has " +
                                    std::to_string(rule.parties()));
    }
    const unsigned k = rule.conditioning();
    const std::uint64_t xs = std::uint64_t{1} << k;
    const T setting_weight = scalar_traits<T>::from_ratio(1, static_cast<std::int64_t>(table.outcomes()));
    std::vector<T> corr(xs), sel(xs);
    T total{0};
    for (std::uint64_t x = 0; x < xs; ++x) {
        T kept{0}, odd{0};
        for (std::uint64_t m = 0; m < table.outcomes(); ++m) {
            const T &w = table.at(rule.settings(m, x), m);
            if (w == T{0}) {
                continue;
            }
            kept += w;
            if (parity(m)) {
                odd += w;
            }
        }
        if (!(kept > T{0})) {
            throw ZeroSelectionError(x, k);
        }
        corr[x] = odd / kept;
        sel[x] = kept * setting_weight;
        total += sel[x];
    }
    return {CorrelatorVector<T>{k, std::move(corr)}, std::move(sel),
            total / scalar_traits<T>::from_ratio(static_cast<std::int64_t>(xs), 1)};
}

template <Scalar T> struct PredicateReport {
    CorrelatorVector<T> correlator; // over s
    std::vector<T> kept_weight;     // per s: sum of p(m|s) over kept m
};

/// Keeps the (s, m) events accepted by `keep` and conditions the parity on them, per s.
template <Scalar T, class Keep> PredicateReport<T> apply_predicate(const ConditionalTable<T> &table, Keep &&keep) {
    const std::uint64_t size = table.outcomes();
    std::vector<T> corr(size), kept_w(size);
    for (std::uint64_t s = 0; s < size; ++s) {
        T kept{0}, odd{0};
        for (std::uint64_t m = 0; m < size; ++m) {
            if (!keep(s, m)) {
                continue;
            }
            kept += table.at(s, m);
            if (parity(m)) {
                odd += table.at(s, m);
            }
        }
        if (!(kept > T{0})) {
            throw ZeroSelectionError(s, table.parties());
        }
        corr[s] = odd / kept;
        kept_w[s] = kept;
    }
    return {CorrelatorVector<T>{table.parties(), std::move(corr)}, std::move(kept_w)};
}

/**
 * joint_table -> apply -> membership for a linear rule. For acyclic linear
 * rules the result is inside for every LHV model.
 */
template <Scalar T> MembershipResult<T> lhv_invariance_witness(const LhvModel<T> &model, const SelectionRule &rule) {
    if (!classify(rule).linear) {
        throw std::invalid_argument("lhv_invariance_witness requires a linear rule");
    }
    return membership(apply(joint_table(model), rule).correlator);
}

} // namespace bellscope
