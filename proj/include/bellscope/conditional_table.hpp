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
 * Joint outcome distributions p(m|s) for n parties with one setting bit and
 * one outcome bit each, plus the parity correlator they induce.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolfn.hpp"
#include "correlator.hpp"
#include "scalar.hpp"

namespace bellscope {

inline constexpr unsigned kMaxTableParties = 12;

/// p(m|s) for all 2^n x 2^n pairs, stored column by column (one column per s).
template <Scalar T> class ConditionalTable {
  public:
    ConditionalTable() = default;

    explicit ConditionalTable(unsigned n) : n_(n) {
        if (n_ < 1 || n_ > kMaxTableParties) {
            throw std::invalid_argument("conditional tables support 1.." + std::to_string(kMaxTableParties) +
                                        " parties, got " + std::to_string(n_));
        }
        entries_.assign(std::size_t{1} << (2 * n_), T{0});
    }

    unsigned parties() const { return n_; }
    std::size_t outcomes() const { return std::size_t{1} << n_; }

    T &at(std::uint64_t s, std::uint64_t m) { return entries_[(s << n_) | m]; }
    const T &at(std::uint64_t s, std::uint64_t m) const { return entries_[(s << n_) | m]; }

    const std::vector<T> &entries() const { return entries_; }

    T column_sum(std::uint64_t s) const {
        T acc{0};
        for (std::uint64_t m = 0; m < outcomes(); ++m) {
            acc += at(s, m);
        }
        return acc;
    }

    /// Throws when a column has a negative entry or does not sum to one within `tol`.
    void check_normalized(const T &tol) const {
        for (std::uint64_t s = 0; s < outcomes(); ++s) {
            for (std::uint64_t m = 0; m < outcomes(); ++m) {
                if (at(s, m) < -tol) {
                    throw std::domain_error("negative probability in column " + std::to_string(s));
                }
            }
            if (abs_value(T{column_sum(s) - T{1}}) > tol) {
                throw std::domain_error("column " + std::to_string(s) + " does not sum to 1");
            }
        }
    }

    /**
     * True when, for every subset S of parties, the marginal of m_S does not
     * depend on the settings of the parties outside S.
     */
    bool is_non_signalling(const T &tol) const {
        const std::uint64_t full = outcomes() - 1;
        std::vector<T> ref, cur;
        for (std::uint64_t subset = 1; subset < full; ++subset) {
            const std::uint64_t outside = full & ~subset;
            for (std::uint64_t s = 0; s < outcomes(); ++s) {
                if ((s & outside) == 0) {
                    continue; // reference column for this choice of s on S
                }
                marginal(s & subset, subset, ref);
                marginal(s, subset, cur);
                for (std::size_t i = 0; i < ref.size(); ++i) {
                    if (abs_value(T{ref[i] - cur[i]}) > tol) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    friend bool operator==(const ConditionalTable &, const ConditionalTable &) = default;

  private:
    // Marginal of the outcomes on `subset` at settings s, indexed by m & subset.
    void marginal(std::uint64_t s, std::uint64_t subset, std::vector<T> &out) const {
        out.assign(outcomes(), T{0});
        for (std::uint64_t m = 0; m < outcomes(); ++m) {
            out[m & subset] += at(s, m);
        }
    }

    unsigned n_ = 0;
    std::vector<T> entries_;
};

template <Scalar To, Scalar From> ConditionalTable<To> convert(const ConditionalTable<From> &t) {
    ConditionalTable<To> out(t.parties());
    for (std::uint64_t s = 0; s < t.outcomes(); ++s) {
        for (std::uint64_t m = 0; m < t.outcomes(); ++m) {
            out.at(s, m) = scalar_cast<To>(t.at(s, m));
        }
    }
    return out;
}

/// Entry s = sum of p(m|s) over odd-parity m.
template <Scalar T> CorrelatorVector<T> correlator_vector(const ConditionalTable<T> &table) {
    std::vector<T> e(table.outcomes(), T{0});
    for (std::uint64_t s = 0; s < table.outcomes(); ++s) {
        for (std::uint64_t m = 0; m < table.outcomes(); ++m) {
            if (parity(m) != 0) {
                e[s] += table.at(s, m);
            }
        }
    }
    return CorrelatorVector<T>{table.parties(), std::move(e)};
}

/// Outcome relabelling m_j -> m_j xor (a_j s_j) xor b_j, per party, as two bit masks.
struct OutputRelabelling {
    std::uint64_t setting_flip = 0;
    std::uint64_t constant_flip = 0;

    friend bool operator==(const OutputRelabelling &, const OutputRelabelling &) = default;
};

template <Scalar T> ConditionalTable<T> relabel_outputs(const ConditionalTable<T> &table, const OutputRelabelling &r) {
    const std::uint64_t full = table.outcomes() - 1;
    if ((r.setting_flip | r.constant_flip) & ~full) {
        throw std::invalid_argument("relabelling references parties beyond n");
    }
    ConditionalTable<T> out(table.parties());
    for (std::uint64_t s = 0; s < table.outcomes(); ++s) {
        const std::uint64_t flip = (r.setting_flip & s) ^ r.constant_flip;
        for (std::uint64_t m = 0; m < table.outcomes(); ++m) {
            out.at(s, m ^ flip) = table.at(s, m);
        }
    }
    return out;
}

} // namespace bellscope
