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
 * Exact statevector simulation of n parties sharing a pure state, each
 * measuring one of two single-qubit +-1 observables. Outcome +1 is m_j = 0.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "conditional_table.hpp"

namespace bellscope {

using Complex = std::complex<double>;

class PureState {
  public:
    /// Validates the amplitude count (2^n) and unit norm within 1e-12.
    PureState(unsigned n, std::vector<Complex> amplitudes) : n_(n), amp_(std::move(amplitudes)) {
        if (n_ < 1 || n_ > kMaxTableParties) {
            throw std::invalid_argument("pure states support 1.." + std::to_string(kMaxTableParties) + " qubits");
        }
        if (amp_.size() != (std::size_t{1} << n_)) {
            throw std::invalid_argument("a pure state on n qubits needs 2^n amplitudes");
        }
        if (std::fabs(norm_squared() - 1.0) > 1e-12) {
            throw std::invalid_argument("state is not normalized (squared norm " + std::to_string(norm_squared()) + ")");
        }
    }

    /// Rescales arbitrary nonzero amplitudes to unit norm.
    static PureState normalized(unsigned n, std::vector<Complex> amplitudes) {
        double sq = 0;
        for (const auto &a : amplitudes) {
            sq += std::norm(a);
        }
        if (!(sq > 0)) {
            throw std::invalid_argument("cannot normalize the zero vector");
        }
        const double inv = 1.0 / std::sqrt(sq);
        for (auto &a : amplitudes) {
            a *= inv;
        }
        return PureState{n, std::move(amplitudes)};
    }

    static PureState basis(unsigned n, std::uint64_t index) {
        std::vector<Complex> amp(std::size_t{1} << n);
        amp.at(index) = 1.0;
        return PureState{n, std::move(amp)};
    }

    /// |a> (x) |b> with the qubits of `low` first (parties 1..low.n).
    static PureState tensor(const PureState &low, const PureState &high) {
        std::vector<Complex> amp(std::size_t{1} << (low.n_ + high.n_));
        for (std::size_t h = 0; h < high.amp_.size(); ++h) {
            for (std::size_t l = 0; l < low.amp_.size(); ++l) {
                amp[(h << low.n_) | l] = low.amp_[l] * high.amp_[h];
            }
        }
        return PureState{low.n_ + high.n_, std::move(amp)};
    }

    unsigned qubits() const { return n_; }
    const std::vector<Complex> &amplitudes() const { return amp_; }

    double norm_squared() const {
        double sq = 0;
        for (const auto &a : amp_) {
            sq += std::norm(a);
        }
        return sq;
    }

  private:
    unsigned n_;
    std::vector<Complex> amp_;
};

/// (|0...0> + |1...1>) / sqrt(2).
inline PureState ghz_state(unsigned n) {
    if (n < 2) {
        throw std::invalid_argument("GHZ state needs at least 2 qubits");
    }
    std::vector<Complex> amp(std::size_t{1} << n);
    amp.front() = std::numbers::sqrt2 / 2;
    amp.back() = std::numbers::sqrt2 / 2;
    return PureState{n, std::move(amp)};
}

/// Bloch direction (sin t cos p, sin t sin p, cos t); unit by construction.
struct BlochDirection {
    double theta = 0;
    double phi = 0;

    static BlochDirection x() { return {std::numbers::pi / 2, 0}; }
    static BlochDirection y() { return {std::numbers::pi / 2, std::numbers::pi / 2}; }
    static BlochDirection z() { return {0, 0}; }

    /// The opposite direction, i.e. the same observable with its outcomes swapped.
    BlochDirection flipped() const { return {std::numbers::pi - theta, phi + std::numbers::pi}; }
};

/// One observable per setting bit.
struct ObservablePair {
    BlochDirection setting0;
    BlochDirection setting1;

    const BlochDirection &operator[](unsigned s) const { return s ? setting1 : setting0; }
};

struct QuantumStrategy {
    PureState state;
    std::vector<ObservablePair> observables;

    QuantumStrategy(PureState st, std::vector<ObservablePair> obs) : state(std::move(st)), observables(std::move(obs)) {
        if (observables.size() != state.qubits()) {
            throw std::invalid_argument("need exactly one observable pair per qubit");
        }
    }

    unsigned parties() const { return state.qubits(); }
};

namespace detail {

// Rows <+n| and <-n|: applying this maps the eigenbasis of n.sigma onto |0>, |1>.
struct Basis2 {
    Complex u00, u01, u10, u11;
};

inline Basis2 measurement_basis(const BlochDirection &d) {
    const double c = std::cos(d.theta / 2);
    const double s = std::sin(d.theta / 2);
    const Complex e = std::polar(1.0, -d.phi);
    return {c, e * s, s, -e * c};
}

inline void apply_local(std::vector<Complex> &amp, unsigned qubit, const Basis2 &u) {
    const std::size_t bit = std::size_t{1} << qubit;
    for (std::size_t i = 0; i < amp.size(); ++i) {
        if (i & bit) {
            continue;
        }
        const Complex a0 = amp[i];
        const Complex a1 = amp[i | bit];
        amp[i] = u.u00 * a0 + u.u01 * a1;
        amp[i | bit] = u.u10 * a0 + u.u11 * a1;
    }
}

} // namespace detail

/// p(m|s) = <psi| (x)_j P_j(s_j, m_j) |psi>, evaluated by rotating each qubit into its measurement basis.
inline ConditionalTable<double> joint_table(const QuantumStrategy &strategy) {
    const unsigned n = strategy.parties();
    ConditionalTable<double> table(n);
    std::vector<detail::Basis2> bases[2];
    for (unsigned s = 0; s < 2; ++s) {
        for (const auto &obs : strategy.observables) {
            bases[s].push_back(detail::measurement_basis(obs[s]));
        }
    }
    std::vector<Complex> work;
    for (std::uint64_t s = 0; s < table.outcomes(); ++s) {
        work = strategy.state.amplitudes();
        for (unsigned j = 0; j < n; ++j) {
            detail::apply_local(work, j, bases[(s >> j) & 1U][j]);
        }
        for (std::uint64_t m = 0; m < table.outcomes(); ++m) {
            table.at(s, m) = std::norm(work[m]);
        }
    }
    return table;
}

/// A strategy whose reported outcomes are relabelled after measurement.
struct RelabelledStrategy {
    QuantumStrategy base;
    OutputRelabelling relabel;
};

inline ConditionalTable<double> joint_table(const RelabelledStrategy &strategy) {
    return relabel_outputs(joint_table(strategy.base), strategy.relabel);
}

/// Every party measures X for setting 0 and Y for setting 1.
inline std::vector<ObservablePair> xy_observables(unsigned n) {
    return std::vector<ObservablePair>(n, ObservablePair{BlochDirection::x(), BlochDirection::y()});
}

} // namespace bellscope
