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


#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace bellscope {

/// Point of the correlator hypercube: entry x is p(parity of outcomes = 1 | x).
template <Scalar T> struct CorrelatorVector {
    unsigned k = 0;
    std::vector<T> entries;

    CorrelatorVector() = default;
    CorrelatorVector(unsigned arity, std::vector<T> values) : k(arity), entries(std::move(values)) {
        if (k > 24 || entries.size() != (std::size_t{1} << k)) {
            throw std::invalid_argument("correlator vector needs exactly 2^k entries");
        }
    }

    std::size_t size() const { return entries.size(); }
    const T &operator[](std::size_t x) const { return entries[x]; }
    T &operator[](std::size_t x) { return entries[x]; }

    /// Throws unless every entry lies in [0, 1] (up to the scalar tolerance).
    void check_range() const {
        const T tol = scalar_traits<T>::tolerance();
        for (std::size_t x = 0; x < entries.size(); ++x) {
            if (entries[x] < -tol || entries[x] > T{1} + tol) {
                throw std::domain_error("correlator entry " + std::to_string(x) + " = " +
                                        scalar_traits<T>::to_string(entries[x]) + " lies outside [0,1]");
            }
        }
    }

    friend bool operator==(const CorrelatorVector &, const CorrelatorVector &) = default;
};

template <Scalar To, Scalar From> CorrelatorVector<To> convert(const CorrelatorVector<From> &p) {
    std::vector<To> e;
    e.reserve(p.size());
    for (const auto &v : p.entries) {
        e.push_back(scalar_cast<To>(v));
    }
    return CorrelatorVector<To>{p.k, std::move(e)};
}

/// Largest entrywise deviation, in double precision.
template <Scalar T, Scalar U> double max_abs_difference(const CorrelatorVector<T> &a, const CorrelatorVector<U> &b) {
    if (a.k != b.k) {
        throw std::invalid_argument("correlator vectors differ in arity");
    }
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::fabs(scalar_traits<T>::to_double(a[i]) - scalar_traits<U>::to_double(b[i])));
    }
    return m;
}

} // namespace bellscope
