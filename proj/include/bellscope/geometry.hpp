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
 * The correlator hypercube and the local polytope inside it.
 *
 * The local polytope over k conditioning bits is the convex hull of the
 * 2^(k+1) vertices of linear Boolean functions. Membership is decided by one
 * linear program in vertex form that measures the l1 distance from p to the
 * polytope:
 *
 *     minimize  sum_i (r+_i + r-_i)
 *     s.t.      sum_v lambda_v v_i + r+_i - r-_i = p_i    (one row per x)
 *               sum_v lambda_v                   = 1
 *               lambda, r+, r- >= 0
 *
 * Distance zero gives convex weights. Otherwise the optimal dual (c, -beta)
 * is a Bell inequality c.q <= beta valid on every vertex, with |c_i| <= 1 and
 * c.p - beta equal to the distance; at the optimum max |c_i| = 1.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "boolfn.hpp"
#include "correlator.hpp"
#include "lp.hpp"
#include "scalar.hpp"

namespace bellscope {

/// Largest conditioning arity accepted by the float LP.
inline constexpr unsigned kMaxMembershipArity = 12;
/// Largest conditioning arity accepted by the exact-rational LP.
inline constexpr unsigned kMaxExactMembershipArity = 6;

template <Scalar T> CorrelatorVector<T> vertex(const BooleanFunction &f) {
    std::vector<T> e(f.size());
    for (std::uint64_t x = 0; x < f.size(); ++x) {
        e[x] = f(x) ? T{1} : T{0};
    }
    return CorrelatorVector<T>{f.arity(), std::move(e)};
}

enum class Membership { inside, outside };

inline const char *to_string(Membership m) { return m == Membership::inside ? "inside" : "outside"; }

template <Scalar T> struct VertexWeight {
    BooleanFunction function;
    T weight;
};

/// A Bell inequality c.q <= bound and the amount by which the tested point breaks it.
template <Scalar T> struct Certificate {
    std::vector<T> coefficients;
    T bound;
    T violation;
};

template <Scalar T> struct MembershipResult {
    Membership status = Membership::inside;
    unsigned k = 0;
    std::vector<VertexWeight<T>> weights;     // inside only; zero weights omitted
    std::optional<Certificate<T>> certificate; // outside only
};

namespace detail {

// Vertex v = a + 2^k b is the function x -> (a.x) xor b, matching enumerate_linear.
inline unsigned linear_vertex_entry(unsigned k, std::uint64_t v, std::uint64_t x) {
    const std::uint64_t a = v & ((std::uint64_t{1} << k) - 1);
    const unsigned b = static_cast<unsigned>(v >> k);
    return parity(a & x) ^ b;
}

inline void check_membership_arity(unsigned k, bool exact) {
    const unsigned cap = exact ? kMaxExactMembershipArity : kMaxMembershipArity;
    if (k < 1 || k > cap) {
        throw std::invalid_argument(std::string(exact ? "exact" : "float") + " membership supports k in 1.." +
                                    std::to_string(cap) + ", got " + std::to_string(k));
    }
}

} // namespace detail

template <Scalar T> MembershipResult<T> membership(const CorrelatorVector<T> &p) {
    detail::check_membership_arity(p.k, scalar_traits<T>::exact);
    p.check_range();

    const unsigned k = p.k;
    const std::size_t dims = p.size();
    const std::size_t verts = 2 * dims;
    // Columns: lambda_0..lambda_{V-1}, r+_0..r+_{D-1}, r-_0..r-_{D-1}.
    LpProblem<T> lp(dims + 1, verts + 2 * dims);
    for (std::size_t v = 0; v < verts; ++v) {
        for (std::uint64_t x = 0; x < dims; ++x) {
            if (detail::linear_vertex_entry(k, v, x)) {
                lp.at(x, v) = T{1};
            }
        }
        lp.at(dims, v) = T{1};
    }
    for (std::size_t i = 0; i < dims; ++i) {
        lp.at(i, verts + i) = T{1};
        lp.at(i, verts + dims + i) = T{-1};
        lp.cost[verts + i] = T{1};
        lp.cost[verts + dims + i] = T{1};
        // Clamp float noise just below zero; the range check already bounded it.
        lp.b[i] = p[i] < T{0} ? T{0} : p[i];
    }
    lp.b[dims] = T{1};

    // Constant-0 vertex on the normalization row, r+ on every coordinate row.
    std::vector<std::size_t> basis(dims + 1);
    for (std::size_t i = 0; i < dims; ++i) {
        basis[i] = verts + i;
    }
    basis[dims] = 0;

    const auto sol = minimize(lp, basis);
    if (sol.status != LpStatus::optimal) {
        throw std::logic_error("membership LP did not reach an optimum");
    }

    MembershipResult<T> out;
    out.k = k;
    const T tol = scalar_traits<T>::tolerance();
    if (sol.objective <= tol) {
        out.status = Membership::inside;
        for (std::size_t v = 0; v < verts; ++v) {
            if (sol.x[v] > tol) {
                const std::uint64_t a = v & (dims - 1);
                out.weights.push_back({BooleanFunction::linear(k, a, static_cast<unsigned>(v >> k)), sol.x[v]});
            }
        }
        return out;
    }

    out.status = Membership::outside;
    Certificate<T> cert;
    cert.coefficients.assign(sol.dual.begin(), sol.dual.begin() + static_cast<std::ptrdiff_t>(dims));
    cert.bound = T{0} - sol.dual[dims];
    if constexpr (!scalar_traits<T>::exact) {
        T scale{0};
        for (const auto &c : cert.coefficients) {
            scale = std::max(scale, abs_value(c));
        }
        for (auto &c : cert.coefficients) {
            c /= scale;
        }
        cert.bound /= scale;
    }
    T lhs{0};
    for (std::size_t i = 0; i < dims; ++i) {
        lhs += cert.coefficients[i] * p[i];
    }
    cert.violation = lhs - cert.bound;
    out.certificate = std::move(cert);
    return out;
}

/// Zero inside the polytope, otherwise the violation of the normalized certificate.
template <Scalar T> T violation_magnitude(const CorrelatorVector<T> &p) {
    const auto r = membership(p);
    return r.status == Membership::inside ? T{0} : r.certificate->violation;
}

/// Best average agreement of any linear function with f, by enumerating the vertices.
inline Rational success_bound(const BooleanFunction &f) {
    if (f.arity() > kMaxMembershipArity) {
        throw std::invalid_argument("success_bound supports arity <= 12");
    }
    const std::uint64_t size = f.size();
    std::uint64_t best = 0;
    for (std::uint64_t v = 0; v < 2 * size; ++v) {
        std::uint64_t agree = 0;
        for (std::uint64_t x = 0; x < size; ++x) {
            agree += detail::linear_vertex_entry(f.arity(), v, x) == f(x);
        }
        best = std::max(best, agree);
    }
    return Rational{static_cast<long long>(best)} / Rational{static_cast<long long>(size)};
}

/**
 * max c.q over the local polytope of arity k, solved as an LP over the convex
 * weights (phase I included, no starting basis supplied).
 */
template <Scalar T> T maximize_linear(const std::vector<T> &objective, unsigned k) {
    detail::check_membership_arity(k, scalar_traits<T>::exact);
    const std::size_t dims = std::size_t{1} << k;
    if (objective.size() != dims) {
        throw std::invalid_argument("objective needs 2^k coefficients");
    }
    const std::size_t verts = 2 * dims;
    LpProblem<T> lp(1, verts);
    for (std::size_t v = 0; v < verts; ++v) {
        lp.at(0, v) = T{1};
        T value{0};
        for (std::uint64_t x = 0; x < dims; ++x) {
            if (detail::linear_vertex_entry(k, v, x)) {
                value += objective[x];
            }
        }
        lp.cost[v] = -value;
    }
    lp.b[0] = T{1};
    const auto sol = minimize(lp);
    if (sol.status != LpStatus::optimal) {
        throw std::logic_error("polytope maximization did not reach an optimum");
    }
    return -sol.objective;
}

/// success_bound computed through the LP route: agreement(q) = (#zeros + sum_x (2f(x)-1) q_x) / 2^k.
inline Rational success_bound_lp(const BooleanFunction &f) {
    const std::size_t size = f.size();
    std::vector<Rational> objective(size);
    long long zeros = 0;
    for (std::uint64_t x = 0; x < size; ++x) {
        objective[x] = f(x) ? Rational{1} : Rational{-1};
        zeros += f(x) == 0;
    }
    const Rational best = maximize_linear(objective, f.arity());
    return (Rational{zeros} + best) / Rational{static_cast<long long>(size)};
}

/// Average agreement of correlator p with the target function f.
template <Scalar T> T agreement(const CorrelatorVector<T> &p, const BooleanFunction &f) {
    if (p.k != f.arity()) {
        throw std::invalid_argument("agreement needs matching arity");
    }
    T acc{0};
    for (std::uint64_t x = 0; x < p.size(); ++x) {
        acc += f(x) ? p[x] : T{T{1} - p[x]};
    }
    return acc / scalar_traits<T>::from_ratio(static_cast<std::int64_t>(p.size()), 1);
}

} // namespace bellscope
