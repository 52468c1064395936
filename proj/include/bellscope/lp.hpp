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
 * Dense tableau simplex for problems in standard form
 *
 *     minimize  c.x   subject to  A x = b,  x >= 0,  b >= 0.
 *
 * Bland's rule picks both the entering column (lowest index with a negative
 * reduced cost) and the leaving row (lowest basic index among minimum ratios),
 * so the pivot sequence, and with it the reported dual, is fully determined by
 * the column order. Instantiated with `double` (tolerance 1e-9) or `Rational`
 * (exact, tolerance 0).
 */

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace bellscope {

enum class LpStatus { optimal, infeasible, unbounded };

template <Scalar T> struct LpProblem {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<T> a;    // row-major, rows x cols
    std::vector<T> b;    // rows, nonnegative
    std::vector<T> cost; // cols

    LpProblem(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c), b(r), cost(c) {}

    T &at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const T &at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

template <Scalar T> struct LpSolution {
    LpStatus status = LpStatus::infeasible;
    T objective{};
    std::vector<T> x;    // primal values, one per column
    std::vector<T> dual; // y = c_B B^-1, one per row
    std::size_t pivots = 0;
};

namespace detail {

template <Scalar T> class Tableau {
  public:
    Tableau(const LpProblem<T> &p, bool artificials)
        : rows_(p.rows), structural_(p.cols), width_(p.cols + (artificials ? p.rows : 0)),
          t_(rows_ * width_), rhs_(p.b), basis_(rows_), identity_col_(rows_) {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < structural_; ++c) {
                t_[r * width_ + c] = p.at(r, c);
            }
            if (artificials) {
                t_[r * width_ + structural_ + r] = T{1};
                basis_[r] = structural_ + r;
                identity_col_[r] = structural_ + r;
            }
        }
    }

    void set_basis(const std::vector<std::size_t> &basis) {
        if (basis.size() != rows_) {
            throw std::invalid_argument("initial basis must have one column per row");
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            const std::size_t c = basis[r];
            if (c >= structural_) {
                throw std::invalid_argument("initial basis column out of range");
            }
            for (std::size_t i = 0; i < rows_; ++i) {
                if (at(i, c) != (i == r ? T{1} : T{0})) {
                    throw std::invalid_argument("initial basis columns must form an identity");
                }
            }
        }
        basis_ = basis;
        identity_col_ = basis;
    }

    // Reduced costs for the given column costs (columns beyond `costs` cost 0).
    void price(const std::vector<T> &costs) {
        costs_ = costs;
        costs_.resize(width_, T{0});
        reduced_.assign(width_, T{0});
        for (std::size_t c = 0; c < width_; ++c) {
            T acc = costs_[c];
            for (std::size_t r = 0; r < rows_; ++r) {
                const T &e = at(r, c);
                if (e != T{0}) {
                    acc -= costs_[basis_[r]] * e;
                }
            }
            reduced_[c] = acc;
        }
    }

    // Runs Bland pivots over columns [0, enterable). Returns false when unbounded.
    bool optimize(std::size_t enterable) {
        const T tol = scalar_traits<T>::tolerance();
        const std::size_t limit = 64 * (rows_ + width_) + 1000;
        for (;;) {
            std::size_t enter = enterable;
            for (std::size_t c = 0; c < enterable; ++c) {
                if (reduced_[c] < -tol) {
                    enter = c;
                    break;
                }
            }
            if (enter == enterable) {
                return true;
            }
            std::optional<std::size_t> leave;
            T best{};
            for (std::size_t r = 0; r < rows_; ++r) {
                const T &e = at(r, enter);
                if (e > tol) {
                    T ratio = rhs_[r] / e;
                    if (!leave || ratio < best - tol) {
                        leave = r;
                        best = ratio;
                    } else if (!(ratio > best + tol) && basis_[r] < basis_[*leave]) {
                        leave = r;
                    }
                }
            }
            if (!leave) {
                return false;
            }
            pivot(*leave, enter);
            if (++pivots_ > limit) {
                throw std::runtime_error("simplex exceeded its pivot limit (" + std::to_string(limit) + ")");
            }
        }
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const T inv = T{1} / at(pr, pc);
        T *prow = &t_[pr * width_];
        for (std::size_t c = 0; c < width_; ++c) {
            if (prow[c] != T{0}) {
                prow[c] *= inv;
            }
        }
        prow[pc] = T{1};
        rhs_[pr] *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == pr) {
                continue;
            }
            T *row = &t_[r * width_];
            const T f = row[pc];
            if (f == T{0}) {
                continue;
            }
            for (std::size_t c = 0; c < width_; ++c) {
                if (prow[c] != T{0}) {
                    row[c] -= f * prow[c];
                }
            }
            row[pc] = T{0};
            rhs_[r] -= f * rhs_[pr];
        }
        const T f = reduced_[pc];
        if (f != T{0}) {
            for (std::size_t c = 0; c < width_; ++c) {
                if (prow[c] != T{0}) {
                    reduced_[c] -= f * prow[c];
                }
            }
            reduced_[pc] = T{0};
        }
        basis_[pr] = pc;
    }

    // Pivots basic artificials out at zero level; rows with no structural
    // entry are redundant and keep their artificial.
    void expel_artificials() {
        const T tol = scalar_traits<T>::tolerance();
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < structural_) {
                continue;
            }
            for (std::size_t c = 0; c < structural_; ++c) {
                if (abs_value(at(r, c)) > tol) {
                    pivot(r, c);
                    ++pivots_;
                    break;
                }
            }
        }
    }

    T objective() const {
        T z{0};
        for (std::size_t r = 0; r < rows_; ++r) {
            z += costs_[basis_[r]] * rhs_[r];
        }
        return z;
    }

    std::vector<T> primal() const {
        std::vector<T> x(structural_, T{0});
        for (std::size_t r = 0; r < rows_; ++r) {
            if (basis_[r] < structural_) {
                x[basis_[r]] = rhs_[r];
            }
        }
        return x;
    }

    // y_i = sum_r c_{B_r} (B^-1)_{r,i}; B^-1 lives in the columns that started as identity.
    std::vector<T> dual() const {
        std::vector<T> y(rows_, T{0});
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc{0};
            for (std::size_t r = 0; r < rows_; ++r) {
                const T &e = at(r, identity_col_[i]);
                if (e != T{0}) {
                    acc += costs_[basis_[r]] * e;
                }
            }
            y[i] = acc;
        }
        return y;
    }

    std::size_t pivots() const { return pivots_; }

  private:
    const T &at(std::size_t r, std::size_t c) const { return t_[r * width_ + c]; }

    std::size_t rows_, structural_, width_;
    std::vector<T> t_;
    std::vector<T> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> identity_col_;
    std::vector<T> costs_;
    std::vector<T> reduced_;
    std::size_t pivots_ = 0;
};

} // namespace detail

/**
 * Solves the standard-form problem. When `initial_basis` is given, its columns
 * must already form an identity (one per row) and phase I is skipped;
 * otherwise artificial columns are added and driven to zero first.
 */
template <Scalar T>
LpSolution<T> minimize(const LpProblem<T> &problem,
                       const std::optional<std::vector<std::size_t>> &initial_basis = std::nullopt) {
    if (problem.a.size() != problem.rows * problem.cols || problem.b.size() != problem.rows ||
        problem.cost.size() != problem.cols) {
        throw std::invalid_argument("inconsistent LP dimensions");
    }
    for (const auto &v : problem.b) {
        if (v < T{0}) {
            throw std::invalid_argument("standard form needs a nonnegative right-hand side");
        }
    }
    const T tol = scalar_traits<T>::tolerance();
    const bool phase_one = !initial_basis.has_value();
    detail::Tableau<T> tab(problem, phase_one);
    LpSolution<T> out;
    if (phase_one) {
        std::vector<T> ones(problem.cols + problem.rows, T{0});
        for (std::size_t r = 0; r < problem.rows; ++r) {
            ones[problem.cols + r] = T{1};
        }
        tab.price(ones);
        tab.optimize(problem.cols);
        if (tab.objective() > tol) {
            out.status = LpStatus::infeasible;
            out.pivots = tab.pivots();
            return out;
        }
        tab.expel_artificials();
    } else {
        tab.set_basis(*initial_basis);
    }
    tab.price(problem.cost);
    if (!tab.optimize(problem.cols)) {
        out.status = LpStatus::unbounded;
        out.pivots = tab.pivots();
        return out;
    }
    out.status = LpStatus::optimal;
    out.objective = tab.objective();
    out.x = tab.primal();
    out.dual = tab.dual();
    out.pivots = tab.pivots();
    return out;
}

} // namespace bellscope
