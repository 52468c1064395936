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
 * Derivative-free maximization over a box of periodic coordinates (angles of
 * period 2 pi). Each restart starts from a seeded random point and sweeps the
 * coordinates in order: a coarse scan over the full period picks a bracket,
 * golden-section search refines inside it. Restarts are independent, so they
 * run on worker threads and are merged in restart order.
 */

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace bellscope {

inline constexpr std::uint64_t kDefaultSeed = 20110701;

struct SearchConfig {
    unsigned restarts = 100;
    /// Iteration budget: coordinate sweeps per restart.
    unsigned max_sweeps = 30;
    unsigned grid_points = 8;
    unsigned golden_steps = 20;
    /// A restart has converged once a full sweep gains less than this.
    double tolerance = 1e-11;
    std::uint64_t seed = kDefaultSeed;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    void validate() const {
        if (restarts == 0 || max_sweeps == 0 || grid_points < 3 || golden_steps == 0) {
            throw std::invalid_argument("search counts must be positive (grid_points >= 3)");
        }
        if (!(tolerance > 0)) {
            throw std::invalid_argument("search tolerance must be positive");
        }
    }
};

struct RestartResult {
    double value = -INFINITY;
    std::vector<double> point;
    unsigned sweeps = 0;
    bool exhausted = false; // hit max_sweeps before converging
    std::uint64_t evaluations = 0;
};

struct SearchResult {
    double best_value = -INFINITY;
    std::vector<double> best_point;
    unsigned best_restart = 0;
    unsigned restarts = 0;
    unsigned exhausted_restarts = 0;
    std::uint64_t evaluations = 0;
};

/// splitmix64 of (seed, stream): independent, reproducible per-restart seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline double wrap_angle(double t) {
    constexpr double period = 2 * std::numbers::pi;
    t = std::fmod(t, period);
    return t < 0 ? t + period : t;
}

template <class Objective>
RestartResult maximize_from(const Objective &f, std::vector<double> x, const SearchConfig &cfg) {
    constexpr double period = 2 * std::numbers::pi;
    constexpr double inv_phi = 0.6180339887498949;
    RestartResult r;
    auto eval = [&](const std::vector<double> &p) {
        ++r.evaluations;
        return f(p);
    };
    double fx = eval(x);
    for (r.sweeps = 1; r.sweeps <= cfg.max_sweeps; ++r.sweeps) {
        const double start = fx;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double base = x[i];
            double best_t = base;
            double best_v = fx;
            auto probe = [&](double t) {
                x[i] = t;
                const double v = eval(x);
                if (v > best_v) {
                    best_v = v;
                    best_t = t;
                }
                return v;
            };
            const double h = period / cfg.grid_points;
            for (unsigned g = 1; g < cfg.grid_points; ++g) {
                probe(base + h * g);
            }
            double lo = best_t - h, hi = best_t + h;
            double c = hi - inv_phi * (hi - lo), d = lo + inv_phi * (hi - lo);
            double fc = probe(c), fd = probe(d);
            for (unsigned step = 0; step < cfg.golden_steps; ++step) {
                if (fc > fd) {
                    hi = d;
                    d = c;
                    fd = fc;
                    c = hi - inv_phi * (hi - lo);
                    fc = probe(c);
                } else {
                    lo = c;
                    c = d;
                    fc = fd;
                    d = lo + inv_phi * (hi - lo);
                    fd = probe(d);
                }
            }
            x[i] = wrap_angle(best_t);
            fx = best_v;
        }
        if (fx - start < cfg.tolerance) {
            break;
        }
    }
    if (r.sweeps > cfg.max_sweeps) {
        r.sweeps = cfg.max_sweeps;
        r.exhausted = true;
    }
    r.value = fx;
    r.point = std::move(x);
    return r;
}

/**
 * Multi-restart maximization of `f` over `dim` periodic coordinates. `f` is
 * called concurrently and must be pure. The merged result takes the largest
 * value; ties go to the lowest restart index.
 */
template <class Objective> SearchResult maximize_periodic(const Objective &f, std::size_t dim, const SearchConfig &cfg) {
    cfg.validate();
    std::vector<RestartResult> results(cfg.restarts);
    auto run = [&](unsigned restart) {
        std::mt19937_64 rng(derive_seed(cfg.seed, restart));
        std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
        std::vector<double> x(dim);
        for (auto &v : x) {
            v = angle(rng);
        }
        results[restart] = maximize_from(f, std::move(x), cfg);
    };

    unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
    threads = std::min(threads, cfg.restarts);
    if (threads <= 1) {
        for (unsigned i = 0; i < cfg.restarts; ++i) {
            run(i);
        }
    } else {
        std::atomic<unsigned> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (unsigned i = next++; i < cfg.restarts; i = next++) {
                    run(i);
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    SearchResult out;
    out.restarts = cfg.restarts;
    for (unsigned i = 0; i < cfg.restarts; ++i) {
        const auto &r = results[i];
        out.evaluations += r.evaluations;
        out.exhausted_restarts += r.exhausted ? 1 : 0;
        if (r.value > out.best_value) {
            out.best_value = r.value;
            out.best_point = r.point;
            out.best_restart = i;
        }
    }
    return out;
}

} // namespace bellscope
