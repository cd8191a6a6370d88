/*
 * Copyright 2026 The constlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CONSTLAB_JURY_HPP
#define CONSTLAB_JURY_HPP

#include "constlab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace constlab::jury {

/// Common-value oligarchy model: nested elites O_1 .. O_n decide by strict
/// majority of their members; member utility mixes an extractive share 1/i
/// with the probability that the elite majority matches the true state.
struct JuryConfig {
    int n = 500;
    double lambda = 0.5;   // weight on the extractive component
    double p = 0.6;        // per-voter signal accuracy, 1/2 < p < 1
    double eps = 1e-12;    // indifference tolerance; ties keep the status quo
    bool half_credit_ties = false; // count even-committee ties as half correct

    void validate() const
    {
        if (n < 1)
            throw std::invalid_argument("jury size must be >= 1");
        if (!(lambda >= 0.0 && lambda <= 1.0))
            throw std::invalid_argument("lambda must lie in [0, 1]");
        if (!(p > 0.5 && p < 1.0))
            throw std::domain_error("signal accuracy must lie in (1/2, 1)");
        if (!(eps > 0.0))
            throw std::invalid_argument("eps must be positive");
    }
};

/// Pr[Binomial(i, p) > i/2]: the chance a strict majority of i signals is
/// correct. An exact tie on even committees counts as incorrect; with
/// half_credit it contributes half its mass instead. Terms accumulate in
/// long double from the distribution mode outward, so absolute error stays
/// comfortably below 1e-13 through i = 2000.
inline double majority_correct_probability(int i, double p, bool half_credit = false)
{
    if (i < 1)
        throw std::invalid_argument("committee size must be >= 1");
    if (!(p > 0.5 && p < 1.0))
        throw std::domain_error("signal accuracy must lie in (1/2, 1)");

    const long double lp = p;
    const long double lq = 1.0L - lp;
    const int need = i / 2 + 1; // smallest strict-majority count

    // pmf at the mode, with the binomial factors interleaved against the
    // p/q powers to keep intermediate values in range.
    const int mode = std::min<int>(i, static_cast<int>((i + 1) * p));
    long double pmf = 1.0L;
    {
        int q_left = i - mode;
        for (int j = 1; j <= mode; ++j) {
            pmf *= lp * static_cast<long double>(i - mode + j) / static_cast<long double>(j);
            while (pmf > 1.0L && q_left > 0) {
                pmf *= lq;
                --q_left;
            }
        }
        while (q_left > 0) {
            pmf *= lq;
            --q_left;
        }
    }

    long double tail = 0.0L;
    // upward from the mode
    {
        long double term = pmf;
        for (int k = mode;; ++k) {
            if (k >= need)
                tail += term;
            if (k == i)
                break;
            term *= lp / lq * static_cast<long double>(i - k) / static_cast<long double>(k + 1);
            if (term == 0.0L)
                break;
        }
    }
    // downward from just below the mode
    if (mode > 0 && need < mode) {
        long double term = pmf;
        for (int k = mode; k > 0; --k) {
            term *= lq / lp * static_cast<long double>(k) / static_cast<long double>(i - k + 1);
            if (k - 1 >= need)
                tail += term;
            if (term == 0.0L)
                break;
            if (k - 1 < need)
                break;
        }
    }
    if (half_credit && i % 2 == 0) {
        // add half the mass of the exact tie at k = i/2
        const int half = i / 2;
        long double term = pmf;
        if (half >= mode) {
            for (int k = mode; k < half; ++k)
                term *= lp / lq * static_cast<long double>(i - k) / static_cast<long double>(k + 1);
        } else {
            for (int k = mode; k > half; --k)
                term *= lq / lp * static_cast<long double>(k) / static_cast<long double>(i - k + 1);
        }
        tail += term / 2.0L;
    }
    return static_cast<double>(std::min(1.0L, tail));
}

/// Per-config memo of P(i) and the insider utility g(i) = lambda/i + (1-lambda) P(i).
struct JuryTables {
    JuryConfig cfg;
    std::vector<double> P; // P[i-1]
    std::vector<double> g; // g[i-1]

    explicit JuryTables(const JuryConfig& c) : cfg(c)
    {
        cfg.validate();
        P.resize(static_cast<std::size_t>(cfg.n));
        g.resize(static_cast<std::size_t>(cfg.n));
        parallel_for(static_cast<std::size_t>(cfg.n), [&](std::size_t idx) {
            const int i = static_cast<int>(idx) + 1;
            P[idx] = majority_correct_probability(i, cfg.p, cfg.half_credit_ties);
            g[idx] = cfg.lambda / i + (1.0 - cfg.lambda) * P[idx];
        });
    }

    double participative(int i) const { return P[static_cast<std::size_t>(i - 1)]; }
    double insider(int i) const { return g[static_cast<std::size_t>(i - 1)]; }
};

inline double insider_utility(int i, const JuryTables& t)
{
    if (i < 1 || i > t.cfg.n)
        throw std::invalid_argument("oligarchy size out of range");
    return t.insider(i);
}

/// Hoeffding lower bound on the insider utility of O_i:
/// lambda/i + (1-lambda)(1 - exp(-2 i (p - 1/2)^2)) <= g(i).
inline double hoeffding_bound(int i, const JuryConfig& cfg)
{
    const double d = cfg.p - 0.5;
    return cfg.lambda / i + (1.0 - cfg.lambda) * (1.0 - std::exp(-2.0 * i * d * d));
}

/// Cheap necessary condition for stability of size i: the best utility O_i
/// could possibly offer, lambda/i + (1-lambda), must not fall below the
/// Hoeffding bound of the halving move or the near-doubling move. Sound by
/// construction (bound(i') <= g(i')); never discards a truly stable size.
inline bool hoeffding_filter_keeps(int i, const JuryConfig& cfg)
{
    const double ceiling = cfg.lambda / i + (1.0 - cfg.lambda);
    const int candidates[2] = {(i + 2) / 2, 2 * i - 1}; // ceil((i+1)/2) and 2i-1
    for (int i2 : candidates) {
        if (i2 == i || i2 < 1 || i2 > cfg.n)
            continue;
        if (ceiling < hoeffding_bound(i2, cfg) - cfg.eps)
            return false;
    }
    return true;
}

/// Does the motion to move from O_i to O_i2 pass? The vote is aggregated by
/// the incumbent rule: a strict majority of the i insiders must strictly
/// prefer the proposal (ties within eps stay with the status quo). Insiders
/// who survive into O_i2 compare insider utilities; insiders demoted by a
/// shrink keep only the participative term.
inline bool passes_motion(int i, int i2, const JuryTables& t)
{
    const JuryConfig& cfg = t.cfg;
    if (i < 1 || i > cfg.n || i2 < 1 || i2 > cfg.n)
        throw std::invalid_argument("oligarchy size out of range");
    if (i == i2)
        return false;
    const double gi = t.insider(i);
    long supporters = 0;
    if (t.insider(i2) > gi + cfg.eps)
        supporters += std::min(i, i2);
    if (i2 < i) {
        const double demoted_u = (1.0 - cfg.lambda) * t.participative(i2);
        if (demoted_u > gi + cfg.eps)
            supporters += i - i2;
    }
    return 2 * supporters > i;
}

struct StableFlags {
    bool full_check = false;
    bool right_maximal = false;
    bool halving_safe = false;
};

/// full_check scans every alternative size; right-maximal and halving-safe
/// are the two curve conditions that are supposed to characterize it.
inline StableFlags is_stable(int i, const JuryTables& t)
{
    const JuryConfig& cfg = t.cfg;
    if (i < 1 || i > cfg.n)
        throw std::invalid_argument("oligarchy size out of range");
    StableFlags flags;
    flags.full_check = true;
    for (int i2 = 1; i2 <= cfg.n; ++i2) {
        if (i2 != i && passes_motion(i, i2, t)) {
            flags.full_check = false;
            break;
        }
    }
    flags.right_maximal = true;
    for (int i2 = i + 1; i2 <= cfg.n; ++i2)
        if (!(t.insider(i) >= t.insider(i2) - cfg.eps)) {
            flags.right_maximal = false;
            break;
        }
    flags.halving_safe = true;
    for (int i2 = i / 2 + 1; i2 < i; ++i2) {
        if (!(t.insider(i) >= t.insider(i2) - cfg.eps)) {
            flags.halving_safe = false;
            break;
        }
    }
    return flags;
}

struct Discrepancy {
    int size = 0;
    StableFlags flags;
    int violating_i2 = 0; // motion that full_check saw but RM/HS logic missed, or 0
};

struct JuryStabilityResult {
    JuryConfig cfg;
    std::vector<int> stable_sizes; // sizes with full_check true
    std::vector<StableFlags> per_size; // index i-1
    std::vector<Discrepancy> discrepancies; // full_check != (RM && HS)
};

inline JuryStabilityResult stable_sizes(const JuryTables& t)
{
    JuryStabilityResult result;
    result.cfg = t.cfg;
    result.per_size.resize(static_cast<std::size_t>(t.cfg.n));
    for (int i = 1; i <= t.cfg.n; ++i) {
        const StableFlags flags = is_stable(i, t);
        result.per_size[static_cast<std::size_t>(i - 1)] = flags;
        if (flags.full_check)
            result.stable_sizes.push_back(i);
        if (flags.full_check != (flags.right_maximal && flags.halving_safe)) {
            Discrepancy d;
            d.size = i;
            d.flags = flags;
            for (int i2 = 1; i2 <= t.cfg.n; ++i2)
                if (i2 != i && passes_motion(i, i2, t)) {
                    d.violating_i2 = i2;
                    break;
                }
            result.discrepancies.push_back(d);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Grid sweeps
// ---------------------------------------------------------------------------

inline constexpr int kSmallOligarchyMax = 3;
inline constexpr int kLargeCommitteeMin = 10;

struct GridCell {
    double lambda = 0.0;
    double p = 0.0;
    std::vector<int> stable_sizes;
    std::string classification;
    bool filter_sound = true;           // the Hoeffding filter kept every stable size
    std::vector<Discrepancy> discrepancies;
};

inline std::string classify_sizes(const std::vector<int>& sizes)
{
    if (sizes.empty())
        return "none";
    bool small = false, mid = false, large = false;
    for (int i : sizes) {
        if (i <= kSmallOligarchyMax)
            small = true;
        else if (i >= kLargeCommitteeMin)
            large = true;
        else
            mid = true;
    }
    std::string out;
    const auto append = [&](const char* tag) {
        if (!out.empty())
            out += '+';
        out += tag;
    };
    if (small)
        append("small");
    if (mid)
        append("mid");
    if (large)
        append("large");
    return out;
}

struct GridResult {
    int n = 0;
    double eps = 0.0;
    std::vector<GridCell> cells; // row-major: lambda outer, p inner
};

inline GridResult stable_grid(const std::vector<double>& lambdas, const std::vector<double>& ps,
                              int n, double eps = 1e-12, bool half_credit = false,
                              unsigned threads = 0)
{
    GridResult grid;
    grid.n = n;
    grid.eps = eps;
    grid.cells.resize(lambdas.size() * ps.size());
    parallel_for(
        grid.cells.size(),
        [&](std::size_t idx) {
            GridCell& cell = grid.cells[idx];
            cell.lambda = lambdas[idx / ps.size()];
            cell.p = ps[idx % ps.size()];
            JuryConfig cfg;
            cfg.n = n;
            cfg.lambda = cell.lambda;
            cfg.p = cell.p;
            cfg.eps = eps;
            cfg.half_credit_ties = half_credit;
            const JuryTables tables(cfg);
            const JuryStabilityResult result = stable_sizes(tables);
            cell.stable_sizes = result.stable_sizes;
            cell.discrepancies = result.discrepancies;
            cell.classification = classify_sizes(cell.stable_sizes);
            for (int i : cell.stable_sizes)
                if (!hoeffding_filter_keeps(i, cfg))
                    cell.filter_sound = false;
        },
        threads);
    return grid;
}

// ---------------------------------------------------------------------------
// Dynamics
// ---------------------------------------------------------------------------

struct DynamicsResult {
    JuryConfig cfg;
    std::vector<std::vector<int>> adj;       // adj[i-1]: sizes reachable in one motion
    std::vector<int> stable;                  // full_check sizes
    std::vector<std::vector<int>> reachable;  // reachable[i-1]: stable sizes reachable from i
    std::vector<std::string> basin;           // basin[i-1]: class of the reachable sinks
};

inline std::string basin_class(const std::vector<int>& sinks)
{
    if (sinks.empty())
        return "none";
    bool dict = false, olig = false, committee = false;
    for (int s : sinks) {
        if (s == 1)
            dict = true;
        else if (s < kLargeCommitteeMin)
            olig = true;
        else
            committee = true;
    }
    if (dict && !olig && !committee)
        return "dictatorship";
    if (olig && committee)
        return "oligarchy+committee";
    if (olig)
        return "oligarchy";
    if (committee)
        return "committee";
    return "mixed";
}

inline DynamicsResult dynamics(const JuryConfig& cfg, unsigned threads = 0)
{
    DynamicsResult out;
    out.cfg = cfg;
    const JuryTables tables(cfg);
    const std::size_t n = static_cast<std::size_t>(cfg.n);
    out.adj.assign(n, {});
    parallel_for(
        n,
        [&](std::size_t idx) {
            const int i = static_cast<int>(idx) + 1;
            for (int i2 = 1; i2 <= cfg.n; ++i2)
                if (i2 != i && passes_motion(i, i2, tables))
                    out.adj[idx].push_back(i2);
        },
        threads);

    std::vector<char> stable_flag(n, 0);
    for (std::size_t idx = 0; idx < n; ++idx)
        if (out.adj[idx].empty()) {
            stable_flag[idx] = 1;
            out.stable.push_back(static_cast<int>(idx) + 1);
        }

    out.reachable.assign(n, {});
    out.basin.assign(n, "");
    parallel_for(
        n,
        [&](std::size_t start) {
            std::vector<char> seen(n, 0);
            std::deque<int> queue;
            seen[start] = 1;
            queue.push_back(static_cast<int>(start));
            while (!queue.empty()) {
                const int u = queue.front();
                queue.pop_front();
                for (int v : out.adj[static_cast<std::size_t>(u)]) {
                    if (!seen[static_cast<std::size_t>(v - 1)]) {
                        seen[static_cast<std::size_t>(v - 1)] = 1;
                        queue.push_back(v - 1);
                    }
                }
            }
            for (std::size_t idx = 0; idx < n; ++idx)
                if (seen[idx] && stable_flag[idx])
                    out.reachable[start].push_back(static_cast<int>(idx) + 1);
            out.basin[start] = basin_class(out.reachable[start]);
        },
        threads);
    return out;
}

} // namespace constlab::jury

#endif
